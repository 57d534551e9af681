"""Normal subgroups, composition factors and identification of simple groups."""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from functools import lru_cache

from .classes import conjugacy_classes
from .errors import HypothesisError, ResourceLimit
from .normal import normal_closure, quotient_representation
from .numtheory import is_prime, lcm, prime_power
from .report import report_for, stopwatch
from .sylow import is_cyclic_pgroup, local_data, sylow

TABLE_BOUND = 10**9
LATTICE_LIMIT = 2000


@dataclass(frozen=True)
class SimpleFactorId:
    kind: str                      # cyclic | alternating | psl2 | named | unidentified
    order: int
    n: int | None = None           # prime for cyclic, degree for alternating
    q: int | None = None
    p: int | None = None
    f: int | None = None
    label: str | None = None       # for named groups, e.g. "PSL3(4)"
    psl2_forms: tuple = ()         # every q with PSL2(q) isomorphic to this group
    aliases: tuple = ()
    class_count: int | None = None
    max_element_order: int | None = field(default=None, compare=False)

    def __str__(self):
        if self.kind == "cyclic":
            return f"C{self.n}"
        if self.kind == "alternating":
            return f"A{self.n}"
        if self.kind == "psl2":
            return f"PSL2({self.q})"
        if self.kind == "named":
            return self.label
        return f"unidentified({self.order})"

    def to_dict(self):
        d = {"kind": self.kind, "order": self.order, "label": str(self)}
        if self.psl2_forms:
            d["psl2_forms"] = list(self.psl2_forms)
        if self.aliases:
            d["aliases"] = list(self.aliases)
        return d


# simple-order table --------------------------------------------------------

def _prime_powers(limit):
    return [q for q in range(2, limit) if prime_power(q)]


def _psl(n, q):
    o = q ** (n * (n - 1) // 2)
    for i in range(2, n + 1):
        o *= q ** i - 1
    return o // math.gcd(n, q - 1)


def _psu(n, q):
    o = q ** (n * (n - 1) // 2)
    for i in range(2, n + 1):
        o *= q ** i - (-1) ** i
    return o // math.gcd(n, q + 1)


def _psp(m, q):
    o = q ** (m * m)
    for i in range(1, m + 1):
        o *= q ** (2 * i) - 1
    return o // math.gcd(2, q - 1)


def _omega_plus(m, q):
    o = q ** (m * (m - 1)) * (q ** m - 1)
    for i in range(1, m):
        o *= q ** (2 * i) - 1
    return o // math.gcd(4, q ** m - 1)


def _omega_minus(m, q):
    o = q ** (m * (m - 1)) * (q ** m + 1)
    for i in range(1, m):
        o *= q ** (2 * i) - 1
    return o // math.gcd(4, q ** m + 1)


SPORADIC = {
    "M11": 7920, "M12": 95040, "J1": 175560, "M22": 443520, "J2": 604800,
    "M23": 10200960, "HS": 44352000, "J3": 50232960, "M24": 244823040,
    "McL": 898128000,
}

# labels that name the same group; the value is the canonical label
ALIASES = {
    "PSL2(4)": "A5", "PSL2(5)": "A5", "PSL2(9)": "A6", "PSL3(2)": "PSL2(7)",
    "PSL4(2)": "A8", "PSp4(3)": "PSU4(2)",
}


def _raw_entries(bound):
    out = []
    n = 5
    while math.factorial(n) // 2 < bound:
        out.append((f"A{n}", math.factorial(n) // 2))
        n += 1
    qs = _prime_powers(2000)
    for q in qs:
        if q >= 4:
            out.append((f"PSL2({q})", _psl(2, q)))
        for d in range(3, 12):
            out.append((f"PSL{d}({q})", _psl(d, q)))
        if q >= 3:
            out.append((f"PSU3({q})", _psu(3, q)))
        for d in range(4, 12):
            out.append((f"PSU{d}({q})", _psu(d, q)))
        if q >= 3:
            out.append((f"PSp4({q})", _psp(2, q)))
        for m in range(3, 8):
            out.append((f"PSp{2 * m}({q})", _psp(m, q)))
            if q % 2:
                out.append((f"O{2 * m + 1}({q})", _psp(m, q)))
        for m in range(4, 8):
            out.append((f"O{2 * m}+({q})", _omega_plus(m, q)))
            out.append((f"O{2 * m}-({q})", _omega_minus(m, q)))
        if q >= 3:
            out.append((f"G2({q})", q ** 6 * (q ** 6 - 1) * (q ** 2 - 1)))
        out.append((f"3D4({q})", q ** 12 * (q ** 8 + q ** 4 + 1) * (q ** 6 - 1) * (q ** 2 - 1)))
        out.append((f"F4({q})", q ** 24 * (q ** 12 - 1) * (q ** 8 - 1) * (q ** 6 - 1) * (q ** 2 - 1)))
    for m in range(1, 6):
        q = 2 ** (2 * m + 1)
        out.append((f"Sz({q})", q * q * (q * q + 1) * (q - 1)))
        q = 3 ** (2 * m + 1)
        out.append((f"R({q})", q ** 3 * (q ** 3 + 1) * (q - 1)))
    out.append(("2F4(2)'", 17971200))
    out.extend(SPORADIC.items())
    return [(label, o) for label, o in out if o < bound]


@lru_cache(maxsize=None)
def simple_order_table(bound=TABLE_BOUND):
    """Map order -> sorted tuple of canonical labels of simple groups of that order."""
    table = {}
    for label, o in _raw_entries(bound):
        label = ALIASES.get(label, label)
        table.setdefault(o, set()).add(label)
    return {o: tuple(sorted(labels)) for o, labels in sorted(table.items())}


def _psl2_forms(label):
    forms = [int(k[5:-1]) for k, v in ALIASES.items() if v == label and k.startswith("PSL2(")]
    if label.startswith("PSL2("):
        forms.append(int(label[5:-1]))
    return tuple(sorted(forms))


def _make_id(label, order):
    aliases = tuple(sorted(k for k, v in ALIASES.items() if v == label))
    forms = _psl2_forms(label)
    if label.startswith("A") and label[1:].isdigit():
        return SimpleFactorId("alternating", order, n=int(label[1:]), psl2_forms=forms,
                              aliases=aliases)
    if label.startswith("PSL2("):
        q = int(label[5:-1])
        p, f = prime_power(q)
        return SimpleFactorId("psl2", order, q=q, p=p, f=f, psl2_forms=forms, aliases=aliases)
    return SimpleFactorId("named", order, label=label, psl2_forms=forms, aliases=aliases)


# normal subgroups ------------------------------------------------------------

def _same(A, B):
    return A.order() == B.order() and A.is_subgroup_of(B)


def normal_subgroups(G, limit=LATTICE_LIMIT, limits=None):
    """All normal subgroups of G as joins of normal closures of classes, by order."""
    if "normals" in G.memo:
        return G.memo["normals"]
    data = conjugacy_classes(G, limits)
    found = [G.trivial(G.degree)]

    def add(H):
        for K in found:
            if _same(H, K):
                return False
        found.append(H)
        if len(found) > limit:
            raise ResourceLimit(f"more than {limit} normal subgroups")
        return True

    for r in data.reps[1:]:
        add(normal_closure(G, [r]))
    i = 1
    while i < len(found):
        A = found[i]
        for B in found[1:i]:
            if A.order() == G.order() or B.order() == G.order():
                continue
            if A.is_subgroup_of(B) or B.is_subgroup_of(A):
                continue
            add(G.subgroup(A.raw_generators + B.raw_generators))
        i += 1
    found.sort(key=lambda H: H.order())
    G.memo["normals"] = found
    return found


def maximal_normal_subgroup(G, tiebreak="largest", limits=None):
    """A normal subgroup M with G/M simple, or None if G is simple.

    ``tiebreak="largest"`` takes a proper normal subgroup of largest order
    (the first found in class order on ties); ``"smallest"`` takes the
    smallest maximal one, which gives a different series for cross-checks.
    """
    if G.order() == 1:
        raise ValueError("the trivial group has no maximal normal subgroup")
    proper = [H for H in normal_subgroups(G, limits=limits) if H.order() < G.order()]
    if len(proper) == 1:
        return None
    if tiebreak == "largest":
        top = max(H.order() for H in proper)
        return next(H for H in proper if H.order() == top)
    if tiebreak == "smallest":
        maximal = [H for H in proper
                   if not any(K.order() > H.order() and H.is_subgroup_of(K) for K in proper)]
        return min(maximal, key=lambda H: H.order())
    raise ValueError(f"unknown tiebreak {tiebreak!r}")


def is_simple(G, limits=None):
    return G.order() > 1 and maximal_normal_subgroup(G, limits=limits) is None


def identify_simple(S, assume_simple=False, limits=None):
    """Identify a simple group by its order (ambiguous orders by element orders)."""
    n = S.order()
    if is_prime(n):
        return SimpleFactorId("cyclic", n, n=n)
    if not assume_simple and not is_simple(S, limits):
        raise HypothesisError("group is not simple")
    if n >= TABLE_BOUND:
        return SimpleFactorId("unidentified", n)
    labels = simple_order_table().get(n)
    if not labels:
        return SimpleFactorId("unidentified", n)
    if len(labels) == 1:
        return _make_id(labels[0], n)
    if n != 20160:
        raise AssertionError(f"unexpected order coincidence at {n}: {labels}")
    data = conjugacy_classes(S, limits)
    maxo = max(data.orders)
    label = "A8" if 15 in data.orders else "PSL3(4)"
    return replace(_make_id(label, n), class_count=len(data), max_element_order=maxo)


# composition series ------------------------------------------------------------

@dataclass
class Factor:
    id: SimpleFactorId
    group: object                  # a PermGroup realising the factor

    def __str__(self):
        return str(self.id)


def composition_series(G, tiebreak="largest", limits=None):
    """Factors G_i/G_{i+1} of a composition series, top first, with their groups."""
    key = ("series", tiebreak)
    if key in G.memo:
        return G.memo[key]
    from .catalog import cyclic
    factors = []
    H = G
    while H.order() > 1:
        M = maximal_normal_subgroup(H, tiebreak, limits)
        if M is None:
            factors.append(Factor(identify_simple(H, assume_simple=True, limits=limits), H))
            break
        index = H.order() // M.order()
        if is_prime(index):
            factors.append(Factor(SimpleFactorId("cyclic", index, n=index), cyclic(index)))
        else:
            Q = quotient_representation(H, M, limits).group
            if not is_simple(Q, limits):
                raise AssertionError("quotient by a maximal normal subgroup is not simple")
            factors.append(Factor(identify_simple(Q, assume_simple=True, limits=limits), Q))
        H = M
    G.memo[key] = factors
    return factors


def composition_factors(G, tiebreak="largest", limits=None):
    return [f.id for f in composition_series(G, tiebreak, limits)]


def sylow_cyclic(S, p):
    if S.order() % p:
        return True
    return is_cyclic_pgroup(sylow(S, p))


def t11_factor_predicate(fid, S, p):
    """Sylow p-subgroups of S cyclic, or S = PSL2(q) with q = p^f = 3 mod 4."""
    if sylow_cyclic(S, p):
        return True
    for q in fid.psl2_forms:
        pf = prime_power(q)
        if pf and pf[0] == p and q % 4 == 3:
            return True
    return False


def check_theorem_1_1(G, p, limits=None):
    if p % 2 == 0:
        raise HypothesisError("the check is stated for odd primes")
    with stopwatch() as sw:
        ld = local_data(G, p)
        holds = ld.automizer_order % 2 == 1
        series = composition_series(G, limits=limits)
        preds = [t11_factor_predicate(f.id, f.group, p) for f in series]
    failing = [str(f) for f, ok in zip(series, preds) if not ok]
    quantities = {
        "automizer_order": ld.automizer_order,
        "nc_order": ld.nc_order,
        "sylow_order": ld.P.order(),
        "factors": [str(f) for f in series],
        "factor_predicates": preds,
        "failing_factors": failing,
        # contrapositive: a failing factor forces an even automizer
        "contrapositive": "violated" if failing and holds else "consistent",
    }
    if holds:
        if failing:
            return report_for("t11", G, p, "FAIL", hypothesis="HOLDS", quantities=quantities,
                              witness={"factor": failing[0]}, seconds=sw["seconds"])
        verdict = "PASS"
    else:
        verdict = "VACUOUS"
    return report_for("t11", G, p, verdict, hypothesis="HOLDS" if holds else "FAILS",
                      quantities=quantities, seconds=sw["seconds"])
