"""Character tables by the Dixon-Schneider method, with exact cyclotomic values.

Class matrices M_r[s, t] = #{x in K_r : x^-1 z_t in K_s} have the vectors
w_chi = (|K_t| chi(z_t) / chi(1))_t as common eigenvectors.  The common
eigenspaces are split modulo a prime l = 1 (mod e) with l > 2 sqrt|G|,
e the exponent of G.  Degrees follow from the normalisation
chi(1)^2 = |G| / sum_t w_t w_t* / |K_t|, and the value at a class of order
o is recovered exactly from the multiplicities of the o-th roots of unity
as eigenvalues, computed by a discrete Fourier sum in F_l.
"""

from __future__ import annotations

from math import gcd, isqrt

import numpy as np

from . import limits as _limits
from . import modular as ml
from .classes import conjugacy_classes
from .cyclotomic import CycloField
from .errors import HypothesisError, ResourceLimit
from .numtheory import factorize, is_prime, p_part, primitive_root, valuation
from .perm import conj, inv, mul, order, power
from .report import report_for, stopwatch
from .structure import SPORADIC as _SPORADIC

FORMAT_VERSION = 1

# cache consulted by character_table when no explicit cache is passed
_active_cache = None


def set_cache(cache):
    """Install (or with None, remove) the cache used for every table build."""
    global _active_cache
    _active_cache = cache


def working_prime(e, n, start=None):
    """Least prime l = 1 (mod e) with l > 2 sqrt(n) (and l > start if given)."""
    low = max(2 * isqrt(n) + 1, (start or 0) + 1)
    l = ((low - 1) // e + 1) * e + 1
    while not is_prime(l):
        l += e
    return l


def class_matrix(data, r):
    k = len(data)
    M = np.zeros((k, k), dtype=np.int64)
    xs = [inv(x) for x in data.class_elements(r)]
    for t, z in enumerate(data.reps):
        col = M[:, t]
        for xi in xs:
            col[data.class_of(mul(xi, z))] += 1
    return M


def class_constants(G, limits=None):
    """Array a[i, j, k] = #{(x, y) in K_i x K_j : x y = z_k}."""
    data = _checked_classes(G, limits)
    k = len(data)
    a = np.zeros((k, k, k), dtype=np.int64)
    for i in range(k):
        a[i] = class_matrix(data, i)
    return a


def _checked_classes(G, limits):
    lim = limits or _limits.DEFAULT
    if G.order() > lim.table_order:
        raise ResourceLimit(f"|G| = {G.order()} exceeds the table bound {lim.table_order}")
    return conjugacy_classes(G, lim)


class CharacterTable:
    """Irreducible characters as rows, classes (in ClassData order) as columns."""

    def __init__(self, data, e, ell, degrees, values):
        self.classes = data
        self.group = data.group
        self.e = e
        self.ell = ell
        self.field = CycloField(e)
        self.degrees = list(degrees)
        self.values = values            # int64 array (chars, classes, phi(e))

    def __len__(self):
        return len(self.degrees)

    @property
    def order(self):
        return self.group.order()

    def value(self, chi, i):
        return self.values[chi, i]

    def rational(self):
        return not self.values[:, :, 1:].any()

    def to_complex(self):
        z = np.exp(2j * np.pi * np.arange(self.field.phi) / self.e)
        return self.values @ z

    def format_value(self, chi, i):
        """The value as a polynomial in z_o, o the order of the class elements."""
        v = self.values[chi, i]
        if not v[1:].any():
            return str(int(v[0]))
        o = self.classes.orders[i]
        small = CycloField(o)
        basis = self._basis(o)
        c, *_ = np.linalg.lstsq(basis.T.astype(float), v.astype(float), rcond=None)
        c = np.rint(c).astype(np.int64)
        if not np.array_equal(c @ basis, v):
            return self.field.format(v)
        return small.format(c)

    def _basis(self, o):
        """Rows: zeta_o^j (j < phi(o)) written over the power basis of zeta_e."""
        cache = self.__dict__.setdefault("_bases", {})
        if o not in cache:
            step = self.e // o
            phi = CycloField(o).phi
            cache[o] = np.array([self.field.from_exponents({j * step: 1}) for j in range(phi)],
                                dtype=np.int64)
        return cache[o]

    def kernel_contains(self, chi, class_indices):
        d = self.degrees[chi]
        return all(self.values[chi, i, 0] == d and not self.values[chi, i, 1:].any()
                   for i in class_indices)

    # exact checks -------------------------------------------------------

    def _inner(self, a_row, b_row, weights):
        """sum_i weights[i] * a_row[i] * b_row[i] as an exact cyclotomic integer."""
        F = self.field
        total = F.zero()
        for i, w in enumerate(weights):
            total = total + w * F.mul(a_row[i], b_row[i])
        return total

    def check_orthogonality(self):
        """Raise AssertionError unless both orthogonality relations hold exactly."""
        n = self.order
        k = len(self)
        data = self.classes
        sizes = data.sizes
        invc = data.inverse
        rat_cols = [not self.values[:, i, 1:].any() for i in range(k)]
        vals = self.values
        # rows: sum_i |K_i| chi(g_i) psi(g_i^-1) = |G| [chi = psi]
        conj_rows = vals[:, invc, :]
        for a in range(k):
            for b in range(a, k):
                tot = self.field.zero()
                r = 0
                for i in range(k):
                    if rat_cols[i]:
                        r += sizes[i] * int(vals[a, i, 0]) * int(conj_rows[b, i, 0])
                    else:
                        tot = tot + sizes[i] * self.field.mul(vals[a, i], conj_rows[b, i])
                tot[0] += r
                want = n if a == b else 0
                if tot[0] != want or tot[1:].any():
                    raise AssertionError(f"row orthogonality fails for characters {a}, {b}")
        # columns: sum_chi chi(g_i) chi(g_j^-1) = |C(g_i)| [i = j]
        cent = data.centralizer_orders
        for i in range(k):
            for j in range(i, k):
                jj = invc[j]
                if rat_cols[i] and rat_cols[jj]:
                    s = int(np.dot(vals[:, i, 0], vals[:, jj, 0]))
                    ok = s == (cent[i] if i == j else 0)
                else:
                    tot = self.field.zero()
                    for c in range(k):
                        tot = tot + self.field.mul(vals[c, i], vals[c, jj])
                    ok = tot[0] == (cent[i] if i == j else 0) and not tot[1:].any()
                if not ok:
                    raise AssertionError(f"column orthogonality fails for classes {i}, {j}")
        if sum(d * d for d in self.degrees) != n:
            raise AssertionError("sum of squared degrees differs from |G|")
        if any(n % d for d in self.degrees):
            raise AssertionError("a degree does not divide |G|")

    def check_galois(self):
        """chi(g^k) = sigma_k(chi(g)) for generators k of (Z/e)^*."""
        F = self.field
        data = self.classes
        for k in _unit_generators(self.e):
            cols = [data.power_class(i, k) for i in range(len(data))]
            for chi in range(len(self)):
                for i, j in enumerate(cols):
                    if not np.array_equal(F.galois(self.values[chi, i], k), self.values[chi, j]):
                        raise AssertionError(f"Galois action inconsistent at character {chi}")

    # serialisation ----------------------------------------------------------

    def to_text(self):
        k = len(self)
        lines = [
            f"sylab-chartab {FORMAT_VERSION}",
            f"group {self.group.content_hash()}",
            f"exponent {self.e}",
            f"prime {self.ell}",
            f"classes {k}",
            "reps " + " ".join(",".join(map(str, r)) for r in self.classes.reps),
            "degrees " + " ".join(map(str, self.degrees)),
        ]
        for chi in range(k):
            lines.append(" ".join(",".join(map(str, self.values[chi, i].tolist()))
                                  for i in range(k)))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, G, text, limits=None):
        lines = text.splitlines()
        head = dict(line.split(" ", 1) for line in lines[:7])
        if head.get("sylab-chartab") != str(FORMAT_VERSION):
            raise ValueError("unsupported table format version")
        if head["group"] != G.content_hash():
            raise ValueError("table belongs to a different group")
        data = _checked_classes(G, limits)
        reps = [tuple(map(int, r.split(","))) for r in head["reps"].split()]
        if reps != data.reps:
            raise ValueError("class order differs from the stored table")
        e = int(head["exponent"])
        k = int(head["classes"])
        degrees = [int(x) for x in head["degrees"].split()]
        F = CycloField(e)
        values = np.zeros((k, k, F.phi), dtype=np.int64)
        for chi in range(k):
            cells = lines[7 + chi].split()
            for i, cell in enumerate(cells):
                values[chi, i] = [int(x) for x in cell.split(",")]
        return cls(data, e, int(head["prime"]), degrees, values)


def _unit_generators(e):
    gens = []
    seen = {1 % e}
    for k in range(2, e):
        if gcd(k, e) != 1 or k in seen:
            continue
        gens.append(k)
        frontier = list(seen)
        for x in frontier:
            y = x * k % e
            while y not in seen:
                seen.add(y)
                frontier.append(y)
                y = y * k % e
        # close under products with the new generator
        changed = True
        while changed:
            changed = False
            for x in list(seen):
                for g in gens:
                    y = x * g % e
                    if y not in seen:
                        seen.add(y)
                        changed = True
    return gens


class SplitFailure(ArithmeticError):
    pass


def character_table(G, limits=None, cache=None):
    """Exact character table of G, checked by both orthogonality relations."""
    if "chartab" in G.memo:
        return G.memo["chartab"]
    data = _checked_classes(G, limits)
    if cache is None:
        cache = _active_cache
    if cache is not None:
        T = cache.load_table(G, limits)
        if T is not None:
            G.memo["chartab"] = T
            return T
    e = data.exponent
    ell = None
    last = None
    for _ in range(4):
        ell = working_prime(e, G.order(), ell)
        try:
            T = _dixon_schneider(data, e, ell)
            T.check_orthogonality()
            break
        except (SplitFailure, AssertionError) as exc:
            last = exc
    else:
        raise AssertionError(f"character table construction failed: {last}")
    G.memo["chartab"] = T
    if cache is not None:
        cache.store_table(G, T)
    return T


def _dixon_schneider(data, e, ell):
    n = data.group.order()
    k = len(data)
    sizes = data.sizes
    spaces = [np.eye(k, dtype=np.int64)]
    order = sorted(range(1, k), key=lambda i: (sizes[i], i))
    for r in order:
        if all(B.shape[1] == 1 for B in spaces):
            break
        M = class_matrix(data, r)
        nxt = []
        for B in spaces:
            if B.shape[1] == 1:
                nxt.append(B)
                continue
            R = ml.restrict(M, B, ell)
            lams = ml.roots(ml.charpoly(R, ell), ell)
            if len(lams) == 1:
                nxt.append(B)
                continue
            dim = 0
            for lam in lams:
                N = ml.nullspace((R - lam * np.eye(len(R), dtype=np.int64)) % ell, ell)
                dim += N.shape[1]
                nxt.append(ml.matmul(B, N, ell))
            if dim != B.shape[1]:
                raise SplitFailure("class matrix not diagonalisable modulo the working prime")
        spaces = nxt
    if len(spaces) != k or any(B.shape[1] != 1 for B in spaces):
        raise SplitFailure("common eigenspaces did not split into lines")
    # eigenvectors normalised at the identity class give central characters
    omegas = []
    for B in spaces:
        v = B[:, 0] % ell
        if v[0] == 0:
            raise SplitFailure("eigenvector vanishes at the identity class")
        omegas.append(v * pow(int(v[0]), ell - 2, ell) % ell)
    inv_sizes = [pow(h, ell - 2, ell) for h in sizes]
    invc = data.inverse
    root = pow(primitive_root(ell), (ell - 1) // e, ell)
    degrees, mod_values = [], []
    for w in omegas:
        s = sum(int(w[i]) * int(w[invc[i]]) % ell * inv_sizes[i] for i in range(k)) % ell
        if s == 0:
            raise SplitFailure("degenerate normalisation")
        d2 = n * pow(s, ell - 2, ell) % ell
        d = _degree(d2, n, ell)
        degrees.append(d)
        mod_values.append([int(w[i]) * d % ell * inv_sizes[i] % ell for i in range(k)])
    F = CycloField(e)
    values = np.zeros((k, k, F.phi), dtype=np.int64)
    powcache = {}
    for chi in range(k):
        for i in range(k):
            values[chi, i] = _lift(data, i, mod_values[chi], e, ell, root, F, powcache)
    # trivial character first, then by degree and value vector
    trivial = [not (values[c, :, 0] != 1).any() and not values[c, :, 1:].any() for c in range(k)]
    ranked = sorted(range(k), key=lambda c: (not trivial[c], degrees[c], values[c].ravel().tolist()))
    return CharacterTable(data, e, ell, [degrees[c] for c in ranked], values[ranked])


def _degree(d2, n, ell):
    for d in range(1, isqrt(n) + 1):
        if n % d == 0 and d * d % ell == d2:
            return d
    raise SplitFailure("no degree matches the normalisation")


def _power_classes(data, i, powcache):
    """List c with c[j] = class of rep_i ** j, 0 <= j < order."""
    hit = powcache.get(i)
    if hit is None:
        o = data.orders[i]
        rep = data.reps[i]
        hit = [0] * o
        g = tuple(range(len(rep)))
        for j in range(o):
            hit[j] = 0 if j == 0 else data.class_of(g)
            g = mul(g, rep)
        powcache[i] = hit
    return hit


def _lift(data, i, chi_mod, e, ell, root, F, powcache):
    o = data.orders[i]
    if o == 1:
        return F.integer(chi_mod[i])
    pcs = _power_classes(data, i, powcache)
    zo = pow(root, e // o, ell)               # image of a primitive o-th root
    zo_inv = pow(zo, ell - 2, ell)
    inv_o = pow(o, ell - 2, ell)
    vals = [chi_mod[c] for c in pcs]
    counts = {}
    for k in range(o):
        step = pow(zo_inv, k, ell)
        acc = 0
        x = 1
        for j in range(o):
            acc += vals[j] * x
            x = x * step % ell
        m = acc % ell * inv_o % ell
        if m:
            if m > ell // 2:
                raise SplitFailure("eigenvalue multiplicity out of range")
            counts[k * (e // o)] = m
    return F.from_exponents(counts)


# counting functions -----------------------------------------------------------

def irr_pprime_count(T, p):
    return sum(1 for d in T.degrees if d % p)


def defect_zero_count(T, p):
    full = p_part(T.order, p)
    return sum(1 for d in T.degrees if p_part(d, p) == full)


def _local_group(G, p):
    from .sylow import local_data
    ld = local_data(G, p)
    N = ld.N
    if N.name is None:
        N.name = f"N_{G.name or 'G'}(P{p})"
    return ld, N


def mckay_check(G, p, limits=None):
    """Compare |Irr_p'(G)| with |Irr_p'(N_G(P))| from two independently built tables."""
    if p == 2 or not is_prime(p):
        raise HypothesisError("the check is stated for odd primes")
    with stopwatch() as sw:
        ld, N = _local_group(G, p)
        holds = ld.automizer_order % 2 == 1
        a = irr_pprime_count(character_table(G, limits), p)
        b = irr_pprime_count(character_table(N, limits), p)
    q = {"automizer_order": ld.automizer_order, "irr_pprime_G": a, "irr_pprime_N": b,
         "normalizer_order": N.order()}
    hyp = "HOLDS" if holds else "FAILS"
    if a != b:
        return report_for("mckay", G, p, "FAIL", hypothesis=hyp, quantities=q,
                          witness={"irr_pprime_G": a, "irr_pprime_N": b},
                          seconds=sw["seconds"])
    verdict, flags = ("PASS", []) if holds else ("VACUOUS", ["VACUOUS-HYPOTHESIS"])
    return report_for("mckay", G, p, verdict, hypothesis=hyp, quantities=q, flags=flags,
                      seconds=sw["seconds"])


# linear characters of a Sylow subgroup ------------------------------------------

def _abelianization(P, bound):
    """Cosets of P' in P: (key function, list of keys, identity key)."""
    from .normal import derived_subgroup
    D = derived_subgroup(P)
    index = P.order() // D.order()
    if index > bound:
        raise ResourceLimit(f"|P/P'| = {index} exceeds the bound {bound}")
    key = D.chain.coset_key
    ident = key(tuple(range(P.degree)))
    keys = [ident]
    seen = {ident}
    for x in keys:
        for g in P.raw_generators:
            y = key(mul(x, g))
            if y not in seen:
                seen.add(y)
                keys.append(y)
    assert len(keys) == index
    return key, keys


def linear_characters(P, bound=4096):
    """Linear characters of P as tuples of exponents mod m over the P'-cosets.

    The value at the coset ``keys[i]`` is exp(2 pi i chi[i] / m), m the exponent
    of P/P'.  Characters are found one generator at a time: a partial
    assignment on generators must extend consistently along every edge of the
    Cayley graph of the subgroup they span.
    """
    key, keys = _abelianization(P, bound)
    pos = {k: i for i, k in enumerate(keys)}
    m = 1
    for k in keys:
        m = m * order(k) // gcd(m, order(k))
    # generators that actually enlarge the span in P/P'
    gens, span = [], {keys[0]}
    for g in P.raw_generators:
        kg = key(g)
        if kg in span:
            continue
        gens.append(kg)
        span = _span(gens, key, keys[0])
    chars = [{keys[0]: 0}]
    for j in range(len(gens)):
        sub = gens[: j + 1]
        nxt = []
        for part in chars:
            for v in range(m):
                full = _extend(part, sub, v, key, m)
                if full is not None:
                    nxt.append(full)
        chars = nxt
    out = sorted({tuple(c[k] for k in keys) for c in chars})
    if len(out) != len(keys):
        raise AssertionError("linear character count differs from |P/P'|")
    return keys, pos, m, out


def _span(gens, key, ident):
    seen = {ident}
    queue = [ident]
    for x in queue:
        for g in gens:
            y = key(mul(x, g))
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def _extend(part, gens, v, key, m):
    """Extend ``part`` (defined on <gens[:-1]>) by value v on gens[-1], or None."""
    vals = dict(part)
    last = gens[-1]
    if last in vals:
        return vals if vals[last] == v % m else None
    # every element of the larger span is x * last^i * ... reached by BFS
    frontier = list(vals)
    for x in frontier:
        for g, gv in [(last, v)] + [(g, None) for g in gens[:-1]]:
            y = key(mul(x, g))
            w = (vals[x] + (gv if gv is not None else vals[key(g)])) % m
            if y in vals:
                if vals[y] != w:
                    return None
            else:
                vals[y] = w
                frontier.append(y)
    return vals


def sylow_abelianization_orbits(G, p, limits=None):
    """Lengths of N_G(P)-orbits on the nontrivial linear characters of P."""
    from .sylow import local_data, sylow
    P = sylow(G, p)
    if P.is_trivial():
        raise HypothesisError("the Sylow subgroup is trivial")
    ld = local_data(G, p)
    keys, pos, m, chars = linear_characters(P)
    key = _abelianization(P, len(keys))[0]
    action = []
    for n in ld.N.raw_generators:
        action.append([pos[key(conj(k, n))] for k in keys])
    trivial = tuple([0] * len(keys))
    seen = set()
    lengths = []
    for c in chars:
        if c == trivial or c in seen:
            continue
        orb = [c]
        seen.add(c)
        for x in orb:
            for img in action:
                # (lambda^n)(k) = lambda(k^(n^-1)); the orbit is the same either way
                y = tuple(x[img[i]] for i in range(len(keys)))
                if y not in seen:
                    seen.add(y)
                    orb.append(y)
        lengths.append(len(orb))
    return sorted(lengths)


def sporadic_orbit_check(G, p, limits=None):
    """For a sporadic simple G with noncyclic P, every orbit length is even."""
    from .structure import identify_simple, is_simple
    from .sylow import is_cyclic_pgroup, sylow
    if p == 2 or not is_prime(p):
        raise HypothesisError("the check is stated for odd primes")
    with stopwatch() as sw:
        P = sylow(G, p)
        sporadic = False
        if is_simple(G):
            fid = identify_simple(G, assume_simple=True)
            sporadic = fid.kind == "named" and fid.label in _SPORADIC
        cyclic = is_cyclic_pgroup(P)
        q = {"sylow_order": P.order(), "sylow_cyclic": cyclic, "sporadic": sporadic}
        holds = sporadic and not cyclic
        lengths = []
        if not P.is_trivial():
            lengths = sylow_abelianization_orbits(G, p, limits)
        q["orbit_lengths"] = lengths
    hyp = "HOLDS" if holds else "FAILS"
    if not holds:
        return report_for("lemma33-orbits", G, p, "VACUOUS", hypothesis=hyp, quantities=q,
                          seconds=sw["seconds"])
    odd = [n for n in lengths if n % 2]
    if odd:
        return report_for("lemma33-orbits", G, p, "FAIL", hypothesis=hyp, quantities=q,
                          witness={"odd_orbit_length": odd[0]}, seconds=sw["seconds"])
    return report_for("lemma33-orbits", G, p, "PASS", hypothesis=hyp, quantities=q,
                      seconds=sw["seconds"])
