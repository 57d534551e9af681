"""p-blocks, defect groups, Brauer correspondents, radical subgroups and weights.

Block membership is read off central characters omega_chi(C) = |C| chi(g)/chi(1),
which are cyclotomic integers.  They are reduced by the ring map
Z[zeta_e] -> GF(p^k) sending zeta_e to a fixed primitive e'-th root of unity,
where e = p^a e' with p not dividing e' and k is the order of p mod e'.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import limits as _limits
from . import search
from .chartab import character_table
from .classes import conjugacy_classes
from .errors import HypothesisError, ResourceLimit
from .gf import least_cyclotomic_factor
from .group import PermGroup
from .numtheory import is_prime, p_part, valuation
from .perm import Permutation, conj
from .report import report_for, stopwatch
from .sylow import local_data, sylow


class Reduction:
    """The map Z[zeta_e] -> GF(p^k) = GF(p)[x]/(g) sending zeta_e to x.

    Here e' is the p'-part of e, k the order of p mod e', and g the least
    monic irreducible factor of Phi_e' mod p, so x is a primitive e'-th root
    of unity.  Images are encoded as integers sum(c_i p^i) as in ``gf``; in
    particular 0 is the zero of the field.
    """

    def __init__(self, p, e):
        self.p = p
        self.e = e
        e1 = e // p_part(e, p)
        self.e1 = e1
        self.modulus = least_cyclotomic_factor(p, e1) if e1 > 1 else (0, 1)
        self.k = len(self.modulus) - 1
        g = np.array(self.modulus, dtype=np.int64)
        # row j holds the coefficients of x^j mod g
        pw = np.zeros((e1, self.k), dtype=np.int64)
        cur = np.zeros(self.k + 1, dtype=np.int64)
        cur[0] = 1
        for j in range(e1):
            if cur[self.k]:
                cur = (cur - cur[self.k] * g) % p
            pw[j] = cur[: self.k]
            cur = np.concatenate(([0], cur[:-1]))
        self.powers = pw

    def __call__(self, vec, e=None):
        """Image of a coefficient vector over the power basis of zeta_e (e | self.e)."""
        step = self.e // (e or self.e)
        c = np.asarray(vec, dtype=np.int64) % self.p
        idx = (np.arange(len(c)) * step) % self.e1
        acc = (c @ self.powers[idx]) % self.p
        return self.encode(acc)

    def encode(self, coeffs):
        n = 0
        for c in reversed(coeffs):
            n = n * self.p + int(c)
        return n

    def decode(self, n):
        out = [0] * self.k
        for i in range(self.k):
            n, out[i] = divmod(n, self.p)
        return out

    def add(self, a, b):
        p = self.p
        return self.encode([(x + y) % p for x, y in zip(self.decode(a), self.decode(b))])


def central_characters(T, red):
    """Reduced central characters: one tuple (over classes) per character."""
    sizes = T.classes.sizes
    out = []
    for chi in range(len(T)):
        d = T.degrees[chi]
        row = []
        for i, h in enumerate(sizes):
            num = h * T.values[chi, i]
            if (num % d).any():
                raise AssertionError("central character is not an algebraic integer")
            row.append(red(num // d, T.e))
        out.append(tuple(row))
    return out


@dataclass
class Block:
    index: int
    characters: list
    defect: int
    central: tuple               # reduced central character, one entry per class
    defect_class: int | None = None
    defect_group: PermGroup | None = None

    @property
    def is_principal(self):
        return 0 in self.characters


@dataclass
class BlockPartition:
    p: int
    table: object
    reduction: Reduction
    blocks: list = field(default_factory=list)

    def block_of(self, chi):
        for B in self.blocks:
            if chi in B.characters:
                return B
        raise KeyError(chi)

    @property
    def principal(self):
        return self.blocks[0]

    def summary(self):
        return [{"characters": B.characters, "degrees": [self.table.degrees[c] for c in B.characters],
                 "defect": B.defect} for B in self.blocks]


def block_distribution(G, T, p, reduction=None):
    """Partition Irr(G) into p-blocks via reduced central characters."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    red = reduction or Reduction(p, T.e)
    omegas = central_characters(T, red)
    groups = {}
    for chi, w in enumerate(omegas):
        groups.setdefault(w, []).append(chi)
    a = valuation(T.order, p)
    blocks = []
    for w, chars in sorted(groups.items(), key=lambda kv: kv[1][0]):
        d = a - min(valuation(T.degrees[c], p) for c in chars)
        blocks.append(Block(len(blocks), chars, d, w))
    part = BlockPartition(p, T, red, blocks)
    for B in blocks:
        if (B.defect == 0) != (len(B.characters) == 1):
            raise AssertionError("defect zero must coincide with singleton blocks")
    return part


def defect_group(G, partition, B):
    """A defect group of B: a Sylow p-subgroup of C_G(x) for a defect class of B."""
    if B.defect_group is not None:
        return B.defect_group
    p = partition.p
    data = partition.table.classes
    if B.defect == 0:
        B.defect_class = None
        B.defect_group = PermGroup.trivial(G.degree)
        return B.defect_group
    best = None
    for i in data.p_regular(p):
        if B.central[i] == 0:
            continue
        v = valuation(data.centralizer_orders[i], p)
        if best is None or v < best[0]:
            best = (v, i)
    if best is None or best[0] != B.defect:
        raise AssertionError("no defect class matches the block defect")
    i = best[1]
    C = search.centralizer(G, Permutation._raw(data.reps[i]))
    D = sylow(C, p)
    if D.order() != p ** B.defect:
        raise AssertionError("defect group order differs from p^d")
    B.defect_class = i
    B.defect_group = D
    return D


def _fusion(G_data, H_data):
    return [G_data.class_of(r) for r in H_data.reps]


def induced_central(partition_G, H_omega, fusion):
    """lambda_b^G(C) = sum of lambda_b over the H-classes fused into C."""
    red = partition_G.reduction
    k = len(partition_G.table.classes)
    out = [0] * k
    for j, i in enumerate(fusion):
        out[i] = red.add(out[i], H_omega[j])
    return tuple(out)


def brauer_correspondent(G, p, B, D, partition=None, limits=None):
    """(H, partition of H, block b) with b^G = B, where H = N_G(D)."""
    if partition is None:
        partition = block_distribution(G, character_table(G, limits), p)
    if D.is_trivial():
        return G, partition, B
    H = _normalizer_of(G, D, p)
    TH = character_table(H, limits)
    PH = block_distribution(H, TH, p, reduction=partition.reduction)
    fusion = _fusion(partition.table.classes, TH.classes)
    matches = [b for b in PH.blocks
               if b.defect == B.defect and induced_central(partition, b.central, fusion) == B.central]
    if len(matches) != 1:
        raise AssertionError(f"{len(matches)} blocks of N_G(D) induce to the given block")
    return H, PH, matches[0]


def _normalizer_of(G, D, p):
    ld = local_data(G, p)
    if D.order() == ld.P.order() and D.equals(ld.P):
        return ld.N
    H = search.normalizer(G, D)
    H.name = f"N({G.name or 'G'},D)"
    return H


def height_zero_count(T, B, p):
    a = valuation(T.order, p) - B.defect
    return sum(1 for c in B.characters if valuation(T.degrees[c], p) == a)


def amk_check(G, p, limits=None):
    """Height-zero counts of each block and its Brauer correspondent agree."""
    if p == 2 or not is_prime(p):
        raise HypothesisError("the check is stated for odd primes")
    with stopwatch() as sw:
        ld = local_data(G, p)
        holds = ld.automizer_order % 2 == 1
        T = character_table(G, limits)
        part = block_distribution(G, T, p)
        rows = []
        bad = None
        for B in part.blocks:
            D = defect_group(G, part, B)
            H, PH, b = brauer_correspondent(G, p, B, D, part, limits)
            left = height_zero_count(T, B, p)
            right = height_zero_count(PH.table, b, p)
            rows.append({"block": B.index, "defect": B.defect, "G_side": left,
                         "N_side": right, "normalizer_order": H.order()})
            if left != right and bad is None:
                bad = rows[-1]
    q = {"automizer_order": ld.automizer_order, "blocks": rows}
    hyp = "HOLDS" if holds else "FAILS"
    if bad is not None:
        return report_for("amk", G, p, "FAIL", hypothesis=hyp, quantities=q,
                          witness=dict(bad), seconds=sw["seconds"])
    verdict, flags = ("PASS", []) if holds else ("VACUOUS", ["VACUOUS-HYPOTHESIS"])
    return report_for("amk", G, p, verdict, hypothesis=hyp, quantities=q, flags=flags,
                      seconds=sw["seconds"])


# radical subgroups and weights -----------------------------------------------

def _p_subgroups(P, bound):
    """P-class representatives of all subgroups of P, as frozen element sets."""
    from .perm import power
    if P.order() > bound:
        raise ResourceLimit(f"|P| = {P.order()} exceeds the radical enumeration bound {bound}")
    p_elems = P.elements()
    ident = tuple(range(P.degree))
    layer = [frozenset([ident])]
    reps = list(layer)
    gens = P.raw_generators
    while layer:
        seen = set()
        nxt = []
        for H in layer:
            for x in p_elems:
                if x in H:
                    continue
                if power(x, _prime_of(P)) not in H:
                    continue
                if any(conj(h, x) not in H for h in H):
                    continue
                K = _generate_with(H, x)
                if K in seen:
                    continue
                orbit = _subgroup_orbit(K, gens)
                seen.update(orbit)
                nxt.append(K)
        reps.extend(nxt)
        layer = nxt
    return reps


def _prime_of(P):
    n = P.order()
    p = 2
    while n % p:
        p += 1
    return p


def _generate_with(H, x):
    """<H, x> for x normalizing H: the union of the cosets H x^i."""
    from .perm import mul
    out = set(H)
    y = x
    while y not in H:
        out.update(mul(h, y) for h in H)
        y = mul(y, x)
    return frozenset(out)


def _subgroup_orbit(K, gens):
    orbit = [K]
    seen = {K}
    for A in orbit:
        for g in gens:
            B = frozenset(conj(a, g) for a in A)
            if B not in seen:
                seen.add(B)
                orbit.append(B)
    return orbit


def _as_group(G, elems):
    """A PermGroup for a subgroup given by its element set."""
    if len(elems) == 1:
        return PermGroup.trivial(G.degree)
    gens = []
    span = {tuple(range(G.degree))}
    for e in sorted(elems):
        if e not in span:
            gens.append(e)
            span = search._generate(gens, G.degree)
    return G.subgroup(gens, order=len(elems))


def o_p_core(N, S):
    """Intersection of all N-conjugates of S, as an element set (S a subgroup of N)."""
    X = frozenset(S.elements())
    changed = True
    while changed:
        changed = False
        for g in N.raw_generators:
            Y = frozenset(x for x in X if conj(x, g) in X)
            if len(Y) != len(X):
                X = Y
                changed = True
    return X


@dataclass
class Radical:
    group: PermGroup
    normalizer: PermGroup
    weights: int = 0
    block_census: dict = field(default_factory=dict)

    def to_dict(self):
        return {"order": self.group.order(), "normalizer_order": self.normalizer.order(),
                "weights": self.weights}


def p_radical_subgroups(G, p, limits=None):
    """G-class representatives of the p-radical subgroups, ordered by order."""
    lim = limits or _limits.DEFAULT
    key = ("radicals", p)
    if key in G.memo:
        return G.memo[key]
    P = sylow(G, p)
    reps = _p_subgroups(P, lim.radical_sylow)
    groups = [_as_group(G, K) for K in reps]
    # fuse under G
    classes = []
    for Q in groups:
        for R in classes:
            if R.order() == Q.order() and (
                    Q.is_trivial() or search.subgroup_transporter(G, Q, R) is not None):
                break
        else:
            classes.append(Q)
    out = []
    for Q in classes:
        if Q.is_trivial():
            N = G
        else:
            N = search.normalizer(G, Q)
        S = sylow(N, p)
        if len(o_p_core(N, S)) == Q.order():
            out.append((Q, N))
    G.memo[key] = out
    return out


@dataclass
class WeightCensus:
    p: int
    radicals: list
    total: int
    p_regular: int
    per_block: dict

    def to_dict(self):
        return {"p": self.p, "radicals": [r.to_dict() for r in self.radicals],
                "total_weights": self.total, "p_regular_classes": self.p_regular,
                "per_block": {str(k): v for k, v in sorted(self.per_block.items(), key=lambda kv: str(kv[0]))}}


def p_regular_class_count(G, p, limits=None):
    return len(conjugacy_classes(G, limits).p_regular(p))


def weight_count(G, p, limits=None, census=True):
    """Weights counted over radical classes: defect-zero characters of N_G(Q)/Q.

    Characters of N_G(Q)/Q are taken as the characters of N_G(Q) with Q in
    their kernel, so no table of the quotient itself is needed.
    """
    radicals = []
    total = 0
    per_block = {}
    part = None
    if census:
        TG = character_table(G, limits)
        part = block_distribution(G, TG, p)
    for Q, N in p_radical_subgroups(G, p, limits):
        TN = character_table(N, limits)
        qi = {TN.classes.class_of(g) for g in Q.raw_generators}
        target = valuation(N.order() // Q.order(), p)
        hits = [c for c in range(len(TN))
                if TN.kernel_contains(c, qi) and valuation(TN.degrees[c], p) == target]
        rad = Radical(Q, N, len(hits))
        if census and hits:
            omegas = central_characters(TN, part.reduction)
            fusion = _fusion(part.table.classes, TN.classes)
            for c in hits:
                lam = induced_central(part, omegas[c], fusion)
                idx = next((B.index for B in part.blocks if B.central == lam), "unassigned")
                rad.block_census[idx] = rad.block_census.get(idx, 0) + 1
                per_block[idx] = per_block.get(idx, 0) + 1
        radicals.append(rad)
        total += rad.weights
    return WeightCensus(p, radicals, total, p_regular_class_count(G, p, limits), per_block)


def awc_check(G, p, limits=None):
    """Total weight count equals the number of p-regular classes."""
    if p == 2 or not is_prime(p):
        raise HypothesisError("the check is stated for odd primes")
    with stopwatch() as sw:
        ld = local_data(G, p)
        holds = ld.automizer_order % 2 == 1
        W = weight_count(G, p, limits)
    q = {"automizer_order": ld.automizer_order, "weights": W.total,
         "p_regular_classes": W.p_regular, "census": W.to_dict()}
    hyp = "HOLDS" if holds else "FAILS"
    if W.total != W.p_regular:
        return report_for("awc", G, p, "FAIL", hypothesis=hyp, quantities=q,
                          witness={"weights": W.total, "p_regular_classes": W.p_regular},
                          seconds=sw["seconds"])
    verdict, flags = ("PASS", []) if holds else ("VACUOUS", ["VACUOUS-HYPOTHESIS"])
    return report_for("awc", G, p, verdict, hypothesis=hyp, quantities=q, flags=flags,
                      seconds=sw["seconds"])
