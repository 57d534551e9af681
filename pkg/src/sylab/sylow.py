"""Sylow subgroups, local subgroups and the local checks built on them."""

from __future__ import annotations

from dataclasses import dataclass, field

from . import limits as _limits
from . import search
from .errors import HypothesisError, MembershipError, ResourceLimit
from .group import PermGroup
from .numtheory import is_prime, p_part
from .perm import Permutation, conj, inv, is_identity, mul, order, power
from .report import report_for, stopwatch


def p_part_element(g, p):
    """The p-part of a raw element: g**m with m the p'-part of its order."""
    o = order(g)
    return power(g, o // p_part(o, p))


def sylow(G, p):
    """A Sylow p-subgroup of G, grown through normalizers of p-subgroups."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    key = ("sylow", p)
    if key in G.memo:
        return G.memo[key]
    target = p_part(G.order(), p)
    if target == 1:
        P = PermGroup.trivial(G.degree)
    elif target == G.order():
        P = G
    else:
        P = _ascend(G, p, target)
    G.memo[key] = P
    return P


def _ascend(G, p, target):
    rng = G.rng(("sylow", p))
    best = None
    for _ in range(64):
        x = p_part_element(G.random_raw(rng), p)
        if not is_identity(x) and (best is None or order(x) > order(best)):
            best = x
    while best is None:
        x = p_part_element(G.random_raw(rng), p)
        if not is_identity(x):
            best = x
    Q = G.subgroup([best], order=order(best))
    while Q.order() < target:
        N = search.normalizer(G, Q)
        if N.order() < G.order():
            # every Sylow subgroup of N_G(Q) contains Q properly
            Q = sylow(N, p)
            continue
        gens = Q.raw_generators
        for tries in range(100000):
            x = p_part_element(G.random_raw(rng), p)
            if not Q.chain.contains(x):
                break
        else:
            raise AssertionError("no p-element found outside a normal p-subgroup")
        Q = G.subgroup(gens + [x])
    return Q


def is_cyclic_pgroup(P):
    n = P.order()
    if n == 1:
        return True
    return any(order(g) == n for g in P.raw_generators) or \
        any(order(g) == n for g in P.chain.strong_generators())


def sylow_conjugator(G, P1, P2):
    """Raw g with P1^g = P2, found by search."""
    return search.subgroup_transporter(G, P1, P2)


@dataclass
class LocalData:
    p: int
    P: PermGroup
    N: PermGroup
    C: PermGroup
    ZP: PermGroup
    automizer_order: int
    nc_order: int

    @property
    def normalizer_order(self):
        return self.N.order()

    def summary(self):
        return {
            "sylow_order": self.P.order(),
            "normalizer_order": self.N.order(),
            "centralizer_order": self.C.order(),
            "center_order": self.ZP.order(),
            "automizer_order": self.automizer_order,
            "nc_order": self.nc_order,
        }


def local_data(G, p):
    key = ("local", p)
    if key in G.memo:
        return G.memo[key]
    P = sylow(G, p)
    if P.is_trivial():
        N = G
        C = G
    else:
        N = search.normalizer(G, P)
        C = search.centralizer_of_set(N, P.raw_generators)
    ZP = search.centralizer_of_set(P, P.raw_generators)
    num = N.order() * ZP.order()
    den = P.order() * C.order()
    if num % den:
        raise AssertionError("|N||P∩C| not divisible by |P||C|")
    auto = num // den
    if N.order() % C.order():
        raise AssertionError("|C| does not divide |N|")
    nc = N.order() // C.order()
    # for p = 2, N/C contains P/Z(P) and the two parities need not agree
    if p != 2 and (nc % 2) != (auto % 2):
        raise AssertionError(
            f"parity of |N/C|={nc} differs from |N/PC|={auto}")
    data = LocalData(p, P, N, C, ZP, auto, nc)
    G.memo[key] = data
    return data


def odd_automizer(G, p):
    if p == 2:
        raise ValueError("odd_automizer is defined for odd primes")
    return local_data(G, p).automizer_order % 2 == 1


def is_real(G, g):
    """True iff g is conjugate in G to its inverse."""
    t = g.raw if isinstance(g, Permutation) else tuple(g)
    if not G.chain.contains(t):
        raise MembershipError(f"{g} is not an element of the group")
    return search.conjugating_element(G, [t], [inv(t)]) is not None


def lemma_2_3_check(G, p):
    """Under an odd automizer, no nonidentity element of Z(P) is real."""
    if p == 2:
        raise HypothesisError("the check is stated for odd primes")
    with stopwatch() as sw:
        ld = local_data(G, p)
        holds = ld.automizer_order % 2 == 1
        q = {"automizer_order": ld.automizer_order, "center_order": ld.ZP.order(),
             "sylow_order": ld.P.order()}
        real = []
        if holds and not ld.P.is_trivial():
            for z in ld.ZP.elements():
                if not is_identity(z) and is_real(G, z):
                    real.append(z)
                    break
            q["real_central_elements"] = len(real)
    hyp = "HOLDS" if holds else "FAILS"
    if not holds or ld.P.is_trivial():
        return report_for("lemma23", G, p, "VACUOUS", hypothesis=hyp, quantities=q,
                          seconds=sw["seconds"])
    if real:
        return report_for("lemma23", G, p, "FAIL", hypothesis=hyp, quantities=q,
                          witness={"element": str(Permutation._raw(real[0]))},
                          seconds=sw["seconds"])
    return report_for("lemma23", G, p, "PASS", hypothesis=hyp, quantities=q,
                      seconds=sw["seconds"])


def _cosets(gens, K, start, bound):
    """Right cosets K*x reachable from K*start under right multiplication by gens.

    Returns {canonical key: representative}; raises ResourceLimit past ``bound``.
    """
    ch = K.chain
    key0 = ch.coset_key(start)
    reps = {key0: start}
    queue = [start]
    for x in queue:
        for g in gens:
            y = mul(x, g)
            k = ch.coset_key(y)
            if k not in reps:
                reps[k] = y
                queue.append(y)
                if len(reps) > bound:
                    raise ResourceLimit(f"quotient too large (more than {bound} cosets)")
    return reps


def _is_p_power(n, p):
    return p_part(n, p) == n


def lemma_2_1_check(G, H, p, limits=None):
    """Extensional check of the automizer reduction for G = PH, H normal.

    With Q = P ∩ H, X = N_H(Q) and Y = Q C_H(Q):
      (i)   the P-fixed cosets of X/Y are exactly the cosets of N_H(P);
      (ii)  n Y -> n P C_G(P) is a well-defined map from N_H(P)Y/Y onto
            N_G(P)/P C_G(P);
      (iii) its kernel has p-power order.
    """
    lim = limits or _limits.DEFAULT
    if p == 2 or not is_prime(p):
        raise HypothesisError("the check is stated for odd primes")
    with stopwatch() as sw:
        outcome = _lemma_2_1(G, H, p, lim)
    verdict, hyp, q, witness = outcome
    return report_for("lemma21", G, p, verdict, hypothesis=hyp, quantities=q,
                      witness=witness, seconds=sw["seconds"],
                      flags=["HYPOTHESIS-VIOLATION"] if hyp == "FAILS" else [])


def _lemma_2_1(G, H, p, lim):
    from .normal import intersection
    q = {"H_order": H.order()}
    if not H.is_subgroup_of(G) or not H.is_normal_in(G):
        q["reason"] = "H is not a normal subgroup of G"
        return "VACUOUS", "FAILS", q, None
    P = sylow(G, p)
    Q = intersection(P, H)
    q.update(sylow_order=P.order(), Q_order=Q.order())
    if P.order() * H.order() != G.order() * Q.order():
        q["reason"] = "G is not P*H"
        return "VACUOUS", "FAILS", q, None
    X = search.stabilizer_of_subgroup(H, Q)                    # N_H(Q)
    CHQ = search.centralizer_of_set(H, Q.raw_generators)       # C_H(Q)
    Y = H.subgroup(Q.raw_generators + CHQ.raw_generators)      # Q C_H(Q)
    NHP = search.stabilizer_of_subgroup(H, P)                  # N_H(P)
    NGP = search.normalizer(G, P)
    CGP = search.centralizer_of_set(G, P.raw_generators)
    B = G.subgroup(P.raw_generators + CGP.raw_generators)      # P C_G(P)
    size_xy = X.order() // Y.order()
    size_ab = NGP.order() // B.order()
    q.update(quotient_order=size_xy, automizer_order=size_ab)
    bound = lim.lemma21_quotient
    if size_xy > bound or size_ab > bound:
        raise ResourceLimit(f"quotient too large: {max(size_xy, size_ab)} > {bound}")
    ident = tuple(range(G.degree))
    cos_x = _cosets(X.raw_generators, Y, ident, bound)
    kY = Y.chain.coset_key
    fixed = {k for k, x in cos_x.items()
             if all(kY(conj(x, g)) == k for g in P.raw_generators)}
    image = _cosets(NHP.raw_generators, Y, ident, bound)
    q["fixed_cosets"] = len(fixed)
    q["NHP_cosets"] = len(image)
    if set(image) != fixed:
        odd = next(iter(set(image) ^ fixed))
        return "FAIL", "HOLDS", q, {"part": "i", "coset_rep": str(Permutation._raw(odd))}
    kB = B.chain.coset_key
    phi = {k: kB(x) for k, x in image.items()}
    for k, x in image.items():
        for s in NHP.raw_generators:
            y = mul(x, s)
            if kB(y) != phi[kY(y)]:
                return "FAIL", "HOLDS", q, {"part": "ii-well-defined",
                                            "coset_rep": str(Permutation._raw(x))}
    targets = _cosets(NGP.raw_generators, B, ident, bound)
    hit = set(phi.values())
    q["image_size"] = len(hit)
    if hit != set(targets):
        return "FAIL", "HOLDS", q, {"part": "ii-surjective", "image_size": len(hit),
                                    "target_size": len(targets)}
    kernel = sum(1 for v in phi.values() if v == kB(ident))
    q["kernel_order"] = kernel
    if not _is_p_power(kernel, p):
        return "FAIL", "HOLDS", q, {"part": "iii", "kernel_order": kernel}
    return "PASS", "HOLDS", q, None


def sylow_parity_check(G, p):
    """Odd Sylow automizer together with an even Sylow normalizer.

    The normalizer parity is that of |N_G(P)| itself.  For odd p the order of
    N_G(P)/C_G(P) has the parity of the automizer, since the two differ by the
    odd factor |P/Z(P)|; it is reported alongside for comparison.
    """
    with stopwatch() as sw:
        ld = local_data(G, p)
    odd_auto = ld.automizer_order % 2 == 1
    even_norm = ld.N.order() % 2 == 0
    q = dict(ld.summary())
    q["automizer_parity"] = "odd" if odd_auto else "even"
    q["normalizer_parity"] = "even" if even_norm else "odd"
    q["nc_parity"] = "odd" if ld.nc_order % 2 else "even"
    hyp = "HOLDS" if odd_auto else "FAILS"
    if not odd_auto:
        return report_for("sylow-parity", G, p, "VACUOUS", hypothesis=hyp, quantities=q,
                          seconds=sw["seconds"])
    if not even_norm:
        return report_for("sylow-parity", G, p, "FAIL", hypothesis=hyp, quantities=q,
                          witness={"normalizer_order": ld.N.order()}, seconds=sw["seconds"])
    return report_for("sylow-parity", G, p, "PASS", hypothesis=hyp, quantities=q,
                      seconds=sw["seconds"])
