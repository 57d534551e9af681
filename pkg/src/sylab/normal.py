"""Normal closures, derived subgroups, centres and quotient representations."""

from __future__ import annotations

from . import limits as _limits
from .errors import HypothesisError, MembershipError, ResourceLimit
from .group import PermGroup
from .numtheory import prime_divisors
from .perm import Permutation, conj, inv, is_identity, mul
from .search import centralizer_of_set


def _raw(G, x):
    return x.raw if isinstance(x, Permutation) else tuple(x)


def normal_closure(G, elems):
    """Smallest normal subgroup of G containing the given elements."""
    gens = [_raw(G, x) for x in elems]
    for g in gens:
        if not G.chain.contains(g):
            raise MembershipError("element is not in the group")
    gens = [g for g in dict.fromkeys(gens) if not is_identity(g)]
    H = G.subgroup(gens)
    todo = list(gens)
    while todo:
        h = todo.pop()
        for g in G.raw_generators:
            c = conj(h, g)
            if not H.chain.contains(c):
                gens.append(c)
                todo.append(c)
                H = G.subgroup(gens)
                if H.order() == G.order():
                    return G
    return H


def commutator(a, b):
    return mul(mul(inv(a), inv(b)), mul(a, b))


def derived_subgroup(G):
    key = "derived"
    if key not in G.memo:
        gs = G.raw_generators
        comms = [commutator(a, b) for i, a in enumerate(gs) for b in gs[i + 1:]]
        G.memo[key] = normal_closure(G, [c for c in comms if not is_identity(c)])
    return G.memo[key]


def center(G):
    key = "center"
    if key not in G.memo:
        G.memo[key] = centralizer_of_set(G, G.raw_generators)
    return G.memo[key]


def core(G, K):
    """Largest normal subgroup of G inside K."""
    X = K
    changed = True
    while changed:
        changed = False
        for g in G.raw_generators:
            if all(X.chain.contains(conj(h, g)) for h in X.raw_generators):
                continue
            Y = intersection(X, X.conjugate(g))
            if Y.order() < X.order():
                X = Y
                changed = True
    return X


def intersection(A, B):
    """A ∩ B, by running through the elements of the smaller group."""
    from .search import ELEMENT_LIMIT
    if A.order() > B.order():
        A, B = B, A
    if A.order() > ELEMENT_LIMIT:
        raise ResourceLimit(f"intersection needs {A.order()} membership tests")
    gens = []
    H = A.subgroup([], order=1)
    for x in A.elements():
        if B.chain.contains(x) and not H.chain.contains(x):
            gens.append(x)
            H = A.subgroup(gens)
    return H


class Quotient:
    """G/N realised as a permutation group with an explicit epimorphism."""

    def __init__(self, G, N, group, image, method):
        self.source = G
        self.kernel = N
        self.group = group
        self._image = image
        self.method = method

    @property
    def degree(self):
        return self.group.degree

    def image_raw(self, g):
        return self._image(g)

    def image(self, g):
        return Permutation._raw(self._image(_raw(self.source, g)))

    def order(self):
        return self.group.order()


def quotient_representation(G, N, limits=None):
    """Faithful permutation representation of G/N for a normal subgroup N."""
    lim = limits or _limits.DEFAULT
    if not N.is_subgroup_of(G):
        raise MembershipError("N is not a subgroup of G")
    if not N.is_normal_in(G):
        raise HypothesisError("N is not normal in G")
    index = G.order() // N.order()
    if N.is_trivial():
        return Quotient(G, N, G, lambda g: g, "identity")
    if index == 1:
        return Quotient(G, N, PermGroup.trivial(1), lambda g: (0,), "trivial")
    q = _orbit_action(G, N, index)
    if q is not None:
        return q
    for K in _local_candidates(G, N):
        q = _coset_action(G, N, K, index)
        if q is not None:
            return q
    if index <= lim.regular_quotient:
        q = _coset_action(G, N, N, index)
        if q is not None:
            return q
    raise ResourceLimit(f"quotient too large: |G:N| = {index} and no smaller faithful action found")


def _orbit_action(G, N, index):
    block = [-1] * G.degree
    orbs = N.raw_orbits()
    for i, orb in enumerate(orbs):
        for x in orb:
            block[x] = i
    m = len(orbs)
    if m == 1:
        return None

    def image(g):
        out = [0] * m
        for i, orb in enumerate(orbs):
            out[i] = block[g[orb[0]]]
        return tuple(out)

    gens = [image(g) for g in G.raw_generators]
    H = PermGroup(m, gens, order_bound=index)
    if H.order() != index:
        return None
    return Quotient(G, N, PermGroup(m, gens, order=index), image, "orbits")


def _local_candidates(G, N):
    from .sylow import sylow
    from .search import normalizer
    out = []
    for p in prime_divisors(G.order() // N.order()):
        P = sylow(G, p)
        out.append(G.subgroup(N.raw_generators + P.raw_generators))
        try:
            NP = normalizer(G, P)
        except ResourceLimit:
            continue
        out.append(G.subgroup(N.raw_generators + NP.raw_generators))
    out = [K for K in out if K.order() < G.order()]
    out.sort(key=lambda K: -K.order())
    return out


def _coset_action(G, N, K, index):
    ch = K.chain
    first = ch.coset_key(tuple(range(G.degree)))
    where = {first: 0}
    cosets = [first]
    gens = G.raw_generators
    limit = G.order() // K.order()
    for x in cosets:
        for g in gens:
            k = ch.coset_key(mul(x, g))
            if k not in where:
                where[k] = len(cosets)
                cosets.append(k)
    assert len(cosets) == limit

    def image(g):
        return tuple(where[ch.coset_key(mul(x, g))] for x in cosets)

    imgs = [image(g) for g in gens]
    H = PermGroup(len(cosets), imgs, order_bound=index)
    if H.order() != index:
        return None
    return Quotient(G, N, PermGroup(len(cosets), imgs, order=index), image,
                    "regular" if K is N else "cosets")
