"""Conjugacy classes with sizes, inverse classes and power maps.

Groups up to ``Limits.enumerate_order`` are handled by splitting the full
element list into conjugation orbits.  Larger groups are sampled: random
elements and their prime powers are tested against known representatives
with matching cycle type, and each new class gets its size from a
centralizer search.  Sampling stops once the sizes add up to |G|, so the
result is complete whatever the random choices were.
"""

from __future__ import annotations

from . import limits as _limits
from .errors import MembershipError, ResourceLimit
from .numtheory import lcm, prime_divisors
from .perm import Permutation, conj, cycle_type, identity, inv, order, power
from .search import centralizer_of_set, conjugating_element


class ClassData:
    """Class representatives (raw tuples) and the maps between classes.

    Classes are ordered by (element order, class size, representative);
    the identity class is always index 0.
    """

    def __init__(self, G, reps, sizes, lookup=None, sampled=False):
        self.group = G
        self.sampled = sampled
        self.reps = list(reps)
        self.sizes = list(sizes)
        self.orders = [order(r) for r in self.reps]
        self._lookup = lookup          # element -> class index, complete if given
        self._memo = {}
        self._by_type = {}
        for i, r in enumerate(self.reps):
            self._by_type.setdefault(cycle_type(r), []).append(i)
        n = G.order()
        self.centralizer_orders = [n // s for s in self.sizes]
        self.exponent = lcm(*self.orders)
        self.inverse = [self.class_of(inv(r)) for r in self.reps]
        self.power_maps = {p: [self.class_of(power(r, p)) for r in self.reps]
                           for p in prime_divisors(self.exponent)}

    def __len__(self):
        return len(self.reps)

    @property
    def representatives(self):
        return [Permutation._raw(r) for r in self.reps]

    def class_of(self, g):
        """Index of the class containing the raw element ``g``."""
        if self._lookup is not None:
            try:
                return self._lookup[g]
            except KeyError:
                raise MembershipError("element is not in the group") from None
        hit = self._memo.get(g)
        if hit is not None:
            return hit
        cands = self._by_type.get(cycle_type(g), [])
        G = self.group
        if not G.chain.contains(g):
            raise MembershipError("element is not in the group")
        found = None
        if len(cands) == 1:
            found = cands[0]
        else:
            for i in cands[:-1]:
                if conjugating_element(G, [self.reps[i]], [g]) is not None:
                    found = i
                    break
            else:
                found = cands[-1]
        if len(self._memo) > 200_000:
            self._memo.clear()
        self._memo[g] = found
        return found

    def power_class(self, i, k):
        """Class of rep_i ** k."""
        return self.class_of(power(self.reps[i], k))

    def class_elements(self, i):
        """All elements of class i (orbit of the representative)."""
        return _conj_orbit(self.reps[i], self.group.raw_generators)

    def p_regular(self, p):
        return [i for i, o in enumerate(self.orders) if o % p]


def _conj_orbit(x, gens):
    orb = [x]
    seen = {x}
    for a in orb:
        for g in gens:
            b = conj(a, g)
            if b not in seen:
                seen.add(b)
                orb.append(b)
    return orb


def conjugacy_classes(G, limits=None):
    lim = limits or _limits.DEFAULT
    key = "classes"
    if key in G.memo:
        data = G.memo[key]
        if len(data) > lim.classes:
            raise ResourceLimit(f"{len(data)} classes exceed the bound {lim.classes}")
        return data
    if G.order() <= lim.enumerate_order:
        data = _by_enumeration(G, lim)
    else:
        data = _by_sampling(G, lim)
    G.memo[key] = data
    return data


def _by_enumeration(G, lim):
    gens = G.raw_generators
    lookup = {}
    classes = []
    for x in G.elements():
        if x in lookup:
            continue
        orb = _conj_orbit(x, gens)
        for y in orb:
            lookup[y] = -1
        classes.append((order(x), len(orb), min(orb), orb))
        if len(classes) > lim.classes:
            raise ResourceLimit(f"more than {lim.classes} conjugacy classes")
    classes.sort(key=lambda c: c[:3])
    for i, (_, _, _, orb) in enumerate(classes):
        for y in orb:
            lookup[y] = i
    return ClassData(G, [c[2] for c in classes], [c[1] for c in classes], lookup=lookup)


def _by_sampling(G, lim):
    n = G.order()
    deg = G.degree
    reps = [identity(deg)]
    sizes = [1]
    by_type = {cycle_type(reps[0]): [0]}
    total = 1
    rng = G.rng("classes")
    pending = []
    while total < n:
        x = pending.pop() if pending else G.random_raw(rng)
        t = cycle_type(x)
        known = by_type.get(t, [])
        if any(conjugating_element(G, [reps[i]], [x]) is not None for i in known):
            continue
        size = n // centralizer_of_set(G, [x]).order()
        by_type.setdefault(t, []).append(len(reps))
        reps.append(x)
        sizes.append(size)
        total += size
        if len(reps) > lim.classes:
            raise ResourceLimit(f"more than {lim.classes} conjugacy classes")
        o = order(x)
        for p in prime_divisors(o):
            pending.append(power(x, p))
    if total != n:
        raise AssertionError("class sizes overshoot the group order")
    ranked = sorted(range(len(reps)), key=lambda i: (order(reps[i]), sizes[i], reps[i]))
    return ClassData(G, [reps[i] for i in ranked], [sizes[i] for i in ranked], sampled=True)
