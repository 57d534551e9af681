"""Finitely generated permutation groups with cached stabilizer chains."""

from __future__ import annotations

import hashlib
import random
from functools import cached_property

from . import perm as _p
from .chain import schreier_sims
from .errors import MembershipError
from .perm import Permutation, PermutationError


def _raw(g, degree):
    t = g.raw if isinstance(g, Permutation) else tuple(g)
    if len(t) != degree:
        raise PermutationError(f"degree mismatch: {len(t)} vs {degree}")
    return t


class PermGroup:
    """Permutation group on {1..degree} given by generators.

    The group is immutable; its stabilizer chain, class data and similar
    derived objects are computed on demand and cached on the instance.
    """

    def __init__(self, degree, generators=(), *, name=None, order=None, order_bound=None):
        if degree < 1:
            raise ValueError("degree must be positive")
        self.degree = degree
        gens = [_raw(g, degree) for g in generators]
        self._gens = [g for g in dict.fromkeys(gens) if not _p.is_identity(g)]
        self.name = name
        self._order_hint = order
        self._order_bound = order_bound
        self._bases = {}
        self.memo = {}

    # construction helpers -------------------------------------------------

    @classmethod
    def trivial(cls, degree, name=None):
        return cls(degree, [], name=name, order=1)

    def subgroup(self, gens, order=None, name=None):
        bound = None if order is not None else (self.order() if "chain" in self.__dict__ else None)
        return PermGroup(self.degree, gens, order=order, name=name, order_bound=bound)

    # basic data -----------------------------------------------------------

    @property
    def generators(self):
        return [Permutation._raw(g) for g in self._gens]

    @property
    def raw_generators(self):
        return list(self._gens)

    @cached_property
    def chain(self):
        if not self._gens:
            return schreier_sims(self.degree, [])
        return schreier_sims(self.degree, self._gens, known_order=self._order_hint,
                             order_bound=self._order_bound)

    def chain_with_base(self, prefix):
        """A chain whose base starts with ``prefix`` (0-based points)."""
        prefix = tuple(prefix)
        ch = self._bases.get(prefix)
        if ch is None:
            if len(self._bases) > 32:
                self._bases.clear()
            ch = schreier_sims(self.degree, self.chain.strong_generators(),
                               base_prefix=prefix, known_order=self.order())
            self._bases[prefix] = ch
        return ch

    def order(self):
        return self.chain.order()

    def __len__(self):
        return self.order()

    def is_trivial(self):
        return not self._gens

    def identity(self):
        return Permutation.identity(self.degree)

    def contains(self, g):
        return self.chain.contains(_raw(g, self.degree))

    def __contains__(self, g):
        if isinstance(g, Permutation) and g.degree != self.degree:
            return False
        return self.contains(g)

    def require(self, g):
        if not self.contains(g):
            raise MembershipError(f"{g} is not an element of the group")

    def elements(self):
        """All elements as raw tuples (only sensible for small groups)."""
        return self.chain.elements()

    def random_raw(self, rng):
        return self.chain.random_element(rng)

    def rng(self, salt=0):
        return random.Random(f"{self.content_hash()}:{salt}")

    @cached_property
    def _hash(self):
        h = hashlib.sha256()
        h.update(str(self.degree).encode())
        for g in sorted(self._gens):
            h.update(b"|")
            h.update(",".join(map(str, g)).encode())
        return h.hexdigest()

    def content_hash(self):
        return self._hash

    # orbits ---------------------------------------------------------------

    def orbit_transversal(self, point):
        """Orbit of ``point`` (1-based) with a transversal element for each orbit point."""
        if not 1 <= point <= self.degree:
            raise ValueError(f"point {point} outside 1..{self.degree}")
        b = point - 1
        trans = {b: _p.identity(self.degree)}
        queue = [b]
        for d in queue:
            for s in self._gens:
                g = s[d]
                if g not in trans:
                    trans[g] = _p.mul(trans[d], s)
                    queue.append(g)
        return {q + 1: Permutation._raw(t) for q, t in trans.items()}

    def orbit(self, point):
        return sorted(self.orbit_transversal(point))

    def raw_orbits(self):
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            orb = [start]
            seen[start] = True
            for d in orb:
                for s in self._gens:
                    g = s[d]
                    if not seen[g]:
                        seen[g] = True
                        orb.append(g)
            out.append(sorted(orb))
        return out

    def orbits(self):
        return [[x + 1 for x in orb] for orb in self.raw_orbits()]

    # relations between groups -------------------------------------------

    def is_subgroup_of(self, other):
        return all(other.chain.contains(g) for g in self._gens)

    def equals(self, other):
        return (self.degree == other.degree and self.order() == other.order()
                and self.is_subgroup_of(other))

    def is_normal_in(self, other):
        ch = self.chain
        return all(ch.contains(_p.conj(h, g)) for h in self._gens for g in other._gens)

    def is_abelian(self):
        gs = self._gens
        return all(_p.mul(a, b) == _p.mul(b, a) for i, a in enumerate(gs) for b in gs[i + 1:])

    def conjugate(self, g):
        g = _raw(g, self.degree)
        return PermGroup(self.degree, [_p.conj(h, g) for h in self._gens],
                         order=self.order() if "chain" in self.__dict__ else self._order_hint)

    def __repr__(self):
        label = self.name or "PermGroup"
        return f"<{label} degree={self.degree} gens={len(self._gens)}>"


def generated(degree, gens, order=None):
    return PermGroup(degree, gens, order=order)
