"""Stabilizer chains built by randomized Schreier-Sims.

The random phase stops either when a known group order is reached (which
certifies the chain) or after a run of consecutive successful sifts; in the
latter case every Schreier generator is sifted deterministically before the
chain is returned, so completeness never rests on probability.
"""

from __future__ import annotations

import random

from .perm import identity, inv, is_identity, mul

# explicit transversals above this many stored images fall back to Schreier vectors
_EXPLICIT_LIMIT = 4_000_000


class Level:
    __slots__ = ("point", "gens", "orbit", "_pos", "_trans", "_itrans", "_sv", "_n")

    def __init__(self, point, gens, n):
        self.point = point
        self.gens = list(gens)
        self._n = n
        self.rebuild()

    def rebuild(self):
        b = self.point
        n = self._n
        gens = self.gens
        orbit = [b]
        pos = {b: 0}
        if len(gens) == 0:
            self.orbit, self._pos = orbit, pos
            self._trans = {b: identity(n)}
            self._itrans = {b: identity(n)}
            self._sv = None
            return
        # Schreier vector first; explicit transversal if small enough
        sv = {b: None}
        i = 0
        while i < len(orbit):
            d = orbit[i]
            for k, s in enumerate(gens):
                g = s[d]
                if g not in sv:
                    sv[g] = (k, d)
                    pos[g] = len(orbit)
                    orbit.append(g)
            i += 1
        self.orbit, self._pos = orbit, pos
        if len(orbit) * n <= _EXPLICIT_LIMIT:
            trans = {b: identity(n)}
            for g in orbit[1:]:
                k, d = sv[g]
                trans[g] = mul(trans[d], gens[k])
            self._trans = trans
            self._itrans = {}
            self._sv = None
        else:
            self._trans = None
            self._itrans = {}
            self._sv = sv

    def __contains__(self, pt):
        return pt in self._pos

    def __len__(self):
        return len(self.orbit)

    def rep(self, pt):
        """Transversal element mapping the base point to ``pt``."""
        if self._trans is not None:
            return self._trans[pt]
        path = []
        sv = self._sv
        while sv[pt] is not None:
            k, d = sv[pt]
            path.append(k)
            pt = d
        u = identity(self._n)
        for k in reversed(path):
            u = mul(u, self.gens[k])
        return u

    def inv_rep(self, pt):
        r = self._itrans.get(pt)
        if r is None:
            r = inv(self.rep(pt))
            if self._trans is not None:
                self._itrans[pt] = r
        return r


class StabilizerChain:
    """Base, strong generators per level, basic orbits and transversals."""

    def __init__(self, degree, levels):
        self.degree = degree
        self.levels = levels

    @property
    def base(self):
        return [lv.point for lv in self.levels]

    def order(self):
        result = 1
        for lv in self.levels:
            result *= len(lv.orbit)
        return result

    def orbit_lengths(self):
        return [len(lv.orbit) for lv in self.levels]

    def strong_generators(self):
        seen = {}
        for lv in self.levels:
            for g in lv.gens:
                seen.setdefault(g, None)
        return list(seen)

    def sift(self, g, start=0):
        """Return (residue, depth) after sifting raw ``g`` from level ``start``."""
        levels = self.levels
        for j in range(start, len(levels)):
            lv = levels[j]
            pt = g[lv.point]
            if pt not in lv._pos:
                return g, j
            if pt != lv.point:
                g = mul(g, lv.inv_rep(pt))
        return g, len(levels)

    def contains(self, g):
        if len(g) != self.degree:
            return False
        res, _ = self.sift(g)
        return is_identity(res)

    def random_element(self, rng):
        g = identity(self.degree)
        for lv in reversed(self.levels):
            if len(lv.orbit) > 1:
                g = mul(g, lv.rep(rng.choice(lv.orbit)))
        return g

    def elements(self):
        elems = [identity(self.degree)]
        for lv in reversed(self.levels):
            if len(lv.orbit) == 1:
                continue
            reps = [lv.rep(pt) for pt in lv.orbit]
            elems = [mul(x, u) for x in elems for u in reps]
        return elems

    def element_from_images(self, images):
        """The element mapping the base points to ``images``, or None if none exists."""
        cur = identity(self.degree)
        cur_inv = cur
        for lv, img in zip(self.levels, images):
            pt = cur_inv[img]
            if pt not in lv._pos:
                return None
            cur = mul(lv.rep(pt), cur)
            cur_inv = inv(cur)
        return cur

    def coset_key(self, x):
        """Canonical element of the right coset (group)*x: least base images."""
        cur = x
        for lv in self.levels:
            if len(lv.orbit) == 1:
                continue
            d = min(lv.orbit, key=cur.__getitem__)
            if d != lv.point:
                cur = mul(lv.rep(d), cur)
        return cur

    def stabilizer_generators(self, depth):
        """Strong generators of the pointwise stabilizer of the first ``depth`` base points."""
        if depth >= len(self.levels):
            return []
        return list(self.levels[depth].gens)


class _ProductReplacement:
    def __init__(self, gens, n, rng):
        self.rng = rng
        state = list(gens)
        while len(state) < 10:
            state.append(state[len(state) % len(gens)])
        self.state = state
        self.acc = identity(n)
        for _ in range(30):
            self()

    def __call__(self):
        st = self.state
        rng = self.rng
        i = rng.randrange(len(st))
        j = rng.randrange(len(st) - 1)
        if j >= i:
            j += 1
        if rng.random() < 0.5:
            st[i] = mul(st[i], st[j])
        else:
            st[i] = mul(st[j], st[i])
        self.acc = mul(self.acc, st[i])
        return self.acc


def point_ranking(degree, gens):
    """Points ordered by how many generators move them, ties by smallest point."""
    counts = [0] * degree
    for g in gens:
        for i, j in enumerate(g):
            if i != j:
                counts[i] += 1
    return sorted(range(degree), key=lambda i: (-counts[i], i))


def schreier_sims(degree, gens, base_prefix=(), known_order=None, seed=0,
                  patience=24, order_bound=None):
    """Build a stabilizer chain for the group generated by raw tuples ``gens``.

    ``known_order`` is the exact order (reaching it certifies the chain; a
    mismatch raises).  ``order_bound`` is an upper bound, e.g. the order of
    an overgroup: reaching it also certifies, but falling short does not
    raise.
    """
    if known_order is not None:
        order_bound = known_order
    gens = [g for g in dict.fromkeys(gens) if not is_identity(g)]
    ranking = point_ranking(degree, gens)
    levels = [Level(b, [], degree) for b in base_prefix]

    def moved_point(h):
        used = {lv.point for lv in levels}
        for pt in ranking:
            if h[pt] != pt and pt not in used:
                return pt
        for pt in range(degree):
            if h[pt] != pt and pt not in used:
                return pt
        raise AssertionError("nonidentity residue fixes every point")

    def add(h, depth):
        if depth == len(levels):
            levels.append(Level(moved_point(h), [], degree))
        for j in range(depth + 1):
            levels[j].gens.append(h)
            levels[j].rebuild()

    chain = StabilizerChain(degree, levels)
    if not gens:
        return chain
    for g in gens:
        res, depth = chain.sift(g)
        if not is_identity(res):
            add(res, depth)

    def order():
        r = 1
        for lv in levels:
            r *= len(lv.orbit)
        return r

    if order_bound is not None and order() == order_bound:
        return chain
    rng = random.Random(seed)
    rand = _ProductReplacement(gens, degree, rng)
    streak = 0
    while streak < patience:
        res, depth = chain.sift(rand())
        if is_identity(res):
            streak += 1
        else:
            add(res, depth)
            streak = 0
            if order_bound is not None and order() == order_bound:
                return chain
    _verify(chain, add)
    if known_order is not None and chain.order() != known_order:
        raise ValueError(
            f"generators give order {chain.order()}, expected {known_order}")
    return chain


def _verify(chain, add):
    """Deterministic Schreier-generator check, bottom level first."""
    levels = chain.levels
    i = len(levels) - 1
    while i >= 0:
        lv = levels[i]
        ok = True
        for d in list(lv.orbit):
            ud = lv.rep(d)
            for s in list(lv.gens):
                img = s[d]
                h = mul(mul(ud, s), lv.inv_rep(img))
                res, depth = chain.sift(h, i + 1)
                if not is_identity(res):
                    add(res, depth)
                    ok = False
                    break
            if not ok:
                break
        if ok:
            i -= 1
        else:
            i = len(levels) - 1
