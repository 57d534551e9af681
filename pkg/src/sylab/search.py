"""Base-image backtrack searches: centralizers, conjugators, normalizers.

Every search looks for elements x with ``s_i^x = t_i`` for paired tuples of
permutations.  Fixing the image of one point under x fixes it on the whole
orbit of that point under <s_1, ..., s_m>, since ``x(s(a)) = t(x(a))``.  The
base of the chain is chosen with one point per such orbit, longest orbits
first, so most levels of the search tree are forced after a few choices.

Normalizers of small subgroups Q are reduced to these searches: a normalizing
element maps a chosen element z of Q to some t in Q, so N_G(Q) is assembled
from N_{C_G(z)}(Q) and one transporter per orbit of candidate images t.
"""

from __future__ import annotations

from .errors import MembershipError, ResourceLimit
from .group import PermGroup
from .perm import conj, cycle_type, inv, is_identity, mul

# subgroups larger than this are not enumerated for normalizer/transporter work
ELEMENT_LIMIT = 200_000


def _support_orbits(degree, gens):
    seen = [False] * degree
    orbs = []
    for start in range(degree):
        if seen[start]:
            continue
        orb = [start]
        seen[start] = True
        for d in orb:
            for s in gens:
                g = s[d]
                if not seen[g]:
                    seen[g] = True
                    orb.append(g)
        if len(orb) > 1:
            orbs.append(orb)
    orbs.sort(key=lambda o: (-len(o), min(o)))
    return [min(o) for o in orbs]


class _Propagator:
    """Partial map f on points, closed under f(s(a)) = t(f(a))."""

    def __init__(self, degree, pairs):
        self.f = [-1] * degree
        self.used = bytearray(degree)
        self.pairs = pairs

    def assign(self, a, b):
        f, used, pairs = self.f, self.used, self.pairs
        stack = [(a, b)]
        done = []
        while stack:
            x, y = stack.pop()
            fx = f[x]
            if fx == -1:
                if used[y]:
                    self.undo(done)
                    return None
                f[x] = y
                used[y] = 1
                done.append(x)
                for s, t in pairs:
                    stack.append((s[x], t[y]))
            elif fx != y:
                self.undo(done)
                return None
        return done

    def undo(self, done):
        f, used = self.f, self.used
        for x in done:
            used[f[x]] = 0
            f[x] = -1


def _dfs(levels, j, cur, prop, check):
    if j == len(levels):
        return cur if check(cur) else None
    lv = levels[j]
    b = lv.point
    target = prop.f[b]
    if target != -1:
        d = inv(cur)[target]
        if d not in lv:
            return None
        nxt = mul(lv.rep(d), cur)
        return _dfs(levels, j + 1, nxt, prop, check)
    used = prop.used
    for d in lv.orbit:
        g = cur[d]
        if used[g]:
            continue
        done = prop.assign(b, g)
        if done is None:
            continue
        r = _dfs(levels, j + 1, mul(lv.rep(d), cur), prop, check)
        prop.undo(done)
        if r is not None:
            return r
    return None


def _raw_list(G, elems):
    out = []
    for e in elems:
        t = e.raw if hasattr(e, "raw") else tuple(e)
        if len(t) != G.degree:
            raise MembershipError("degree mismatch")
        out.append(t)
    return out


def conjugating_element(G, src, dst):
    """Raw x in G with src[i]^x == dst[i] for all i, or None."""
    if len(src) != len(dst):
        raise ValueError("tuples of different length")
    pairs = [(s, t) for s, t in zip(src, dst) if not (is_identity(s) and is_identity(t))]
    for s, t in pairs:
        if cycle_type(s) != cycle_type(t):
            return None
    if not pairs:
        return tuple(range(G.degree))
    if G.is_trivial():
        return tuple(range(G.degree)) if all(s == t for s, t in pairs) else None
    prefix = _support_orbits(G.degree, [s for s, _ in pairs])
    chain = G.chain_with_base(prefix)
    prop = _Propagator(G.degree, pairs)

    def check(x):
        return all(conj(s, x) == t for s, t in pairs)

    return _dfs(chain.levels, 0, tuple(range(G.degree)), prop, check)


def centralizer_of_set(G, elems):
    """Subgroup of G centralizing every raw permutation in ``elems``."""
    elems = [e for e in elems if not is_identity(e)]
    if not elems or G.is_trivial():
        return G
    if all(conj(e, g) == e for e in elems for g in G.raw_generators):
        return G
    pairs = [(e, e) for e in elems]
    prefix = _support_orbits(G.degree, elems)
    chain = G.chain_with_base(prefix)
    levels = chain.levels
    n = G.degree
    found = []
    order = 1
    ident = tuple(range(n))

    def check(x):
        return all(conj(s, x) == s for s, _ in pairs)

    for i in range(len(levels) - 1, -1, -1):
        lv = levels[i]
        b = lv.point
        # generators found so far all fix the first i base points
        orbit = _orbit(b, found)
        below = [g for g in found if all(g[levels[m].point] == levels[m].point
                                         for m in range(i + 1))]
        failed = set()
        if len(lv.orbit) > 1:
            prop = _Propagator(n, pairs)
            ok = True
            for m in range(i):
                if prop.assign(levels[m].point, levels[m].point) is None:
                    ok = False
                    break
            assert ok
            for d in lv.orbit:
                if d in orbit or d in failed:
                    continue
                done = prop.assign(b, d)
                x = None
                if done is not None:
                    x = _dfs(levels, i + 1, lv.rep(d), prop, check)
                    prop.undo(done)
                if x is None:
                    failed.update(_orbit(d, below))
                else:
                    found.append(x)
                    orbit = _orbit(b, found)
        order *= len(orbit)
    return G.subgroup(found, order=order)


def _orbit(pt, gens):
    orb = [pt]
    seen = {pt}
    for d in orb:
        for s in gens:
            g = s[d]
            if g not in seen:
                seen.add(g)
                orb.append(g)
    return orb


# public element-level operations -------------------------------------------

def centralizer(G, g):
    """C_G(g) for a Permutation g in G."""
    t = _raw_list(G, [g])[0]
    if not G.chain.contains(t):
        raise MembershipError(f"{g} is not an element of the group")
    return centralizer_of_set(G, [t])


def subgroup_centralizer(G, H):
    """C_G(H): elements of G commuting with every generator of H."""
    return centralizer_of_set(G, H.raw_generators)


def conjugator(G, x, y):
    """g in G with x^g = y (as a Permutation), or None."""
    from .perm import Permutation
    tx, ty = _raw_list(G, [x, y])
    for t, e in ((tx, x), (ty, y)):
        if not G.chain.contains(t):
            raise MembershipError(f"{e} is not an element of the group")
    r = conjugating_element(G, [tx], [ty])
    return None if r is None else Permutation._raw(r)


# normalizers and transporters of small subgroups ----------------------------

def _labels(elems, gens):
    """Conjugation-invariant label per element: cycle type and class size in the subgroup."""
    label = {}
    for e in elems:
        if e in label:
            continue
        cls = _conj_orbit(e, gens)
        key = (cycle_type(e), len(cls))
        for c in cls:
            label[c] = key
    return label


class _Sub:
    """A small subgroup carried as an explicit element set, grouped by label."""

    def __init__(self, groups):
        self.groups = groups
        self.elems = frozenset(e for es in groups.values() for e in es)

    @classmethod
    def of(cls, elems, gens):
        groups = {}
        for e, key in _labels(elems, gens).items():
            groups.setdefault(key, []).append(e)
        return cls(groups)

    def conj(self, g):
        return _Sub({k: [conj(e, g) for e in es] for k, es in self.groups.items()})


def _element_set(Q):
    if Q.order() > ELEMENT_LIMIT:
        raise ResourceLimit(f"subgroup of order {Q.order()} exceeds the element limit")
    return frozenset(Q.elements())


def _generating_sequence(Q, base):
    """Elements z_1, z_2, ... generating Q, each chosen with few same-label rivals."""
    size = {}
    for key, es in base.groups.items():
        for e in es:
            size[e] = (len(es), key)
    ranked = sorted((e for e in base.elems if not is_identity(e)),
                    key=lambda e: (size[e][0], size[e][1], e))
    seq = []
    span = {tuple(range(Q.degree))}
    for e in ranked:
        if len(span) == len(base.elems):
            break
        if e in span:
            continue
        seq.append(e)
        span = _generate(seq, Q.degree)
    return seq


def _generate(gens, degree):
    ident = tuple(range(degree))
    out = {ident}
    queue = [ident]
    for a in queue:
        for g in gens:
            c = mul(a, g)
            if c not in out:
                out.add(c)
                queue.append(c)
    return out


class _NormalizerWork:
    def __init__(self, Q):
        self.Q = Q
        self.elems = _element_set(Q)
        self.base = _Sub.of(self.elems, Q.raw_generators)
        self.key = {e: k for k, es in self.base.groups.items() for e in es}
        self.seq = _generating_sequence(Q, self.base)

    def candidates(self, z, sub):
        return sorted(sub.groups.get(self.key[z], ()))

    def normalizer(self, H, idx):
        seq = self.seq
        if idx >= len(seq):
            return H
        if all(conj(q, h) in self.elems for q in self.Q.raw_generators
               for h in H.raw_generators):
            return H
        z = seq[idx]
        C = centralizer_of_set(H, [z])
        N1 = self.normalizer(C, idx + 1)
        gens = list(N1.raw_generators)
        orbit = set(_conj_orbit(z, gens))
        failed = set()
        base = self.base
        for t in self.candidates(z, base):
            if t in orbit or t in failed:
                continue
            c = conjugating_element(H, [z], [t])
            x = None
            if c is not None:
                target = base.conj(inv(c))
                y = self.transporter(C, target, idx + 1)
                if y is not None:
                    x = mul(y, c)
            if x is None:
                failed.update(_conj_orbit(t, N1.raw_generators))
            else:
                gens.append(x)
                orbit = set(_conj_orbit(z, gens))
        return H.subgroup(gens, order=len(orbit) * N1.order())

    def transporter(self, H, target, idx):
        """y in H with Q^y = target, where H centralizes seq[:idx]."""
        if target.elems == self.elems:
            return tuple(range(H.degree))
        seq = self.seq
        if idx >= len(seq) or H.is_trivial():
            return None
        z = seq[idx]
        C = None
        for t in self.candidates(z, target):
            c = conjugating_element(H, [z], [t])
            if c is None:
                continue
            if C is None:
                C = centralizer_of_set(H, [z])
            y = self.transporter(C, target.conj(inv(c)), idx + 1)
            if y is not None:
                return mul(y, c)
        return None


def _conj_orbit(z, gens):
    orb = [z]
    seen = {z}
    for a in orb:
        for g in gens:
            b = conj(a, g)
            if b not in seen:
                seen.add(b)
                orb.append(b)
    return orb


def normalizer(G, H):
    """N_G(H) for a subgroup H of G."""
    if not H.is_subgroup_of(G):
        raise MembershipError("H is not a subgroup of G")
    return stabilizer_of_subgroup(G, H)


def stabilizer_of_subgroup(G, H):
    """{x in G : H^x = H} for any group H of the same degree."""
    if H.is_trivial() or H.is_normal_in(G):
        return G
    return _NormalizerWork(H).normalizer(G, 0)


def subgroup_transporter(G, A, B):
    """g in G with A^g = B (raw), or None."""
    if A.order() != B.order():
        return None
    work = _NormalizerWork(A)
    target = _Sub.of(_element_set(B), B.raw_generators)
    if {k: len(v) for k, v in target.groups.items()} != \
            {k: len(v) for k, v in work.base.groups.items()}:
        return None
    return work.transporter(G, target, 0)
