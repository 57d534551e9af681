"""Permutations on {1..n}.

Products compose left to right: ``a * b`` applies ``a`` first, then ``b``.
Internally every permutation is a tuple of 0-based images; the hot loops in
the chain and search modules work on those raw tuples directly.
"""

from __future__ import annotations

import re
from math import gcd

__all__ = ["Permutation", "PermutationError", "parse_cycles"]


class PermutationError(ValueError):
    pass


def mul(a, b):
    """Raw product: apply ``a`` then ``b``."""
    return tuple(map(b.__getitem__, a))


def inv(a):
    res = [0] * len(a)
    for i, j in enumerate(a):
        res[j] = i
    return tuple(res)


def identity(n):
    return tuple(range(n))


def is_identity(a):
    return all(i == j for i, j in enumerate(a))


def power(a, k):
    n = len(a)
    if k < 0:
        a, k = inv(a), -k
    result = tuple(range(n))
    base = a
    while k:
        if k & 1:
            result = mul(result, base)
        k >>= 1
        if k:
            base = mul(base, base)
    return result


def cycles(a):
    """Nontrivial cycles of a raw permutation, each starting at its least point."""
    seen = bytearray(len(a))
    out = []
    for i in range(len(a)):
        if seen[i] or a[i] == i:
            continue
        cyc = [i]
        seen[i] = 1
        j = a[i]
        while j != i:
            seen[j] = 1
            cyc.append(j)
            j = a[j]
        out.append(cyc)
    return out


def cycle_type(a):
    """Sorted tuple of all cycle lengths, fixed points included."""
    seen = bytearray(len(a))
    lens = []
    for i in range(len(a)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = 1
            j = a[j]
            length += 1
        lens.append(length)
    lens.sort()
    return tuple(lens)


def order(a):
    result = 1
    for length in cycle_type(a):
        result = result * length // gcd(result, length)
    return result


def commutes(a, b):
    return mul(a, b) == mul(b, a)


def conj(a, g):
    """``g^-1 a g`` as a raw tuple: maps g(i) -> g(a(i))."""
    res = [0] * len(a)
    for i, j in enumerate(a):
        res[g[i]] = g[j]
    return tuple(res)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int) -> tuple:
    """Parse disjoint-cycle notation such as ``(1,2,3)(4,5)`` into a raw tuple.

    Cycles need not be disjoint; they are multiplied left to right.
    """
    text = text.strip()
    if not text:
        raise PermutationError("empty permutation text")
    pos = 0
    images = list(range(degree))
    for match in _CYCLE_RE.finditer(text):
        if text[pos:match.start()].strip():
            raise PermutationError(f"malformed cycle text {text[pos:match.start()]!r}")
        pos = match.end()
        body = match.group(1).strip()
        if not body:
            continue
        try:
            pts = [int(tok) for tok in body.split(",")]
        except ValueError:
            raise PermutationError(f"malformed cycle ({body})") from None
        seen = set()
        for pt in pts:
            if pt < 1 or pt > degree:
                raise PermutationError(f"point {pt} outside 1..{degree}")
            if pt in seen:
                raise PermutationError(f"point {pt} repeated in cycle ({body})")
            seen.add(pt)
        cyc = [pt - 1 for pt in pts]
        step = list(range(degree))
        for i, pt in enumerate(cyc):
            step[pt] = cyc[(i + 1) % len(cyc)]
        images = [step[x] for x in images]
    if text[pos:].strip():
        raise PermutationError(f"malformed cycle text {text[pos:]!r}")
    return tuple(images)


class Permutation:
    """A permutation of {1..degree}.

    >>> a = Permutation.from_cycles("(1,2,3)", 3)
    >>> b = Permutation.from_cycles("(1,2)", 3)
    >>> str(a * b)
    '(2,3)'
    """

    __slots__ = ("_t", "_hash")

    def __init__(self, images, *, zero_based=False):
        t = tuple(images) if zero_based else tuple(i - 1 for i in images)
        if sorted(t) != list(range(len(t))):
            raise PermutationError("images do not form a bijection")
        self._t = t
        self._hash = None

    @classmethod
    def _raw(cls, t):
        obj = cls.__new__(cls)
        obj._t = t
        obj._hash = None
        return obj

    @classmethod
    def identity(cls, degree):
        return cls._raw(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, text, degree):
        return cls._raw(parse_cycles(text, degree))

    @property
    def degree(self):
        return len(self._t)

    @property
    def images(self):
        return tuple(i + 1 for i in self._t)

    @property
    def raw(self):
        return self._t

    def __call__(self, point):
        if not 1 <= point <= len(self._t):
            raise PermutationError(f"point {point} outside 1..{len(self._t)}")
        return self._t[point - 1] + 1

    def _check(self, other):
        if len(self._t) != len(other._t):
            raise PermutationError(
                f"degree mismatch: {len(self._t)} vs {len(other._t)}")

    def __mul__(self, other):
        self._check(other)
        return Permutation._raw(mul(self._t, other._t))

    def __invert__(self):
        return Permutation._raw(inv(self._t))

    def inverse(self):
        return ~self

    def __pow__(self, k):
        return Permutation._raw(power(self._t, k))

    def conjugate(self, g):
        """``g^-1 * self * g``."""
        self._check(g)
        return Permutation._raw(conj(self._t, g._t))

    def order(self):
        return order(self._t)

    def cycle_type(self):
        return cycle_type(self._t)

    def is_identity(self):
        return is_identity(self._t)

    def support(self):
        return [i + 1 for i, j in enumerate(self._t) if i != j]

    def cycles(self):
        return [[i + 1 for i in c] for c in cycles(self._t)]

    def __eq__(self, other):
        return isinstance(other, Permutation) and self._t == other._t

    def __lt__(self, other):
        return self._t < other._t

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._t)
        return self._hash

    def __str__(self):
        cs = self.cycles()
        if not cs:
            return "()"
        return "".join("(" + ",".join(map(str, c)) + ")" for c in cs)

    def __repr__(self):
        return f"Permutation({self}, degree={self.degree})"
