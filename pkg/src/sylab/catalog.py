"""Standard groups, PSL2(q) on the projective line, and group files.

Group file format (UTF-8 text)::

    name: M11
    degree: 11
    # comment lines; the comments make up the provenance note
    (2,10)(4,11)(5,7)(8,9)
    (1,4,3,8)(2,5,6,9)

One generator per line in cycle notation, ``()`` for the identity.
"""

from __future__ import annotations

import math
import re
from importlib import resources
from pathlib import Path

from .errors import GroupFileError
from .gf import gf
from .group import PermGroup
from .numtheory import prime_power
from .perm import Permutation, PermutationError, parse_cycles

MAX_DEGREE = 10_000


def _check_degree(n):
    if n > MAX_DEGREE:
        raise ValueError(f"degree {n} exceeds the limit {MAX_DEGREE}")


def _cycle(points, n):
    img = list(range(n))
    for i, a in enumerate(points):
        img[a] = points[(i + 1) % len(points)]
    return tuple(img)


def symmetric(n):
    if n < 1:
        raise ValueError("n must be positive")
    _check_degree(n)
    gens = [] if n == 1 else [_cycle([0, 1], n), _cycle(list(range(n)), n)]
    return PermGroup(n, gens, name=f"S{n}", order=math.factorial(n))


def alternating(n):
    if n < 1:
        raise ValueError("n must be positive")
    _check_degree(n)
    if n < 3:
        return PermGroup(n, [], name=f"A{n}", order=1)
    if n == 3:
        gens = [_cycle([0, 1, 2], n)]
    elif n % 2:
        gens = [_cycle([0, 1, 2], n), _cycle(list(range(n)), n)]
    else:
        gens = [_cycle([0, 1, 2], n), _cycle(list(range(1, n)), n)]
    return PermGroup(n, gens, name=f"A{n}", order=math.factorial(n) // 2)


def cyclic(n):
    if n < 1:
        raise ValueError("n must be positive")
    _check_degree(n)
    gens = [_cycle(list(range(n)), n)] if n > 1 else []
    return PermGroup(n, gens, name=f"C{n}", order=n)


def dihedral(n):
    """Dihedral group of order 2n acting on the n vertices of a polygon."""
    if n < 3:
        raise ValueError("dihedral(n) needs n >= 3")
    _check_degree(n)
    refl = tuple((n - 1 - i) % n for i in range(n))
    return PermGroup(n, [_cycle(list(range(n)), n), refl], name=f"D{2 * n}", order=2 * n)


def direct_product(A, B, name=None):
    n, m = A.degree, B.degree
    _check_degree(n + m)
    gens = [g + tuple(range(n, n + m)) for g in A.raw_generators]
    gens += [tuple(range(n)) + tuple(x + n for x in g) for g in B.raw_generators]
    label = name or f"{A.name or 'A'}x{B.name or 'B'}"
    return PermGroup(n + m, gens, name=label, order=A.order() * B.order())


def psl2(q):
    """PSL2(q) acting on the q+1 points of the projective line.

    Points 1..q are the field elements 0..q-1 (in the encoding of ``gf``),
    point q+1 is infinity.  The generators are the images of the unipotent
    [[1,1],[0,1]], the diagonal diag(w, 1/w) for a primitive w, and
    [[0,1],[-1,0]]; SL2(q) acts through Moebius maps, so its centre acts
    trivially.
    """
    pf = prime_power(q)
    if pf is None:
        raise ValueError(f"{q} is not a prime power")
    if q < 4:
        raise ValueError("psl2(q) needs q >= 4 (smaller cases are solvable)")
    p, f = pf
    F = gf(p, f)
    inf = q
    w = F.gen
    w2 = F.mul(w, w)
    one = 1
    minus_one = F.neg(one)

    def moebius(a, b, c, d):
        # x -> (a x + c) / (b x + d), the action of [[a, b], [c, d]] on rows (x, 1)
        img = [0] * (q + 1)
        for x in range(q):
            num = F.add(F.mul(a, x), c)
            den = F.add(F.mul(b, x), d)
            img[x] = inf if den == 0 else F.div(num, den)
        img[inf] = inf if b == 0 else F.div(a, b)
        return tuple(img)

    gens = [
        moebius(one, 0, one, one),            # x -> x + 1
        moebius(w2, 0, 0, one),               # x -> w^2 x
        moebius(0, minus_one, one, 0),        # x -> -1/x
    ]
    order = q * (q * q - 1) // (2 if q % 2 else 1)
    G = PermGroup(q + 1, gens, name=f"psl2({q})", order=order)
    return G


# group files ---------------------------------------------------------------

_KEY = re.compile(r"^\s*(name|degree)\s*:\s*(.*?)\s*$", re.I)


def parse_group_text(text, path=None):
    name = None
    degree = None
    gens = []
    notes = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            notes.append(line[1:].strip())
            continue
        if "#" in line:
            line = line.split("#", 1)[0].strip()
        m = _KEY.match(line)
        if m:
            key, val = m.group(1).lower(), m.group(2)
            if key == "name":
                name = val
            else:
                try:
                    degree = int(val)
                except ValueError:
                    raise GroupFileError(f"bad degree {val!r}", lineno, path) from None
                if degree < 1:
                    raise GroupFileError("degree must be positive", lineno, path)
            continue
        if degree is None:
            raise GroupFileError("generator before the degree line", lineno, path)
        try:
            gens.append((parse_cycles(line, degree), line))
        except PermutationError as exc:
            raise GroupFileError(str(exc), lineno, path) from None
    if degree is None:
        raise GroupFileError("missing degree line", None, path)
    G = PermGroup(degree, [g for g, _ in gens], name=name or (Path(path).stem if path else None))
    G.provenance = "\n".join(notes)
    G.source_lines = [s for _, s in gens]
    return G


def parse_group_file(path):
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise GroupFileError(f"cannot read file: {exc.strerror}", None, str(path)) from None
    return parse_group_text(text, str(path))


def render_group(G, provenance=None):
    lines = [f"name: {G.name or 'group'}", f"degree: {G.degree}"]
    note = provenance if provenance is not None else getattr(G, "provenance", "")
    for row in (note or "").splitlines():
        lines.append(f"# {row}".rstrip())
    for g in G.raw_generators:
        lines.append(str(Permutation._raw(g)))
    return "\n".join(lines) + "\n"


def data_file(name):
    return resources.files("sylab").joinpath("data").joinpath(f"{name}.grp")


def load_data_group(name, order=None):
    ref = data_file(name)
    G = parse_group_text(ref.read_text(encoding="utf-8"), f"{name}.grp")
    if order is not None:
        G._order_hint = order
    return G


# built-in registry -----------------------------------------------------------

_FILE_ORDERS = {"m11": 7920, "m12": 95040, "m24": 244823040, "psl3_4": 20160}

PRODUCTS = ["a5xc7", "c3xs3", "psl2_7xc3", "a5xa5", "s4xc5", "psl2_11xc2"]
PSL2_QS = [5, 7, 9, 11, 13, 17, 19, 23, 25, 27]


def builtin_names(include_files=True):
    names = [f"s{n}" for n in range(5, 10)] + [f"a{n}" for n in range(5, 10)]
    names += ["c6", "c15", "c21", "d5", "d7", "d9"]
    names += [f"psl2_{q}" for q in PSL2_QS]
    names += PRODUCTS
    if include_files:
        names += ["m11", "m12", "m24"]
    return names


_SIMPLE = [
    (re.compile(r"^s(\d+)$"), lambda m: symmetric(int(m.group(1)))),
    (re.compile(r"^a(\d+)$"), lambda m: alternating(int(m.group(1)))),
    (re.compile(r"^c(\d+)$"), lambda m: cyclic(int(m.group(1)))),
    (re.compile(r"^d(\d+)$"), lambda m: dihedral(int(m.group(1)))),
    (re.compile(r"^psl2_(\d+)$"), lambda m: _named(psl2(int(m.group(1))), m.group(0))),
]


def _named(G, name):
    G.name = name
    return G


def _simple_builtin(name):
    if name in _FILE_ORDERS:
        return load_data_group(name, _FILE_ORDERS[name])
    for pat, make in _SIMPLE:
        m = pat.match(name)
        if m:
            return make(m)
    return None


def builtin(name):
    """Construct a catalog group by name, e.g. ``s4``, ``psl2_7``, ``a5xc7``, ``m11``."""
    key = name.strip().lower()
    G = _simple_builtin(key)
    if G is not None:
        G.name = key
        return G
    for i, ch in enumerate(key):
        if ch != "x" or i == 0:
            continue
        left, right = key[:i], key[i + 1:]
        A, B = _simple_builtin(left), _simple_builtin(right)
        if A is not None and B is not None:
            return direct_product(A, B, name=key)
    raise KeyError(f"unknown built-in group {name!r}")


def load(spec):
    """A group from a file path or a built-in name."""
    path = Path(spec)
    if path.suffix == ".grp" or path.exists():
        return parse_group_file(path)
    return builtin(spec)
