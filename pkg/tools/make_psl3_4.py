"""Write src/sylab/data/psl3_4.grp: PSL3(4) on the 21 points of PG(2,4).

SL3(4) acts on row vectors; points are the nonzero vectors scaled so their
first nonzero coordinate is 1.  The scalar matrices of determinant 1 act
trivially, so the image is PSL3(4) of order 20160.
"""

from itertools import product
from pathlib import Path

from sylab.catalog import render_group
from sylab.gf import gf
from sylab.group import PermGroup

F = gf(2, 2)
w = F.gen


def normalize(v):
    for c in v:
        if c:
            inv = F.inv(c)
            return tuple(F.mul(inv, x) for x in v)
    raise ValueError("zero vector")


points = sorted({normalize(v) for v in product(range(4), repeat=3) if any(v)})
index = {pt: i for i, pt in enumerate(points)}


def act(M):
    img = []
    for v in points:
        u = [0, 0, 0]
        for i in range(3):
            for j in range(3):
                u[j] = F.add(u[j], F.mul(v[i], M[i][j]))
        img.append(index[normalize(u)])
    return tuple(img)


transvection = [[1, 1, 0], [0, 1, 0], [0, 0, 1]]
monomial = [[0, 1, 0], [0, 0, 1], [1, 0, 0]]
diagonal = [[w, 0, 0], [0, F.inv(w), 0], [0, 0, 1]]

gens = [act(transvection), act(monomial), act(diagonal)]
G = PermGroup(len(points), gens, name="PSL3(4)")
assert G.order() == 20160, G.order()

note = ("PSL3(4) acting on the 21 points of the projective plane over GF(4).\n"
        "Generated by tools/make_psl3_4.py from the transvection [[1,1,0],[0,1,0],[0,0,1]],\n"
        "the permutation matrix of (1,2,3) and diag(w, w^-1, 1), w a generator of GF(4)*.\n"
        "Order 20160 checked by this package.")
out = Path(__file__).resolve().parents[1] / "src" / "sylab" / "data" / "psl3_4.grp"
out.write_text(render_group(G, note), encoding="utf-8")
print(out, G.order())
