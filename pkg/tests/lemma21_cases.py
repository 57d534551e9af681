"""(label, G, H, p) triples with H normal in G and G = PH for odd p."""

from sylab.catalog import alternating, builtin, cyclic, direct_product, symmetric


def _left(A, B):
    """A x B together with its normal subgroup A x 1."""
    G = direct_product(A, B)
    return G, G.subgroup(G.raw_generators[: len(A.raw_generators)])


def _right(A, B):
    G = direct_product(A, B)
    return G, G.subgroup(G.raw_generators[len(A.raw_generators):])


def _v4_in_a4():
    A4 = alternating(4)
    from sylab.normal import derived_subgroup
    return A4, derived_subgroup(A4)


def cases():
    out = []
    G, H = _right(cyclic(3), symmetric(3))
    out.append(("C3 x S3, H = 1 x S3", G, H, 3))
    G, H = _v4_in_a4()
    out.append(("A4, H = V4", G, H, 3))
    for name, p in [("psl2_7", 7), ("psl2_11", 11), ("a5", 5), ("a5", 3), ("psl2_13", 13),
                    ("m11", 3)]:
        G = builtin(name)
        out.append((f"{name}, H = G", G, G, p))
    G, H = _left(builtin("psl2_7"), cyclic(3))
    out.append(("PSL2(7) x C3, H = PSL2(7) x 1", G, H, 3))
    G, H = _left(alternating(5), cyclic(7))
    out.append(("A5 x C7, H = A5 x 1", G, H, 7))
    G, H = _left(alternating(4), cyclic(3))
    out.append(("A4 x C3, H = A4 x 1", G, H, 3))
    G, H = _left(alternating(5), cyclic(3))
    out.append(("A5 x C3, H = A5 x 1", G, H, 3))
    G, H = _left(cyclic(5), cyclic(3))
    out.append(("C5 x C3, H = C5 x 1", G, H, 3))
    G, H = _left(cyclic(3), cyclic(7))
    out.append(("C3 x C7, H = C3 x 1", G, H, 7))
    return out


def violation():
    """C3 x S3 with H = C3 x 1: PH is the Sylow subgroup, not G."""
    G, H = _left(cyclic(3), symmetric(3))
    return G, H, 3
