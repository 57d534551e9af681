import pytest

import oracles as o
from conftest import group
from sylab import MembershipError, PermGroup, Permutation
from sylab.catalog import alternating, cyclic, symmetric
from sylab.chain import schreier_sims
from sylab.classes import conjugacy_classes
from sylab.normal import center, derived_subgroup, normal_closure, quotient_representation
from sylab.perm import PermutationError
from sylab.search import centralizer, conjugator, normalizer


def P(text, n):
    return Permutation.from_cycles(text, n)


def test_element_arithmetic():
    assert P("(1,2,3)", 3) * P("(1,2)", 3) == P("(2,3)", 3)
    assert ~P("(1,2,3)", 3) == P("(1,3,2)", 3)
    assert P("(1,2)(3,4,5)", 5).order() == 6
    assert P("(1,2,3)", 4)(3) == 1
    assert P("(1,2,3)", 3) ** 3 == Permutation.identity(3)


def test_permutation_parse_errors():
    with pytest.raises(PermutationError, match="repeated"):
        Permutation.from_cycles("(1,2,2)", 3)
    with pytest.raises(PermutationError):
        Permutation.from_cycles("(1,5)", 4)
    with pytest.raises(PermutationError):
        Permutation([1, 1, 2])


def test_degree_mismatch_rejected():
    with pytest.raises(PermutationError):
        P("(1,2)", 2) * P("(1,2)", 3)


def test_chain_orders():
    S4 = PermGroup(4, [P("(1,2)", 4), P("(1,2,3,4)", 4)])
    assert S4.order() == 24
    A5 = PermGroup(5, [P("(1,2,3)", 5), P("(3,4,5)", 5)])
    assert A5.order() == 60
    assert PermGroup(3, []).order() == 1


def test_m24_order_with_second_base():
    M = group("m24")
    assert M.order() == 244823040
    other = schreier_sims(24, M.raw_generators, base_prefix=(23, 22, 21))
    assert other.order() == 244823040
    assert other.base[:3] == [23, 22, 21]


def test_chain_membership():
    A5 = alternating(5)
    assert P("(1,2,3)", 5) in A5
    assert P("(1,2)", 5) not in A5
    assert P("(1,2)", 6) not in A5


def test_orbits():
    S4 = symmetric(4)
    assert S4.orbit(1) == [1, 2, 3, 4]
    assert PermGroup(4, []).orbit(2) == [2]
    G = PermGroup(5, [P("(1,2,3)", 5)])
    assert G.orbit(4) == [4]
    T = S4.orbit_transversal(1)
    assert all(u(1) == q for q, u in T.items())


def test_classes_small():
    assert sorted(conjugacy_classes(symmetric(4)).sizes) == [1, 3, 6, 6, 8]
    assert sorted(conjugacy_classes(alternating(5)).sizes) == [1, 12, 12, 15, 20]
    assert len(conjugacy_classes(PermGroup(3, []))) == 1


def test_class_data_invariants():
    data = conjugacy_classes(group("psl2_7"))
    inv = data.inverse
    assert all(inv[inv[i]] == i for i in range(len(data)))
    assert all(data.sizes[i] == data.sizes[inv[i]] for i in range(len(data)))
    assert set(data.power_maps) == {2, 3, 7}
    # classes ordered by (element order, size, representative)
    keys = [(data.orders[i], data.sizes[i], data.reps[i]) for i in range(len(data))]
    assert keys == sorted(keys)


def test_sampled_classes_agree_with_enumeration():
    from sylab.limits import DEFAULT
    G = alternating(7)
    full = conjugacy_classes(G)
    H = alternating(7)
    sampled = conjugacy_classes(H, DEFAULT.with_(enumerate_order=10))
    assert sampled.sampled
    assert sampled.sizes == full.sizes
    assert sampled.orders == full.orders


def test_centralizer_examples():
    S4 = symmetric(4)
    assert centralizer(S4, Permutation.identity(4)).order() == 24
    assert centralizer(S4, P("(1,2)(3,4)", 4)).order() == 8
    assert centralizer(alternating(5), P("(1,2,3,4,5)", 5)).order() == 5
    with pytest.raises(MembershipError):
        centralizer(alternating(5), P("(1,2)", 5))


def test_normalizer_examples():
    S4 = symmetric(4)
    assert normalizer(S4, S4).order() == 24
    H = PermGroup(4, [P("(1,2,3)", 4)])
    assert normalizer(S4, H).order() == 6
    A5 = alternating(5)
    F = PermGroup(5, [P("(1,2,3,4,5)", 5)])
    assert normalizer(A5, F).order() == 10


def test_conjugator_examples():
    S3 = symmetric(3)
    x, y = P("(1,2,3)", 3), P("(1,3,2)", 3)
    g = conjugator(S3, x, y)
    assert g is not None and x.conjugate(g) == y
    assert conjugator(S3, x, x) is not None
    assert conjugator(symmetric(4), P("(1,2)", 4), P("(1,2,3)", 4)) is None


def test_normal_structure():
    S4 = symmetric(4)
    assert center(S4).order() == 1
    D = derived_subgroup(S4)
    assert D.order() == 12 and D.equals(alternating(4))
    A5 = alternating(5)
    assert normal_closure(A5, [P("(1,2,3)", 5).raw]).order() == 60


def test_quotients():
    S4 = symmetric(4)
    V4 = PermGroup(4, [P("(1,2)(3,4)", 4), P("(1,3)(2,4)", 4)])
    q = quotient_representation(S4, V4)
    assert q.order() == 6
    assert not q.group.is_abelian()
    # the element map is a homomorphism with kernel V4
    elems = S4.elements()
    for a in elems[:8]:
        for b in elems[:8]:
            from sylab.perm import mul
            assert q.image_raw(mul(a, b)) == mul(q.image_raw(a), q.image_raw(b))
    assert all(q.image(g).is_identity() for g in V4.generators)
    A4 = alternating(4)
    q = quotient_representation(A4, V4)
    assert q.order() == 3
    q = quotient_representation(S4, PermGroup(4, []))
    assert q.order() == 24


def test_chain_vs_closure_on_catalog():
    for name in ["d7", "c15", "s5", "psl2_7", "c3xs3"]:
        G = group(name)
        assert G.order() == len(o.closure(G.raw_generators, G.degree))
