import pytest

import oracles as o
from conftest import group
from sylab.blocks import (Reduction, amk_check, awc_check, block_distribution,
                          brauer_correspondent, defect_group, height_zero_count,
                          p_radical_subgroups, p_regular_class_count, weight_count)
from sylab.catalog import symmetric
from sylab.chartab import character_table
from sylab.errors import HypothesisError
from sylab.cyclotomic import cyclotomic_poly
from sylab.gf import is_irreducible, least_cyclotomic_factor

SMALL = [("s4", 3), ("s4", 2), ("a5", 5), ("a5", 3), ("psl2_7", 7), ("psl2_7", 3),
         ("s5", 5), ("c3xs3", 3), ("d5", 5), ("d7", 7), ("psl2_11", 11), ("psl2_11", 5)]


def _elements(G):
    return o.closure(G.raw_generators, G.degree)


def test_reduction_is_a_ring_map():
    red = Reduction(5, 12)
    # 5 is prime to 12 and has order 2 mod 12
    assert (red.e1, red.k) == (12, 2)
    assert is_irreducible(list(red.modulus), 5)
    # x has order exactly 12 in GF(5)[x]/(g)
    images = {tuple(row) for row in red.powers.tolist()}
    assert len(images) == 12
    assert Reduction(3, 12).e1 == 4
    # zeta^6 = -1, so zeta^6 + 1 maps to zero
    assert red.add(red([0] * 6 + [1]), red([1])) == 0
    # zeta_4 = zeta_12^3 in a table of exponent 4
    assert red([0, 1], 4) == red([0, 0, 0, 1])


@pytest.mark.parametrize("p,n", [(3, 140), (11, 276), (3, 190), (2, 15), (7, 78)])
def test_least_cyclotomic_factor(p, n):
    g = least_cyclotomic_factor(p, n)
    k = len(g) - 1
    assert pow(p, k, n) == 1 and all(pow(p, j, n) != 1 for j in range(1, k))
    # g divides Phi_n mod p
    phi = [c % p for c in cyclotomic_poly(n)]
    assert _rem(phi, list(g), p) == [0] * k
    if k <= 40:
        assert is_irreducible(list(g), p)


def _rem(a, g, p):
    a = list(a)
    k = len(g) - 1
    for i in range(len(a) - 1, k - 1, -1):
        c = a[i] % p
        for j in range(k + 1):
            a[i - k + j] = (a[i - k + j] - c * g[j]) % p
    return [x % p for x in a[:k]]


@pytest.mark.parametrize("name,p", SMALL)
def test_blocks_match_osima(name, p):
    G = group(name)
    T = character_table(G)
    part = block_distribution(G, T, p)
    mine = sorted(sorted(T.degrees[c] for c in B.characters) for B in part.blocks)
    assert mine == o.osima_blocks(o.Abstract.of_perms(_elements(G)), p)
    assert part.principal.is_principal


def test_block_examples():
    S4 = symmetric(4)
    part = block_distribution(S4, character_table(S4), 3)
    assert [sorted(s["degrees"]) for s in part.summary()] == [[1, 1, 2], [3], [3]]
    assert [B.defect for B in part.blocks] == [1, 0, 0]
    G = group("psl2_7")
    part = block_distribution(G, character_table(G), 7)
    assert sorted(part.summary()[0]["degrees"]) == [1, 3, 3, 6, 8]
    assert len(part.blocks) == 2


def test_defect_groups():
    G = group("psl2_7")
    T = character_table(G)
    part = block_distribution(G, T, 7)
    D = defect_group(G, part, part.principal)
    assert D.order() == 7
    for B in part.blocks:
        assert defect_group(G, part, B).order() == 7 ** B.defect


def test_brauer_correspondent_of_principal_block():
    G = group("a5")
    part = block_distribution(G, character_table(G), 5)
    B = part.principal
    D = defect_group(G, part, B)
    H, PH, b = brauer_correspondent(G, 5, B, D, partition=part)
    assert H.order() == 10
    assert b.is_principal
    assert height_zero_count(part.table, B, 5) == 4
    assert height_zero_count(PH.table, b, 5) == 4


@pytest.mark.parametrize("name,p", SMALL)
def test_radicals_match_brute_force(name, p):
    G = group(name)
    brute = sorted((len(Q), len(N)) for Q, N in o.radical_classes(_elements(G), p, G.degree))
    mine = sorted((Q.order(), N.order()) for Q, N in p_radical_subgroups(G, p))
    assert mine == brute


def test_radical_examples():
    assert [(Q.order(), N.order()) for Q, N in p_radical_subgroups(group("psl2_7"), 7)] == \
        [(1, 168), (7, 21)]
    assert [(Q.order(), N.order()) for Q, N in p_radical_subgroups(symmetric(4), 2)] == \
        [(4, 24), (8, 8)]


@pytest.mark.parametrize("name,p", SMALL)
def test_weights_match_brute_force(name, p):
    G = group(name)
    E = _elements(G)
    w = weight_count(G, p, census=False)
    assert w.total == o.weight_total(E, p, G.degree)
    assert w.p_regular == o.p_regular_classes(E, p) == p_regular_class_count(G, p)


def test_weight_census_by_block():
    G = group("psl2_7")
    w = weight_count(G, 7)
    assert w.total == w.p_regular == 4
    # three weights from N/P = C3 in the principal block, one for the degree-7 character
    assert w.per_block == {0: 3, 1: 1}
    d = w.to_dict()
    assert d["total_weights"] == 4


@pytest.mark.parametrize("name,p", [("psl2_7", 7), ("psl2_11", 11), ("m11", 3), ("a7", 5),
                                    ("c21", 7), ("psl2_7xc3", 3)])
def test_awc_and_amk(name, p):
    G = group(name)
    r = awc_check(G, p)
    assert r.verdict in ("PASS", "VACUOUS")
    assert r.quantities["weights"] == r.quantities["p_regular_classes"]
    r = amk_check(G, p)
    assert r.verdict in ("PASS", "VACUOUS")


def test_amk_principal_counts():
    r = amk_check(group("psl2_11"), 11)
    assert r.verdict == "PASS"
    principal = r.quantities["blocks"][0]
    assert principal["G_side"] == principal["N_side"] == 7


def test_odd_prime_required():
    with pytest.raises(HypothesisError):
        awc_check(symmetric(4), 2)
    with pytest.raises(HypothesisError):
        amk_check(symmetric(4), 2)
