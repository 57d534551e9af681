import pytest

import oracles as o
from conftest import group
from sylab.catalog import cyclic, load_data_group, symmetric
from sylab.errors import HypothesisError
from sylab.structure import (check_theorem_1_1, composition_factors, identify_simple, is_simple,
                             maximal_normal_subgroup, normal_subgroups, simple_order_table,
                             sylow_cyclic, t11_factor_predicate)


def test_maximal_normal_subgroup():
    assert maximal_normal_subgroup(group("a5")) is None
    M = maximal_normal_subgroup(symmetric(4))
    assert M.order() == 12
    assert maximal_normal_subgroup(cyclic(6)).order() == 3
    assert maximal_normal_subgroup(cyclic(6), tiebreak="smallest").order() == 2


def test_normal_subgroups_of_s4_match_brute_force():
    S4 = symmetric(4)
    E = o.closure(S4.raw_generators, 4)
    # brute force: unions of classes that are closed under products
    found = sorted(N.order() for N in normal_subgroups(S4))
    assert found == [1, 4, 12, 24]
    for N in normal_subgroups(S4):
        els = set(N.elements())
        assert all(o.pconj(x, g) in els for x in els for g in E)


def test_composition_factors_examples():
    assert sorted(map(str, composition_factors(symmetric(4)))) == ["C2", "C2", "C2", "C3"]
    assert list(map(str, composition_factors(group("psl2_7")))) == ["PSL2(7)"]
    assert sorted(map(str, composition_factors(group("a5xc7")))) == ["A5", "C7"]
    assert composition_factors(cyclic(1)) == []


def test_identify_simple():
    a5 = identify_simple(group("a5"))
    assert (a5.kind, a5.n) == ("alternating", 5)
    assert set(a5.psl2_forms) == {4, 5}
    assert str(identify_simple(group("psl2_5"))) == "A5"
    f = identify_simple(group("psl2_7"))
    assert (f.kind, f.q, f.p, f.f) == ("psl2", 7, 7, 1)
    assert str(identify_simple(group("psl2_9"))) == "A6"
    assert str(identify_simple(group("m11"))) == "M11"
    with pytest.raises(HypothesisError):
        identify_simple(symmetric(4))


def test_order_20160_disambiguation():
    a8 = identify_simple(group("a8"))
    assert str(a8) == "A8" and 15 in _orders(group("a8"))
    psl34 = load_data_group("psl3_4", 20160)
    assert psl34.order() == 20160
    assert str(identify_simple(psl34)) == "PSL3(4)"
    assert 15 not in _orders(psl34)


def _orders(G):
    from sylab.classes import conjugacy_classes
    return set(conjugacy_classes(G).orders)


def test_simple_order_table():
    T = simple_order_table()
    assert T[60] == ("A5",)
    assert T[168] == ("PSL2(7)",)
    assert T[20160] == ("A8", "PSL3(4)")
    assert [n for n, labels in T.items() if len(labels) > 1] == [20160]
    assert T[244823040] == ("M24",)


def test_m24_identified():
    assert str(identify_simple(group("m24"), assume_simple=True)) == "M24"


def test_sylow_cyclic():
    assert sylow_cyclic(group("a5"), 5)
    assert not sylow_cyclic(group("a7"), 3)
    assert sylow_cyclic(cyclic(6), 5)


def test_t11_factor_predicate():
    G = group("psl2_7")
    assert t11_factor_predicate(identify_simple(G), G, 7)
    G = group("psl2_13")
    assert t11_factor_predicate(identify_simple(G), G, 13)
    G = group("a9")
    assert not t11_factor_predicate(identify_simple(G), G, 3)
    # PSL2(9) = A6 at p = 3: 9 = 1 mod 4 and the Sylow subgroup is noncyclic
    G = group("psl2_9")
    assert not t11_factor_predicate(identify_simple(G), G, 3)
    G = group("psl2_27")
    assert t11_factor_predicate(identify_simple(G), G, 3)


def test_factor_claim_examples():
    r = check_theorem_1_1(group("psl2_7"), 7)
    assert (r.verdict, r.hypothesis, r.quantities["automizer_order"]) == ("PASS", "HOLDS", 3)
    r = check_theorem_1_1(symmetric(4), 3)
    assert (r.verdict, r.hypothesis) == ("VACUOUS", "FAILS")
    r = check_theorem_1_1(group("m11"), 3)
    assert r.verdict == "VACUOUS"
    assert r.quantities["automizer_order"] % 2 == 0
    assert r.quantities["contrapositive"] == "consistent"
    with pytest.raises(HypothesisError):
        check_theorem_1_1(group("psl2_7"), 2)


def test_is_simple():
    assert is_simple(group("a6"))
    assert not is_simple(group("s5"))
    assert is_simple(cyclic(7))
    assert not is_simple(cyclic(1))
