import numpy as np
import pytest

import oracles as o
from conftest import group
from sylab.catalog import cyclic, symmetric
from sylab.chartab import (CharacterTable, character_table, class_constants,
                           defect_zero_count, irr_pprime_count, sporadic_orbit_check,
                           linear_characters, mckay_check, sylow_abelianization_orbits,
                           working_prime)
from sylab.classes import conjugacy_classes
from sylab.errors import HypothesisError, ResourceLimit
from sylab.limits import DEFAULT


def test_working_prime():
    l = working_prime(6, 24)
    assert l % 6 == 1 and l > 2 * 24 ** 0.5
    assert working_prime(6, 24, start=l) > l


def test_class_constants_s3():
    S3 = symmetric(3)
    a = class_constants(S3)
    data = conjugacy_classes(S3)
    trans = next(i for i in range(3) if data.orders[i] == 2)
    ident = next(i for i in range(3) if data.orders[i] == 1)
    # a transposition squared: three ordered pairs land on the identity
    assert a[trans, trans, ident] == 3


@pytest.mark.parametrize("name", ["s4", "psl2_7", "d7"])
def test_class_constants_sum_identity(name):
    G = group(name)
    a = class_constants(G)
    data = conjugacy_classes(G)
    sizes = np.array(data.sizes)
    for i in range(len(data)):
        for j in range(len(data)):
            assert int((a[i, j] * sizes).sum()) == data.sizes[i] * data.sizes[j]


def test_class_constants_against_brute_force():
    G = group("a5")
    a = class_constants(G)
    data = conjugacy_classes(G)
    E = o.closure(G.raw_generators, G.degree)
    brute = [sorted(c) for c in o.classes(E)]
    # match brute-force classes to library classes by content
    where = [next(b for b, c in enumerate(brute) if data.reps[i] in c) for i in range(len(data))]
    for i in range(len(data)):
        for j in range(len(data)):
            for k in range(len(data)):
                assert a[i, j, k] == o.class_constant(brute, where[i], where[j], where[k])


@pytest.mark.parametrize("name,degrees", [
    ("s4", [1, 1, 2, 3, 3]),
    ("psl2_7", [1, 3, 3, 6, 7, 8]),
    ("a5", [1, 3, 3, 4, 5]),
    ("c6", [1] * 6),
    ("d5", [1, 1, 2, 2]),
])
def test_degrees(name, degrees):
    T = character_table(group(name))
    assert sorted(T.degrees) == degrees
    T.check_orthogonality()
    T.check_galois()


def test_m11_table():
    T = character_table(group("m11"))
    assert sorted(T.degrees) == [1, 10, 10, 10, 11, 16, 16, 44, 45, 55]
    T.check_orthogonality()


def test_trivial_character_first():
    for name in ["c15", "s4", "psl2_11"]:
        T = character_table(group(name))
        assert T.degrees[0] == 1
        assert (T.values[0, :, 0] == 1).all() and not T.values[0, :, 1:].any()


def test_irrational_values_display():
    T = character_table(group("psl2_7"))
    shown = {T.format_value(c, i) for c in range(len(T)) for i in range(len(T))}
    assert any("z7" in s for s in shown)
    A5 = character_table(group("a5"))
    shown = {A5.format_value(c, i) for c in range(len(A5)) for i in range(len(A5))}
    assert any("z5" in s for s in shown)


def test_complex_values_match_degree_and_orthogonality():
    T = character_table(group("psl2_13"))
    X = T.to_complex()
    sizes = np.array(T.classes.sizes)
    gram = (X * sizes) @ X.conj().T / T.order
    assert np.allclose(gram, np.eye(len(T)))


def test_rationality():
    assert character_table(symmetric(5)).rational()
    assert not character_table(group("a5")).rational()


def test_counting_functions():
    T = character_table(group("psl2_7"))
    assert irr_pprime_count(T, 7) == 5
    assert defect_zero_count(T, 7) == 1
    T = character_table(symmetric(4))
    assert irr_pprime_count(T, 3) == 3
    assert defect_zero_count(T, 3) == 2


def test_table_bound():
    with pytest.raises(ResourceLimit):
        character_table(group("m12"), DEFAULT.with_(table_order=10 ** 4))


def test_serialization_roundtrip():
    G = group("psl2_11")
    T = character_table(G)
    text = T.to_text()
    U = CharacterTable.from_text(G, text)
    assert U.to_text() == text
    assert np.array_equal(U.values, T.values)
    with pytest.raises(ValueError):
        CharacterTable.from_text(group("psl2_13"), text)


def test_mckay_examples():
    r = mckay_check(group("psl2_7"), 7)
    assert r.verdict == "PASS"
    assert (r.quantities["irr_pprime_G"], r.quantities["irr_pprime_N"]) == (5, 5)
    r = mckay_check(group("psl2_11"), 11)
    assert r.verdict == "PASS" and r.quantities["irr_pprime_G"] == 7
    r = mckay_check(symmetric(4), 3)
    assert r.verdict == "VACUOUS" and "VACUOUS-HYPOTHESIS" in r.flags
    with pytest.raises(HypothesisError):
        mckay_check(symmetric(4), 2)


def test_linear_characters_counts():
    from sylab.sylow import sylow
    P = sylow(group("a9"), 3)
    keys, pos, m, chars = linear_characters(P)
    # the Sylow 3-subgroup of A9 is C3 wr C3: order 81 with derived subgroup of order 9
    assert len(chars) == len(keys) == 9
    assert len(set(chars)) == len(chars)
    C = linear_characters(cyclic(7))[3]
    assert len(C) == 7


def test_abelianization_orbits():
    assert sylow_abelianization_orbits(group("m11"), 3) == [8]
    assert sylow_abelianization_orbits(group("m12"), 3) == [2, 2, 4]
    assert sylow_abelianization_orbits(group("psl2_7"), 7) == [3, 3]


def test_sporadic_orbit_claim():
    assert sporadic_orbit_check(group("m11"), 3).verdict == "PASS"
    r = sporadic_orbit_check(group("a9"), 3)
    assert r.verdict == "VACUOUS" and r.hypothesis == "FAILS"
    # cyclic Sylow in a sporadic group: hypothesis fails
    r = sporadic_orbit_check(group("m11"), 11)
    assert r.hypothesis == "FAILS"
