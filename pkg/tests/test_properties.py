"""Randomised properties on small permutation groups."""

from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

import oracles as o
from sylab import PermGroup, Permutation
from sylab.chartab import character_table
from sylab.classes import conjugacy_classes
from sylab.gf import gf
from sylab.search import centralizer
from sylab.sylow import local_data, sylow

FAST = settings(max_examples=25, deadline=None,
                suppress_health_check=[HealthCheck.too_slow])


def perms(n):
    return st.permutations(list(range(1, n + 1))).map(Permutation)


small_groups = st.integers(3, 6).flatmap(
    lambda n: st.lists(perms(n), min_size=1, max_size=3).map(lambda gs: PermGroup(n, gs)))


@FAST
@given(st.integers(2, 7).flatmap(lambda n: st.tuples(perms(n), perms(n), perms(n))))
def test_group_axioms(abc):
    a, b, c = abc
    assert (a * b) * c == a * (b * c)
    assert a * ~a == Permutation.identity(a.degree)
    assert (a * b).order() == (b * a).order()
    assert a.conjugate(b).order() == a.order()


@FAST
@given(small_groups)
def test_order_matches_closure(G):
    assert G.order() == len(o.closure(G.raw_generators, G.degree))


@FAST
@given(small_groups)
def test_class_equation(G):
    data = conjugacy_classes(G)
    assert sum(data.sizes) == G.order()
    assert all(G.order() % s == 0 for s in data.sizes)


@FAST
@given(small_groups, st.data())
def test_centralizer_index_is_class_size(G, data):
    cls = conjugacy_classes(G)
    i = data.draw(st.integers(0, len(cls) - 1))
    C = centralizer(G, Permutation._raw(cls.reps[i]))
    assert G.order() // C.order() == cls.sizes[i]


@FAST
@given(small_groups, st.sampled_from([2, 3, 5]))
def test_sylow_properties(G, p):
    P = sylow(G, p)
    n = G.order()
    assert o.p_part(n, p) == P.order()
    if P.order() > 1 and p > 2:
        ld = local_data(G, p)
        # Sylow count is 1 mod p and equals the normalizer index
        assert (n // ld.N.order()) % p == 1
        assert ld.N.order() % ld.C.order() == 0


@FAST
@given(small_groups)
def test_character_table_invariants(G):
    T = character_table(G)
    assert sum(d * d for d in T.degrees) == G.order()
    assert len(T) == len(conjugacy_classes(G))
    assert all(G.order() % d == 0 for d in T.degrees)


@FAST
@given(st.sampled_from([(2, 4), (3, 3), (5, 2), (7, 2)]), st.data())
def test_field_distributivity(pf, data):
    F = gf(*pf)
    a, b, c = (data.draw(st.integers(0, F.q - 1)) for _ in range(3))
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    if a:
        assert F.mul(a, F.inv(a)) == 1
