import pytest

from conftest import group
from equivalence import ORACLE_SET, mismatches


@pytest.mark.parametrize("name", ORACLE_SET)
def test_matches_brute_force(name):
    G = group(name)
    assert G.order() <= 5000
    assert mismatches(G) == []
