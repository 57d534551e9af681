"""Permutation-group computations for checking Sylow automizer statements.

The package covers stabilizer chains and backtrack searches, Sylow and
local subgroups, composition factors, character tables, p-blocks and
weights, plus a command-line harness (``sylab``) that runs the checks on
a catalog of groups.
"""

from .errors import GroupFileError, HypothesisError, MembershipError, ResourceLimit, SylabError
from .group import PermGroup
from .perm import Permutation

__version__ = "0.1.0"

__all__ = [
    "GroupFileError", "HypothesisError", "MembershipError", "PermGroup",
    "Permutation", "ResourceLimit", "SylabError", "__version__",
]
