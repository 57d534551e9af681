import sys
from functools import lru_cache
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from sylab.catalog import builtin  # noqa: E402

ACCEPTANCE_LINES = []


@lru_cache(maxsize=None)
def group(name):
    """Catalog groups shared across tests, so memoised data is reused."""
    return builtin(name)


@pytest.fixture
def G():
    return group


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
