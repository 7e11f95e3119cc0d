from functools import lru_cache

import pytest

from arrfree import catalog
from arrfree.analyzer import classify

RIGID = list(catalog.RIGID)
DEGENERATION = "family4(1,0)"
ITEM3 = RIGID + ["boolean4", DEGENERATION]


@lru_cache(maxsize=None)
def report(name):
    """Classification of a catalog entry, computed once per session."""
    return classify(catalog.get(name))


@pytest.fixture
def classified():
    return report


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
