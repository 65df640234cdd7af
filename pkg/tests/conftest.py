import math

import pytest

from lllcount.analysis import SANDWICH_ETA_DELTA, SANDWICH_N

GRID_ETA_DELTA = list(SANDWICH_ETA_DELTA)
GRID_N = list(SANDWICH_N)


@pytest.fixture
def phi_pi6():
    return math.pi / 6


# one line per acceptance criterion, filled by test_acceptance
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
