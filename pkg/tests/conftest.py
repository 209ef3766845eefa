import sys

import pytest

from latmark.io import fixture_path, read_lattice
from latmark.lattice import canonicalize

WORKED_ROWS = [(3, 0, 1, -1, 0), (0, 1, 6, 0, -1), (1, 1, 0, 0, 0), (5, 0, 0, 0, 0)]
MACAULAY_ROWS = [(1, -1, -1, 1), (1, -2, 2, -1)]


@pytest.fixture
def worked():
    return canonicalize(WORKED_ROWS, 5)


@pytest.fixture
def plane():
    return canonicalize([(1, 1), (5, 0)], 2)


@pytest.fixture
def macaulay():
    return canonicalize(MACAULAY_ROWS, 4)


@pytest.fixture
def diagonal():
    return canonicalize([(1, 1)], 2)


FIXTURE_FILES = ["plane.lat", "worked_example.lat", "macaulay.lat", "pure_rank1.lat"]


@pytest.fixture(params=FIXTURE_FILES)
def fixture_lattice(request):
    return read_lattice(fixture_path(request.param))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.RESULTS:
        terminalreporter.write_line(line)
