import pytest

from centra import catalog
from centra.core import CayleyTable

# First loop, in lexicographic order, among all normalized loops of order 5
# that fails LC; found by exhaustive enumeration and re-checked with the
# nested-loop oracle in tests/naive.py.
NON_LC_5 = [
    [0, 1, 2, 3, 4],
    [1, 0, 3, 4, 2],
    [2, 3, 4, 0, 1],
    [3, 4, 1, 2, 0],
    [4, 2, 0, 1, 3],
]

# First commutative non-C loop among normalized loops of order 6 (there is
# none of order 5).
COMM_NON_C_6 = [
    [0, 1, 2, 3, 4, 5],
    [1, 0, 3, 2, 5, 4],
    [2, 3, 4, 5, 0, 1],
    [3, 2, 5, 4, 1, 0],
    [4, 5, 0, 1, 3, 2],
    [5, 4, 1, 0, 2, 3],
]


@pytest.fixture(scope="session")
def c12():
    return catalog.c_loop_12()


@pytest.fixture(scope="session")
def non_lc5():
    return CayleyTable(NON_LC_5)


@pytest.fixture(scope="session")
def comm_non_c6():
    return CayleyTable(COMM_NON_C_6)


@pytest.fixture(scope="session")
def small_loops():
    """Every normalized loop of order 1..5."""
    return [t for n in range(1, 6) for t in catalog.all_loops(n)]


ACCEPTANCE = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE:
        terminalreporter.write_line(line)
