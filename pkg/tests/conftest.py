import numpy as np
import pytest

from isopar.clifford import build_clifford_system
from isopar.fkm import FkmPolynomial

# (m, k) pairs used throughout: multiplicities {1,1}, {2,1}, {2,1}, {4,3}, {4,3}
SYSTEMS = [(1, 3), (1, 4), (2, 2), (3, 2), (4, 2)]

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def fkm_cache():
    cache = {}

    def get(m, k):
        if (m, k) not in cache:
            cache[(m, k)] = FkmPolynomial(build_clifford_system(m, k))
        return cache[(m, k)]

    return get


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
