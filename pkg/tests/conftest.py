import random

import pytest

from latkit import leech as lc
from latkit.atlas import atlas


@pytest.fixture(scope="session")
def leech_lattice():
    return lc.leech_lattice()


@pytest.fixture(scope="session")
def case_pairs():
    from latkit.verify import ALL_CASES, case_pair
    return {name: case_pair(name) for name in ALL_CASES}


@pytest.fixture
def rng():
    return random.Random(1729)


def named(name):
    return atlas(name).lattice


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])
