import pytest

from knotram.config import FactorBudget


# Certified primes for (d, 0) surgery on K_29
TABLE_T29 = {
    5: [],
    7: [13],
    9: [431],
    11: [43, 131, 1033],
    13: [1117, 1481],
    15: [149, 179],
    17: [67, 101, 509, 4657],
    19: [37],
    21: [],
    23: [10938592571969],
    25: [90636599549],
    27: [],
    29: [292319],
    31: [],
    33: [659, 24800291],
    35: [25409],
    37: [73, 294149, 531516948137827],
    39: [35883041],
    41: [4271162617],
    43: [3697, 107069],
    45: [89],
    47: [],
    49: [97],
}


@pytest.fixture
def Budget():
    return FactorBudget(seed=0)


@pytest.fixture
def TableT29():
    return dict(TABLE_T29)


# add this so slow tests are skipped by default
def pytest_addoption(parser):
    parser.addoption(
        "--runslow", action="store_true", default=False, help="run slow tests"
    )


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: mark test as slow to run")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        # --runslow given in cli: do not skip slow tests
        return
    skip_slow = pytest.mark.skip(reason="need --runslow option to run")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)
