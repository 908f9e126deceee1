import numpy as np
import pytest

from uniqrecall.spectra import FrequencySpectrum, RedundancyProfile

# colors with 6, 3, 3, 2 and 1 balls: 15 balls, 5 colors
RUNNING_RHO = (6, 3, 3, 2, 1)
RUNNING_ALPHA = (0.2, 0.2, 0.4, 0.0, 0.0, 0.2)


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", help="run slow Monte Carlo sweeps")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


@pytest.fixture
def running_profile():
    return RedundancyProfile(RUNNING_RHO)


@pytest.fixture
def running_spectrum():
    return FrequencySpectrum.from_dense(RUNNING_ALPHA)


@pytest.fixture
def rng():
    return np.random.default_rng(20260101)


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("tests.test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in module.summary_lines():
        terminalreporter.write_line(line)
