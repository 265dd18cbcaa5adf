import numpy as np
import pytest

from regions import REGISTRY, REGISTRY_IDS

_ACCEPTANCE = pytest.StashKey[list]()


@pytest.fixture(params=REGISTRY, ids=REGISTRY_IDS)
def registered(request):
    name, region, anchor, symmetric = request.param
    if anchor is None:
        anchor = region.default_anchor
    return name, region, np.asarray(anchor, dtype=float), symmetric


@pytest.fixture
def rng():
    return np.random.default_rng(20240101)


@pytest.fixture
def acceptance_log(request):
    return request.config.stash.setdefault(_ACCEPTANCE, [])


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_ACCEPTANCE, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
