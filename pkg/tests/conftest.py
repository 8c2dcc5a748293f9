import pytest

from arcticcurve.params import params_from_phase
from arcticcurve.precision import PrecisionContext


@pytest.fixture(scope="session")
def ctx():
    return PrecisionContext(bits=256)


@pytest.fixture(scope="session")
def mp(ctx):
    return ctx.mp


@pytest.fixture(scope="session")
def af(ctx):
    return params_from_phase(-3, 0.7, ctx)


@pytest.fixture(scope="session")
def dis(ctx):
    return params_from_phase(0.3, 1.6, ctx)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
