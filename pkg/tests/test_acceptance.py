"""P1..P8 at their stated tolerances; one pass/fail line per criterion."""

import pytest

from arcticcurve.precision import PrecisionContext
from arcticcurve.validation import CHECKS, run_check

from .conftest import ACCEPTANCE_LINES


@pytest.fixture(scope="module")
def ctx():
    return PrecisionContext(bits=256)


@pytest.mark.parametrize("check_id", list(CHECKS))
def test_criterion(check_id, ctx):
    result = run_check(check_id, ctx)
    print(result.line())
    ACCEPTANCE_LINES.append(result.line())
    assert result.passed, result.line()
