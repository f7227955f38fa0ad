import random
from fractions import Fraction

import pytest
from hypothesis import settings

from loopcrystal import ProductPoint

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture
def running():
    """The n = m = 2 point x1 = (2, 3), x2 = (5, 7) used throughout."""
    return ProductPoint.of((2, 3), (5, 7))


@pytest.fixture
def rng():
    return random.Random("unit-tests")


def F(p, q=1):
    return Fraction(p, q)


def pytest_terminal_summary(terminalreporter):
    import sys

    acceptance = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    results = getattr(acceptance, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for label, _, _ in acceptance.CRITERIA:
        if label in results:
            terminalreporter.write_line(results[label][1])
