import sys
import numpy as np
import pytest

from implicitize import curves


@pytest.fixture
def rng():
    return np.random.default_rng(20221017)


@pytest.fixture(scope="session")
def c1():
    return curves.c1()


@pytest.fixture(scope="session")
def c2():
    return curves.c2()


@pytest.fixture(scope="session")
def line():
    from implicitize import BezierCurve2

    return BezierCurve2([(0.0, 0.0), (1.0, 1.0)])


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
