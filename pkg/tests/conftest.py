import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from projconf.linalg import ProjConfig


def e(n, *coeffs):
    """Vector of length n from leading coefficients."""
    out = [0] * n
    for k, c in enumerate(coeffs):
        out[k] = c
    return tuple(out)


def cfg(*cols, n=None):
    n = n or max(len(c) for c in cols)
    return ProjConfig(tuple(tuple(Fraction(x) for x in c) + (Fraction(0),) * (n - len(c)) for c in cols))


@pytest.fixture
def rng():
    return random.Random(12345)


small_int = st.integers(min_value=-3, max_value=3)


@st.composite
def configs(draw, n=None, m=None):
    """Configurations with small integer entries, so coincidences and dependencies are common."""
    n = n or draw(st.integers(2, 4))
    m = m or draw(st.integers(3, 5))
    cols = []
    for _ in range(m):
        col = draw(st.lists(small_int, min_size=n, max_size=n).filter(any))
        cols.append(tuple(col))
    return ProjConfig(tuple(tuple(Fraction(x) for x in c) for c in cols))


@st.composite
def invertible(draw, n=4):
    from projconf.linalg import determinant

    g = draw(st.lists(st.lists(small_int, min_size=n, max_size=n), min_size=n, max_size=n).filter(lambda g: determinant(g) != 0))
    return g


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(module.RESULTS):
        terminalreporter.write_line(module.RESULTS[number].line())
