import sys

import numpy as np
import pytest
from hypothesis import settings, strategies as st

from escortcode import make_distribution

settings.register_profile("default", deadline=None, max_examples=200)
settings.load_profile("default")

TABLE1 = (0.48, 0.3, 0.1, 0.05, 0.05, 0.01, 0.01)


def dists(min_size=2, max_size=12, min_value=1e-4):
    """Full-support distributions (entries bounded away from 0 before normalizing)."""
    return st.lists(
        st.floats(min_value, 1.0, allow_nan=False), min_size=min_size, max_size=max_size
    ).map(lambda v: make_distribution(v, normalize=True))


@st.composite
def kraft_lengths(draw, n, base=2):
    lengths = draw(st.lists(st.integers(1, n + 3), min_size=n, max_size=n))
    bumps = draw(st.lists(st.integers(0, n - 1), min_size=64, max_size=64))
    k = 0
    while sum(base ** -l for l in lengths) > 1:
        lengths[bumps[k % 64]] += 1
        k += 1
    return lengths


@st.composite
def dist_and_lengths(draw, min_size=2, max_size=10, base=2):
    p = draw(dists(min_size, max_size))
    return p, draw(kraft_lengths(len(p), base))


@pytest.fixture
def table1():
    return make_distribution(TABLE1)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
