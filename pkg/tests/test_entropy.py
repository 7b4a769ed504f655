import math

import numpy as np
import pytest
from hypothesis import assume, given, strategies as st

from escortcode import (
    EntropyOrder,
    escort,
    escort_mean_length,
    make_distribution,
    q_exp,
    q_log,
    renyi_entropy,
    shannon_entropy,
    tsallis_entropy_normalized,
    uniform,
)
from escortcode.errors import DomainError, InvalidOrder

from conftest import TABLE1, dists


def test_renyi_uniform_two():
    assert renyi_entropy(uniform(2), EntropyOrder(2.0, 2)) == pytest.approx(1.0, abs=1e-15)


@pytest.mark.parametrize("alpha", [0.0, 0.5, 1.0, 2.0, math.inf])
@pytest.mark.parametrize("base", [2, 3, 10])
def test_renyi_degenerate(alpha, base):
    assert renyi_entropy(make_distribution([1.0, 0.0]), alpha, base) == 0.0


def test_renyi_two_symbols_order_two():
    # mpmath: -log2(0.68)
    assert renyi_entropy(make_distribution([0.8, 0.2]), 2, 2) == pytest.approx(0.55639334852438529, abs=1e-15)


def test_renyi_reference_source():
    assert renyi_entropy(make_distribution(TABLE1), 0.7, 2) == pytest.approx(2.1185183692206495, abs=1e-14)


@pytest.mark.parametrize(
    ("probs", "expected"), [([0.5, 0.5], 1.0), ([1.0], 0.0), ([0.5, 0.25, 0.25], 1.5)]
)
def test_shannon(probs, expected):
    assert shannon_entropy(make_distribution(probs), 2) == expected


def test_shannon_ignores_zeros():
    assert shannon_entropy(make_distribution([0.5, 0.0, 0.5]), 2) == 1.0


def test_entropy_order_validation():
    with pytest.raises(InvalidOrder):
        EntropyOrder(-1.0)
    with pytest.raises(ValueError):
        EntropyOrder(1.0, base=1)


@given(dists(), st.lists(st.floats(0.0, 30.0), min_size=2, max_size=6))
def test_renyi_non_increasing_in_order(p, orders):
    orders = sorted(orders)
    values = [renyi_entropy(p, a, 2) for a in orders]
    assert all(a >= b - 1e-12 for a, b in zip(values, values[1:]))


@given(dists())
def test_renyi_continuous_at_one(p):
    h1 = shannon_entropy(p, 2)
    for delta in (1e-8, -1e-8, 1e-7, -3e-7):
        assert abs(renyi_entropy(p, 1 + delta, 2) - h1) < 1e-6


@given(dists(), st.sampled_from([0.25, 0.5, 0.8, 2.0, 4.0]))
def test_renyi_duality(p, q):
    assert renyi_entropy(escort(p, q), 1 / q, 2) == pytest.approx(renyi_entropy(p, q, 2), abs=1e-10)


@given(dists(min_size=1), st.floats(0.0, 20.0), st.sampled_from([2, 3, 7]))
def test_renyi_range(p, alpha, base):
    h = renyi_entropy(p, alpha, base)
    assert -1e-15 <= h <= math.log(len(p), base) + 1e-12


@pytest.mark.parametrize("n", [2, 3, 8])
@pytest.mark.parametrize("alpha", [0.0, 0.5, 3.0])
def test_renyi_uniform_attains_max(n, alpha):
    assert renyi_entropy(uniform(n), alpha, 2) == pytest.approx(math.log2(n), abs=1e-13)


def test_tsallis_uniform_two_order_two():
    # both candidate closed forms give +-1; the footnote equality selects +1
    assert tsallis_entropy_normalized(uniform(2), 2.0) == pytest.approx(1.0, abs=1e-15)


def test_tsallis_certain():
    assert tsallis_entropy_normalized(make_distribution([1.0]), 2.0) == 0.0


@given(dists())
def test_tsallis_limit_is_shannon_nats(p):
    h = shannon_entropy(p, math.e)
    assert tsallis_entropy_normalized(p, 1.0) == pytest.approx(h, abs=1e-15)
    assert tsallis_entropy_normalized(p, 1 + 1e-7) == pytest.approx(h, abs=1e-6)


@given(dists(), st.floats(0.05, 6.0))
def test_tsallis_matches_escort_mean_of_q_log_lengths(p, q):
    lengths = [-q_log(x, q) for x in p]
    if min(lengths) <= 0:
        return
    assert escort_mean_length(p, lengths, q) == pytest.approx(tsallis_entropy_normalized(p, q), rel=1e-10, abs=1e-12)


def test_tsallis_reference_source():
    # mpmath values of (1/sum p^q - 1)/(q - 1)
    p = make_distribution(TABLE1)
    assert tsallis_entropy_normalized(p, 0.7) == pytest.approx(1.1876902912993606, abs=1e-14)
    assert tsallis_entropy_normalized(p, 2.0) == pytest.approx(1.9797377830750894, abs=1e-14)


def test_q_log_basics():
    assert q_log(1.0, 0.3) == 0.0
    assert q_log(1.0, 2.0) == 0.0
    assert q_log(5.0, 1.0) == math.log(5.0)
    with pytest.raises(DomainError):
        q_log(0.0, 0.5)


def test_q_exp_roundtrip_example():
    assert q_exp(q_log(0.3, 0.5), 0.5) == pytest.approx(0.3, abs=1e-12)


@given(st.floats(1e-6, 1e6), st.floats(0.0, 5.0))
def test_q_exp_inverts_q_log(x, q):
    # inversion loses ~x**|q-1| ulps to cancellation in 1 + (1-q) ln_q(x)
    assume(abs(q - 1) * abs(math.log(x)) < 9)
    assert q_exp(q_log(x, q), q) == pytest.approx(x, rel=1e-10)


def test_q_exp_domain():
    with pytest.raises(DomainError):
        q_exp(-3.0, 0.5)  # 1 + 0.5 * -3 < 0
    with pytest.raises(DomainError):
        q_exp(1.0, 2.0)  # 1 - 1 = 0
    assert q_exp(-3.0, 0.5, clip=True) == 0.0
    assert q_exp(2.0, 1.0) == math.exp(2.0)
