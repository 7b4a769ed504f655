import math

import mpmath as mp
import numpy as np
import pytest
from hypothesis import assume, given, strategies as st

from escortcode import (
    campbell_beta,
    campbell_length,
    escort,
    escort_mean_length,
    expected_length,
    ideal_lengths_campbell,
    ideal_lengths_shannon,
    kraft_sum,
    length_measure_limit,
    make_distribution,
    new_length_measure,
    renyi_entropy,
    shannon_entropy,
    uniform,
    verify_bounds,
)
from escortcode.errors import CardinalityMismatch, InvalidOrder, KraftViolation, ZeroProbability

from conftest import TABLE1, dist_and_lengths, dists

mp.mp.dps = 40


def mp_new_length(p, l, q, base):
    """Direct high-precision evaluation of 1/(q-1) log_D sum P_i D^((q-1) l_i)."""
    p = [mp.mpf(float(x)) for x in p]
    w = [x**q for x in p]
    s = mp.fsum(w)
    inner = mp.fsum(wi / s * mp.power(base, (q - 1) * li) for wi, li in zip(w, l))
    return float(mp.log(inner, base) / (q - 1))


def mp_campbell(p, l, beta, base):
    inner = mp.fsum(mp.mpf(float(x)) * mp.power(base, beta * li) for x, li in zip(p, l))
    return float(mp.log(inner, base) / beta)


# ----- expected length ---------------------------------------------------------

@pytest.mark.parametrize(
    ("probs", "lengths", "expected"),
    [([0.5, 0.5], [1, 1], 1.0), ([0.5, 0.25, 0.25], [1, 2, 2], 1.5), (TABLE1, [1, 2, 3, 4, 5, 6, 6], 1.95)],
)
def test_expected_length(probs, lengths, expected):
    assert expected_length(make_distribution(probs), lengths) == pytest.approx(expected, abs=1e-15)


def test_cardinality_mismatch():
    p = uniform(3)
    for f in (expected_length, lambda p, l: escort_mean_length(p, l, 0.5)):
        with pytest.raises(CardinalityMismatch):
            f(p, [1, 2])
    with pytest.raises(CardinalityMismatch):
        campbell_length(p, [1, 2], 1.0)
    with pytest.raises(CardinalityMismatch):
        new_length_measure(p, [1, 2], 2.0)


# ----- Campbell length ----------------------------------------------------------

def test_campbell_two_symbols():
    assert campbell_length(uniform(2), [1, 2], 1.0, 2) == pytest.approx(1.5849625007211562, abs=1e-15)


@given(dists(), st.floats(0.01, 20.0), st.integers(1, 9))
def test_campbell_constant_lengths(p, beta, c):
    assert campbell_length(p, [c] * len(p), beta, 2) == pytest.approx(c, abs=1e-12)


@given(dists(), st.floats(0.05, 10.0), st.sampled_from([2, 3]))
def test_campbell_equality_case(p, beta, base):
    q = 1 / (beta + 1)
    l = -np.log(escort(p, q).probs) / math.log(base)
    assert campbell_length(p, l, beta, base) == pytest.approx(renyi_entropy(p, q, base), abs=1e-10)


@given(dist_and_lengths(), st.floats(0.01, 20.0))
def test_campbell_matches_oracle(pl, beta):
    p, l = pl
    assert campbell_length(p, l, beta, 2) == pytest.approx(mp_campbell(p, l, beta, 2), rel=1e-12)


def test_campbell_rejects_nonpositive_beta():
    with pytest.raises(InvalidOrder):
        campbell_length(uniform(2), [1, 1], 0.0)


@given(dist_and_lengths(), st.floats(0.01, 30.0))
def test_campbell_bound(pl, beta):
    p, l = pl
    assert campbell_length(p, l, beta, 2) >= renyi_entropy(p, 1 / (beta + 1), 2) - 1e-9


# ----- escort mean length -----------------------------------------------------

def test_escort_mean_two_symbols():
    assert escort_mean_length(make_distribution([0.8, 0.2]), [1, 2], 2.0) == pytest.approx(18 / 17, abs=1e-15)


@given(dist_and_lengths())
def test_escort_mean_at_one_is_expected_length(pl):
    p, l = pl
    assert escort_mean_length(p, l, 1.0) == expected_length(p, l)


@given(st.integers(1, 10), st.floats(0.0, 10.0), st.data())
def test_escort_mean_uniform_is_arithmetic_mean(n, q, data):
    l = data.draw(st.lists(st.integers(1, 20), min_size=n, max_size=n))
    assert escort_mean_length(uniform(n), l, q) == pytest.approx(sum(l) / n, abs=1e-12)


# ----- new length measure ----------------------------------------------------

def test_new_length_two_symbols():
    assert new_length_measure(uniform(2), [1, 2], 2.0, 2) == pytest.approx(1.5849625007211562, abs=1e-15)


@given(dist_and_lengths(), st.sampled_from([0.0, 0.2, 0.5, 0.9, 1.1, 1.5, 3.0, 8.0]), st.sampled_from([2, 3]))
def test_new_length_matches_oracle(pl, q, base):
    p, l = pl
    assert new_length_measure(p, l, q, base) == pytest.approx(mp_new_length(p, l, q, base), rel=1e-11, abs=1e-12)


@given(dist_and_lengths())
def test_new_length_q_one_branch(pl):
    p, l = pl
    assert new_length_measure(p, l, 1.0) == expected_length(p, l)
    # continuous there, with slope ln2/2 * Var_p(l) + Cov_p(l, ln p)
    eps = 1e-9
    near = new_length_measure(p, l, 1 + eps)
    assert near == pytest.approx(mp_new_length(p, l, 1 + eps, 2), rel=1e-11, abs=1e-12)
    w = p.probs[p.probs > 0]
    ls = np.asarray(l, dtype=float)[p.probs > 0]
    dl = ls - w @ ls
    slope = math.log(2) / 2 * float(w @ dl**2) + float(w @ (dl * np.log(w)))
    assert near - expected_length(p, l) == pytest.approx(eps * slope, rel=1e-3, abs=1e-12)


@given(dist_and_lengths(), st.sampled_from([2, 3]))
def test_new_length_q_zero(pl, base):
    p, l = pl
    expected = -math.log(kraft_sum(l, base), base) + math.log(len(p), base)
    assert new_length_measure(p, l, 0.0, base) == pytest.approx(expected, abs=1e-10)


def test_new_length_q_zero_kraft_tight():
    p = make_distribution(TABLE1)
    assert new_length_measure(p, [1, 2, 3, 4, 5, 6, 6], 0.0, 2) == pytest.approx(math.log2(7), abs=1e-12)


def test_new_length_q_zero_uses_support_size():
    p = make_distribution([0.5, 0.0, 0.5])
    assert new_length_measure(p, [1, 2, 1], 0.0, 2) == pytest.approx(1.0, abs=1e-15)


def test_new_length_large_q_no_overflow():
    p = make_distribution([0.6, 0.3, 0.1])
    v = new_length_measure(p, [1, 2, 40], 1e4, 2)
    assert math.isfinite(v)


@given(dist_and_lengths(), st.sampled_from([2, 3]))
def test_limit_formula_matches_large_q(pl, base):
    p, l = pl
    assume(np.sort(p.probs)[-2] < 0.95 * p.probs.max())
    lim = length_measure_limit(p, l, base)
    assert new_length_measure(p, l, math.inf, base) == lim
    # the approach is O((log N + max |log p_i|) / q)
    q = 1e5
    scale = math.log(len(p), base) - math.log(float(p.probs.min()), base)
    assert abs(new_length_measure(p, l, q, base) - lim) <= scale / (q - 1) + 1e-9


def test_limit_equals_top_length_for_bit_numbers():
    p = make_distribution(TABLE1)
    l = ideal_lengths_shannon(p, 2)
    assert length_measure_limit(p, l, 2) == pytest.approx(l[0], abs=1e-12)


def test_limit_can_differ_from_top_length():
    # the most probable symbol does not maximize p_i 2**l_i here
    p = make_distribution([0.34, 0.33, 0.33])
    assert length_measure_limit(p, [1, 2, 2], 2) == pytest.approx(2 + math.log2(0.33 / 0.34), abs=1e-12)


# ----- ideal lengths -----------------------------------------------------------

def test_shannon_lengths_dyadic():
    assert ideal_lengths_shannon(make_distribution([0.5, 0.25, 0.25]), 2, integer_rounding=True).tolist() == [1, 2, 2]
    assert ideal_lengths_shannon(uniform(2), 2).tolist() == [1.0, 1.0]


def test_shannon_lengths_reference_source():
    expected = [1.0588936890535685, 1.7369655941662062, 3.3219280948873623, 4.3219280948873623,
                4.3219280948873623, 6.6438561897747247, 6.6438561897747247]
    np.testing.assert_allclose(ideal_lengths_shannon(make_distribution(TABLE1), 2), expected, atol=1e-14)


def test_shannon_lengths_zero_probability():
    p = make_distribution([0.5, 0.0, 0.5])
    with pytest.raises(ZeroProbability):
        ideal_lengths_shannon(p, 2)
    assert ideal_lengths_shannon(p, 2, skip_zero=True).tolist() == [1.0, 1.0]


@given(dists(), st.sampled_from([2, 3, 5]))
def test_rounded_shannon_lengths_are_kraft_feasible(p, base):
    assert kraft_sum(ideal_lengths_shannon(p, base, integer_rounding=True), base) <= 1 + 1e-12


def test_campbell_lengths_two_symbols():
    l = ideal_lengths_campbell(make_distribution([0.8, 0.2]), 2.0, 2)
    np.testing.assert_allclose(l, [0.087462841250339408, 4.0874628412503394], atol=1e-14)


@given(dists(), st.sampled_from([2, 3]))
def test_campbell_lengths_at_one_are_bit_numbers(p, base):
    np.testing.assert_allclose(ideal_lengths_campbell(p, 1.0, base), ideal_lengths_shannon(p, base), atol=1e-12)


@pytest.mark.parametrize("q", [0.1, 0.7, 3.0])
def test_campbell_lengths_uniform(q):
    np.testing.assert_allclose(ideal_lengths_campbell(uniform(6), q, 3), math.log(6, 3), atol=1e-14)


@given(dists(), st.floats(0.05, 8.0), st.sampled_from([2, 3]))
def test_campbell_lengths_closed_form(p, q, base):
    l = ideal_lengths_campbell(p, q, base)
    closed = -q * np.log(p.probs) / math.log(base) + (1 - q) * renyi_entropy(p, q, base)
    assert np.all(np.abs(l - closed) <= 1e-12 * max(1.0, float(np.max(np.abs(closed)))))


# ----- verify_bounds -------------------------------------------------------------

Q_GRID = [0.0, 0.3, 0.5, 0.7, 1.0, 1.5, 2.0, 5.0]


def by_name(reports):
    return {r.name: r for r in reports}


def test_bound_report_fields():
    r = by_name(verify_bounds(make_distribution(TABLE1), [1, 2, 3, 4, 5, 6, 6], 0.4))
    assert set(r) == {"C_beta >= H_q(p)", "M_q >= H_1(P)", "L_q >= H_q(p)", "M_q >= L_q", "M_q >= S_q(p)"}
    for rep in r.values():
        assert rep.slack == rep.measure_value - rep.bound_value
        assert rep.satisfied == (rep.slack >= -rep.tolerance)
    assert r["M_q >= L_q"].slack > 0 and r["L_q >= H_q(p)"].slack >= 0


def test_shannon_report_only_at_one():
    p = make_distribution(TABLE1)
    assert "Lbar >= H_1(p)" in by_name(verify_bounds(p, [1, 2, 3, 4, 5, 6, 6], 1.0))
    assert "Lbar >= H_1(p)" not in by_name(verify_bounds(p, [1, 2, 3, 4, 5, 6, 6], 0.7))


@pytest.mark.parametrize("q", [0.0, 1.0, 1.5])
def test_campbell_report_not_applicable_outside_unit_interval(q):
    r = by_name(verify_bounds(uniform(2), [1, 1], q))["C_beta >= H_q(p)"]
    assert not r.applicable and not r.violated


def test_verify_bounds_rejects_kraft_violation():
    with pytest.raises(KraftViolation):
        verify_bounds(uniform(3), [1, 1, 2], 0.5)


@given(dists(), st.sampled_from([0.2, 0.5, 0.7, 0.95]), st.sampled_from([2, 3]))
def test_equality_cases_escort_lengths(p, q, base):
    l = ideal_lengths_campbell(p, q, base)
    r = by_name(verify_bounds(p, l, q, base))
    assert r["C_beta >= H_q(p)"].equality_within_tolerance
    assert r["M_q >= H_1(P)"].equality_within_tolerance


@given(dists(), st.sampled_from(Q_GRID), st.sampled_from([2, 3]))
def test_equality_case_bit_numbers(p, q, base):
    l = ideal_lengths_shannon(p, base)
    assert by_name(verify_bounds(p, l, q, base))["L_q >= H_q(p)"].equality_within_tolerance


@given(dist_and_lengths(), st.sampled_from(Q_GRID))
def test_lower_bounds_hold(pl, q):
    p, l = pl
    for r in verify_bounds(p, l, q):
        if r.name != "M_q >= L_q":
            assert not r.violated, r


@given(dist_and_lengths(), st.floats(0.0, 1.0))
def test_sandwich_below_one(pl, q):
    p, l = pl
    assert escort_mean_length(p, l, q) >= new_length_measure(p, l, q) - 1e-9
    assert new_length_measure(p, l, q) >= renyi_entropy(p, q, 2) - 1e-9


@given(dist_and_lengths(), st.sampled_from([0.5, 2.0]))
def test_jensen_direction(pl, q):
    # M_q - L_q has the sign of 1 - q for non-constant lengths
    p, l = pl
    assume(len(set(l)) > 1)
    gap = escort_mean_length(p, l, q) - new_length_measure(p, l, q)
    assert gap * (1 - q) > 0


@given(dists(), st.floats(0.05, 0.95))
def test_duality_new_length_is_campbell(p, q):
    l = list(range(1, len(p) + 1))
    lhs = new_length_measure(escort(p, q), l, 1 / q, 2)
    assert lhs == pytest.approx(campbell_length(p, l, campbell_beta(q), 2), abs=1e-9)


def test_tsallis_footnote_report_applicability():
    # q = 2: exp_q(-l) = 1/(1+l); lengths (3, 3) meet the condition
    r = by_name(verify_bounds(uniform(2), [3, 3], 2.0))["M_q >= S_q(p)"]
    assert r.applicable and r.satisfied
    # Huffman lengths of the reference source do not, and the inequality indeed fails
    p = make_distribution(TABLE1)
    r = by_name(verify_bounds(p, [1, 2, 3, 4, 5, 6, 6], 2.0))["M_q >= S_q(p)"]
    assert not r.applicable and not r.satisfied and not r.violated


@given(dist_and_lengths(), st.floats(0.05, 6.0))
def test_tsallis_bound_under_q_kraft(pl, q):
    p, l = pl
    r = by_name(verify_bounds(p, l, q))["M_q >= S_q(p)"]
    if r.applicable:
        assert r.satisfied
