"""Codeword-length measures, bound-achieving lengths and bound checks.

Four averages of a length vector ``l`` under a distribution ``p`` are
provided, all in units of D-ary digits:

* ``expected_length``      sum p_i l_i
* ``campbell_length``      (1/beta) log_D sum p_i D**(beta l_i)
* ``escort_mean_length``   sum P_i l_i with P the escort of order q
* ``new_length_measure``   1/(q-1) log_D sum P_i D**((q-1) l_i)

Lengths may be real valued here.  Whether a length vector is realizable by
an actual code (integers plus Kraft) is the coder's business, except in
:func:`verify_bounds`, where Kraft feasibility is the hypothesis of every
inequality being checked.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .entropy import renyi_entropy, shannon_entropy, tsallis_entropy_normalized, q_exp
from .errors import CardinalityMismatch, InvalidLength, InvalidOrder, KraftViolation, ZeroProbability
from .kraft import kraft_sum
from .prob import Distribution, escort, escort_weights_log, logsumexp

SLACK_TOL = 1e-9


def as_lengths(l: Sequence[float], p: Distribution | None = None) -> np.ndarray:
    """Validate a length vector (all entries > 0, matching ``p`` if given)."""
    arr = np.asarray(l, dtype=float)
    if arr.ndim != 1:
        raise InvalidLength("length vector must be one dimensional")
    if p is not None and arr.size != len(p):
        raise CardinalityMismatch(f"{arr.size} lengths for {len(p)} symbols")
    if not (arr.min() > 0 and np.isfinite(arr.max())):
        raise InvalidLength("codeword lengths must be finite and > 0")
    return arr


def campbell_beta(q: float) -> float:
    """Exponent beta paired with the Rényi order q through q = 1/(beta+1)."""
    if not q > 0:
        raise InvalidOrder(f"q must be > 0, got {q}")
    return (1.0 - q) / q


def campbell_order(beta: float) -> float:
    return 1.0 / (beta + 1.0)


def expected_length(p: Distribution, l: Sequence[float]) -> float:
    l = as_lengths(l, p)
    return math.fsum((p.probs * l).tolist())


def campbell_length(p: Distribution, l: Sequence[float], beta: float, base: int = 2) -> float:
    """Exponentially weighted mean length; penalizes long codewords for beta > 0."""
    l = as_lengths(l, p)
    if not beta > 0:
        raise InvalidOrder(f"beta must be > 0, got {beta}")
    mask = p.support
    ln_d = math.log(base)
    return logsumexp(np.log(p.probs[mask]) + beta * ln_d * l[mask]) / (beta * ln_d)


def escort_mean_length(p: Distribution, l: Sequence[float], q: float) -> float:
    l = as_lengths(l, p)
    return math.fsum((escort(p, q).probs * l).tolist())


def new_length_measure(p: Distribution, l: Sequence[float], q: float, base: int = 2) -> float:
    """Escort-weighted exponential mean ``1/(q-1) log_D sum P_i D**((q-1) l_i)``.

    ``q = 1`` returns :func:`expected_length` (the limit), ``q = math.inf``
    returns :func:`length_measure_limit`.  Zero-probability symbols carry no
    weight for any q, so at ``q = 0`` the support size replaces N.
    """
    l = as_lengths(l, p)
    q = float(q)
    if not q >= 0:
        raise InvalidOrder(f"q must be >= 0, got {q}")
    if q == 1.0:
        return expected_length(p, l)
    if math.isinf(q):
        return length_measure_limit(p, l, base)
    mask, log_w = escort_weights_log(p, q)
    ln_d = math.log(base)
    t = (q - 1.0) * ln_d * l[mask]
    if np.max(np.abs(t)) < 0.5:
        # near q = 1: keep relative precision of the tiny log before dividing by q-1
        val = math.log1p(math.fsum((np.exp(log_w) * np.expm1(t)).tolist()))
    else:
        val = logsumexp(log_w + t)
    return val / ((q - 1.0) * ln_d)


def length_measure_limit(p: Distribution, l: Sequence[float], base: int = 2) -> float:
    """Limit of :func:`new_length_measure` as q -> infinity.

    Equals ``max_i (l_i + log_D p_i) - log_D max_j p_j``.  This reduces to the
    length of the most probable symbol only when that symbol also maximizes
    ``p_i D**l_i``, e.g. for the bit-numbers ``l_i = -log_D p_i``.
    """
    l = as_lengths(l, p)
    mask = p.support
    ln_d = math.log(base)
    score = l[mask] + np.log(p.probs[mask]) / ln_d
    return float(np.max(score) - math.log(float(np.max(p.probs))) / ln_d)


def _integer_ceiling(x: np.ndarray) -> np.ndarray:
    near = np.round(x)
    out = np.where(np.abs(x - near) < 1e-9, near, np.ceil(x))
    return np.maximum(out, 1.0)


def _single_symbol_guard(l: np.ndarray) -> np.ndarray:
    # a lone symbol has -log 1 = 0; give it one digit like the coder does
    return np.ones(1) if l.size == 1 else l


def ideal_lengths_shannon(
    p: Distribution, base: int = 2, integer_rounding: bool = False, skip_zero: bool = False
) -> np.ndarray:
    """Bit-numbers ``-log_D p_i``, optionally rounded up to integers.

    A zero-probability symbol has no finite length; it raises
    :class:`ZeroProbability` unless ``skip_zero`` is set, in which case those
    symbols are left out of the returned vector.
    """
    mask = p.support
    if not skip_zero and not np.all(mask):
        bad = int(np.flatnonzero(~mask)[0])
        raise ZeroProbability(f"symbol {bad} has probability 0 and no finite length")
    l = -np.log(p.probs[mask]) / math.log(base)
    if integer_rounding:
        return _integer_ceiling(l)
    return _single_symbol_guard(l)


def ideal_lengths_campbell(
    p: Distribution, q: float, base: int = 2, integer_rounding: bool = False
) -> np.ndarray:
    """Lengths ``-log_D P_i`` for the escort P of order q.

    These minimize the escort mean length and attain the Rényi bound on the
    Campbell length with ``beta = (1 - q)/q``.  Rounded up they give a
    Shannon-style code for the escort source.
    """
    if not q > 0:
        raise InvalidOrder(f"q must be > 0, got {q}")
    if not p.full_support:
        bad = int(np.flatnonzero(~p.support)[0])
        raise ZeroProbability(f"symbol {bad} has probability 0 and no finite length")
    _, log_w = escort_weights_log(p, q)
    l = -log_w / math.log(base)
    if integer_rounding:
        return _integer_ceiling(l)
    return _single_symbol_guard(l)


@dataclass(frozen=True)
class BoundReport:
    """One evaluated inequality ``measure >= bound``.

    ``applicable`` is False when the inequality's hypotheses do not hold for
    the given order (then ``satisfied`` is informational only).
    """

    measure_name: str
    measure_value: float
    bound_name: str
    bound_value: float
    q: float
    tolerance: float = SLACK_TOL
    applicable: bool = True

    @property
    def slack(self) -> float:
        return self.measure_value - self.bound_value

    @property
    def satisfied(self) -> bool:
        return self.slack >= -self.tolerance

    @property
    def equality_within_tolerance(self) -> bool:
        return abs(self.slack) <= self.tolerance

    @property
    def violated(self) -> bool:
        return self.applicable and not self.satisfied

    @property
    def name(self) -> str:
        return f"{self.measure_name} >= {self.bound_name}"


def verify_bounds(
    p: Distribution,
    l: Sequence[float],
    q: float,
    base: int = 2,
    tolerance: float = SLACK_TOL,
) -> list[BoundReport]:
    """Evaluate every lower bound on the length measures for ``(p, l, q)``.

    Reports, in order:

    1. ``C_beta >= H_q(p)`` with beta = (1-q)/q; applicable for 0 < q < 1.
    2. ``M_q >= H_1(P)`` for the escort P of order q.
    3. ``L_q >= H_q(p)``.
    4. ``M_q >= L_q``.
    5. ``Lbar >= H_1(p)``; only emitted at q = 1.
    6. ``M_q >= S_q(p)`` (normalized Tsallis, nats); applicable when
       ``sum_i exp_q(-l_i) <= 1``.

    Raises :class:`KraftViolation` if ``l`` is not Kraft feasible.
    """
    l = as_lengths(l, p)
    q = float(q)
    if not q >= 0:
        raise InvalidOrder(f"q must be >= 0, got {q}")
    ks = kraft_sum(l, base)
    if ks > 1.0 + tolerance:
        raise KraftViolation(f"Kraft sum {ks:.12g} > 1 for base {base}")

    def rep(mname, mval, bname, bval, applicable=True):
        return BoundReport(mname, mval, bname, bval, q, tolerance, applicable)

    h_q = renyi_entropy(p, q, base)
    big_p = escort(p, q)
    m_q = math.fsum((big_p.probs * l).tolist())
    l_q = new_length_measure(p, l, q, base)
    reports = []

    if 0.0 < q < 1.0:
        beta = campbell_beta(q)
        reports.append(rep("C_beta", campbell_length(p, l, beta, base), "H_q(p)", h_q))
    else:
        reports.append(rep("C_beta", math.nan, "H_q(p)", h_q, applicable=False))

    reports.append(rep("M_q", m_q, "H_1(P)", shannon_entropy(big_p, base)))
    reports.append(rep("L_q", l_q, "H_q(p)", h_q))
    reports.append(rep("M_q", m_q, "L_q", l_q))
    if q == 1.0:
        reports.append(rep("Lbar", m_q, "H_1(p)", shannon_entropy(p, base)))

    q_kraft = math.fsum(q_exp(-li, q, clip=True) for li in l.tolist())
    reports.append(
        rep("M_q", m_q, "S_q(p)", tsallis_entropy_normalized(p, q), applicable=q_kraft <= 1.0 + tolerance)
    )
    return reports
