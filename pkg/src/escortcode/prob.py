"""Finite probability distributions and the escort transform.

The escort of order ``q`` reweights a distribution by ``p_i**q`` and
renormalizes.  ``q > 1`` sharpens the dominant symbols, ``0 < q < 1``
flattens the distribution, ``q = 1`` is the identity and ``q = 0`` gives
the uniform distribution over the support.

The Rényi order (often written alpha) and the escort index q are
conceptually different parameters; this package uses one float for both
and lets the caller decide which role it plays.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import CardinalityMismatch, EmptyDistribution, InvalidOrder, NegativeProbability, NotNormalized

CONSTRUCTION_TOL = 1e-9
COMPARISON_TOL = 1e-12


def _frozen(values: Iterable[float]) -> np.ndarray:
    arr = np.array(values, dtype=float)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class Distribution:
    """Probability vector over symbols ``0..N-1`` with optional labels.

    Build instances with :func:`make_distribution`; the constructor itself
    only checks shape and sign so that internal callers can skip the
    normalization test when they already renormalized.
    """

    probs: np.ndarray
    labels: tuple[str, ...] | None = field(default=None)

    def __post_init__(self):
        probs = _frozen(self.probs)
        if probs.ndim != 1 or probs.size == 0:
            raise EmptyDistribution("distribution needs at least one symbol")
        if not (probs.min() >= 0 and np.isfinite(probs.max())):
            raise NegativeProbability("probabilities must be finite and >= 0")
        object.__setattr__(self, "probs", probs)
        if self.labels is not None:
            labels = tuple(str(x) for x in self.labels)
            if len(labels) != probs.size:
                raise CardinalityMismatch(f"{len(labels)} labels for {probs.size} probabilities")
            object.__setattr__(self, "labels", labels)

    def __len__(self) -> int:
        return int(self.probs.size)

    def __iter__(self):
        return iter(self.probs.tolist())

    def __getitem__(self, i):
        return self.probs[i]

    def __repr__(self) -> str:
        return f"Distribution({', '.join(f'{x:.6g}' for x in self.probs)})"

    @property
    def support(self) -> np.ndarray:
        """Boolean mask of the symbols with nonzero probability."""
        return self.probs > 0

    @property
    def full_support(self) -> bool:
        return bool(np.all(self.probs > 0))

    def symbol_names(self) -> tuple[str, ...]:
        if self.labels is not None:
            return self.labels
        return tuple(str(i) for i in range(len(self)))

    def allclose(self, other: "Distribution", tol: float = COMPARISON_TOL) -> bool:
        return len(self) == len(other) and bool(np.all(np.abs(self.probs - other.probs) <= tol))


def make_distribution(
    values: Sequence[float],
    normalize: bool = False,
    tolerance: float = CONSTRUCTION_TOL,
    labels: Sequence[str] | None = None,
) -> Distribution:
    """Validate ``values`` and wrap them in a :class:`Distribution`.

    With ``normalize`` the values are divided by their sum; otherwise the sum
    must already be within ``tolerance`` of one.  In both cases the stored
    vector is renormalized so it sums to one at double precision.
    """
    vals = [float(v) for v in values]
    if not vals:
        raise EmptyDistribution("distribution needs at least one symbol")
    for i, v in enumerate(vals):
        if v < 0 or math.isnan(v):
            raise NegativeProbability(f"entry {i} is {v}; probabilities must be >= 0")
        if math.isinf(v):
            raise NegativeProbability(f"entry {i} is not finite")
    total = math.fsum(vals)
    if total <= 0:
        raise EmptyDistribution("at least one probability must be positive")
    if not normalize and abs(total - 1.0) > tolerance:
        raise NotNormalized(f"probabilities sum to {total!r}, not 1 (tolerance {tolerance:g})")
    return Distribution(_frozen([v / total for v in vals]), labels)


def uniform(n: int) -> Distribution:
    if n < 1:
        raise EmptyDistribution("uniform distribution needs n >= 1")
    return Distribution(_frozen([1.0 / n] * n))


def escort(p: Distribution, q: float) -> Distribution:
    """Escort distribution ``P_i = p_i**q / sum_j p_j**q``.

    Zero entries stay zero for every q.  At ``q == 0`` the result is uniform
    over the support of ``p`` (0**0 is not taken to be 1 outside it).
    """
    q = float(q)
    if not q >= 0:
        raise InvalidOrder(f"escort order must be >= 0, got {q}")
    if q == 1.0:
        return Distribution(p.probs, p.labels)
    mask = p.probs > 0
    if q == 0.0:
        weights = mask.astype(float)
    else:
        logs = np.log(p.probs[mask])
        # shift by the largest exponent so tiny p**q do not underflow to all-zero
        expo = q * logs
        weights = np.zeros_like(p.probs)
        weights[mask] = np.exp(expo - expo.max())
    total = math.fsum(weights.tolist())
    return Distribution(_frozen(weights / total), p.labels)


def escort_weights_log(p: Distribution, q: float) -> tuple[np.ndarray, np.ndarray]:
    """Return ``(mask, log P_i on the support)`` without leaving log space.

    Used by the length measures, which need ``log P_i`` for very large q
    where ``P_i`` itself underflows.
    """
    q = float(q)
    if not q >= 0:
        raise InvalidOrder(f"escort order must be >= 0, got {q}")
    mask = p.probs > 0
    logs = np.log(p.probs[mask])
    expo = np.zeros_like(logs) if q == 0.0 else q * logs
    return mask, expo - logsumexp(expo)


def logsumexp(x: np.ndarray) -> float:
    """``log(sum(exp(x)))`` with the max shifted out and a compensated sum."""
    x = np.asarray(x, dtype=float)
    m = float(np.max(x))
    if math.isinf(m):
        return m
    return m + math.log(math.fsum(np.exp(x - m).tolist()))
