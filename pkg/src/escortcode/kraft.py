"""Kraft–McMillan sums for codeword lengths over a D-letter alphabet."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence


def kraft_sum(lengths: Sequence[float], base: int = 2) -> float:
    """``sum_i D**(-l_i)``; lengths may be real valued."""
    return math.fsum(float(base) ** -l for l in map(float, lengths))


def kraft_sum_exact(lengths: Sequence[int], base: int = 2) -> Fraction:
    """Exact Kraft sum for integer lengths."""
    top = max(lengths)
    return Fraction(sum(base ** (top - int(l)) for l in lengths), base**top)


def kraft_feasible(lengths: Sequence[float], base: int = 2, tolerance: float = 1e-9) -> bool:
    """True when the lengths admit a uniquely decodable code (sum <= 1 + tolerance)."""
    return kraft_sum(lengths, base) <= 1.0 + tolerance
