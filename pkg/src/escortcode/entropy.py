"""Shannon, Rényi and normalized Tsallis entropies, plus q-deformed log/exp.

Everything is computed in nats and converted to base ``D`` at the end by
dividing by ``ln D``.  The normalized Tsallis entropy is always returned in
nats because it is tied to the q-logarithm, which has no base.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, InvalidBase, InvalidOrder
from .prob import Distribution, logsumexp

# below this distance from 1 the Rényi/Tsallis formulas defer to Shannon
SHANNON_SWITCH = 1e-9


@dataclass(frozen=True)
class EntropyOrder:
    """Order parameter plus logarithm base (the code alphabet size D)."""

    order: float
    base: int = 2

    def __post_init__(self):
        if not self.order >= 0:
            raise InvalidOrder(f"order must be >= 0, got {self.order}")
        if int(self.base) != self.base or self.base < 2:
            raise InvalidBase(f"base must be an integer >= 2, got {self.base}")


def _unpack(order, base):
    if isinstance(order, EntropyOrder):
        return float(order.order), int(order.base)
    order = float(order)
    if not order >= 0:
        raise InvalidOrder(f"order must be >= 0, got {order}")
    if int(base) != base or base < 2:
        raise InvalidBase(f"base must be an integer >= 2, got {base}")
    return order, int(base)


def _support_logs(p: Distribution) -> tuple[np.ndarray, np.ndarray]:
    probs = p.probs[p.probs > 0]
    return probs, np.log(probs)


def log_power_sum(p: Distribution, alpha: float) -> float:
    """Natural log of ``sum_i p_i**alpha`` over the support of ``p``.

    Near ``alpha = 1`` the sum is ``1 + sum p_i*expm1((alpha-1) ln p_i)`` and
    is evaluated with ``log1p`` so that the result keeps full relative
    precision when it is later divided by ``1 - alpha``.
    """
    probs, logs = _support_logs(p)
    t = (alpha - 1.0) * logs
    if np.max(np.abs(t)) < 0.5:
        return math.log1p(math.fsum((probs * np.expm1(t)).tolist()))
    return logsumexp(alpha * logs)


def shannon_entropy(p: Distribution, base: int = 2) -> float:
    """``-sum p_i log_D p_i`` with ``0 log 0 = 0``."""
    return _shannon_nats(p) / math.log(base)


def renyi_entropy(p: Distribution, order: float | EntropyOrder, base: int = 2) -> float:
    """Rényi entropy ``log_D(sum p_i**a) / (1 - a)``.

    ``order`` may be ``math.inf`` (min-entropy).  Order 0 gives the log of
    the support size.
    """
    alpha, base = _unpack(order, base)
    if abs(alpha - 1.0) < SHANNON_SWITCH:
        return shannon_entropy(p, base)
    if math.isinf(alpha):
        return -math.log(float(np.max(p.probs))) / math.log(base)
    if alpha == 0.0:
        return math.log(int(np.count_nonzero(p.probs))) / math.log(base)
    h = log_power_sum(p, alpha) / (1.0 - alpha)
    return max(h, 0.0) / math.log(base)


def tsallis_entropy_normalized(p: Distribution, order: float | EntropyOrder) -> float:
    """Normalized Tsallis entropy in nats.

    ``S_q = (1/sum p_i**q - 1) / (q - 1) = -sum_i P_i ln_q(p_i)`` with ``P``
    the escort of order q.  This is the value taken by the escort mean
    length at ``l_i = -ln_q(p_i)``.  Tends to the Shannon entropy (nats) as
    ``q -> 1``.
    """
    q = float(order.order if isinstance(order, EntropyOrder) else order)
    if not q >= 0:
        raise InvalidOrder(f"order must be >= 0, got {q}")
    if abs(q - 1.0) < SHANNON_SWITCH:
        return _shannon_nats(p)
    log_s = log_power_sum(p, q)
    return math.expm1(-log_s) / (q - 1.0)


def _shannon_nats(p: Distribution) -> float:
    probs, logs = _support_logs(p)
    return max(-math.fsum((probs * logs).tolist()), 0.0)


def q_log(x: float, q: float) -> float:
    """q-logarithm ``(x**(1-q) - 1) / (1 - q)``; natural log at ``q = 1``."""
    if not x > 0:
        raise DomainError(f"q_log needs x > 0, got {x}")
    if q == 1.0:
        return math.log(x)
    return math.expm1((1.0 - q) * math.log(x)) / (1.0 - q)


def q_exp(x: float, q: float, clip: bool = False) -> float:
    """q-exponential ``(1 + (1-q) x)**(1/(1-q))``, inverse of :func:`q_log`.

    Outside ``1 + (1-q) x > 0`` the function is undefined and raises
    :class:`DomainError`.  With ``clip=True`` and ``q < 1`` the usual
    Tsallis cut-off is applied instead and 0.0 is returned.
    """
    if q == 1.0:
        return math.exp(x)
    arg = (1.0 - q) * x
    if not 1.0 + arg > 0:
        if clip and q < 1.0:
            return 0.0
        raise DomainError(f"q_exp undefined at x={x}, q={q}: 1 + (1-q)x = {1.0 + arg}")
    return math.exp(math.log1p(arg) / (1.0 - q))
