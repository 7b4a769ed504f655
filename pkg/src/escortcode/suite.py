"""Randomized checks of the length/entropy inequalities.

Each trial draws its own generator from ``(seed, trial)`` so results do not
depend on the order trials run in.
"""

from __future__ import annotations

from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .coder import huffman_lengths
from .errors import EscortCodeError
from .kraft import kraft_sum_exact
from .lengths import SLACK_TOL, BoundReport, verify_bounds
from .prob import Distribution, make_distribution, uniform

DEFAULT_Q_GRID = (0.0, 0.3, 0.5, 0.7, 1.0, 1.5, 2.0, 5.0)


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    return np.random.default_rng([int(seed), int(trial)])


def random_distribution(rng: np.random.Generator, n: int) -> Distribution:
    """Dirichlet draw with a random concentration, so both flat and peaked sources appear."""
    conc = rng.choice([0.5, 1.0, 2.0])
    v = rng.dirichlet(np.full(n, conc))
    v = np.maximum(v, 1e-12)
    return make_distribution(v, normalize=True)


def random_kraft_lengths(rng: np.random.Generator, n: int, base: int = 2) -> list[int]:
    """Random integer lengths with Kraft sum <= 1 (exact).

    Half the time a complete code (Huffman lengths of random weights, shuffled),
    otherwise random lengths lengthened one digit at a time until feasible.
    """
    if rng.random() < 0.5:
        lengths = huffman_lengths(rng.random(n), base)
        rng.shuffle(lengths)
        return [int(x) for x in lengths]
    lengths = [int(x) for x in rng.integers(1, n + 3, size=n)]
    while kraft_sum_exact(lengths, base) > 1:
        lengths[int(rng.integers(n))] += 1
    return lengths


@dataclass
class InequalityStats:
    checks: int = 0
    violations: int = 0
    equalities: int = 0
    worst_slack: float = float("inf")
    worst_q: float | None = None
    violations_by_q: dict[float, int] = field(default_factory=lambda: defaultdict(int))

    def merge(self, other: "InequalityStats") -> None:
        self.checks += other.checks
        self.violations += other.violations
        self.equalities += other.equalities
        if other.worst_slack < self.worst_slack:
            self.worst_slack, self.worst_q = other.worst_slack, other.worst_q
        for q, k in other.violations_by_q.items():
            self.violations_by_q[q] += k

    def add(self, r: BoundReport) -> None:
        self.checks += 1
        if r.equality_within_tolerance:
            self.equalities += 1
        if r.slack < self.worst_slack:
            self.worst_slack, self.worst_q = r.slack, r.q
        if not r.satisfied:
            self.violations += 1
            self.violations_by_q[r.q] += 1


@dataclass
class SuiteResult:
    trials: int
    stats: dict[str, InequalityStats]

    @property
    def violations(self) -> int:
        return sum(s.violations for s in self.stats.values())

    @property
    def passed(self) -> bool:
        return self.violations == 0


def _run_trials(
    trials: range,
    seed: int,
    n_range: tuple[int, int],
    q_grid: Sequence[float],
    base: int,
    tolerance: float,
    force_uniform: bool,
) -> dict[str, InequalityStats]:
    lo, hi = n_range
    stats: dict[str, InequalityStats] = defaultdict(InequalityStats)
    for t in trials:
        rng = trial_rng(seed, t)
        n = int(rng.integers(lo, hi + 1))
        if force_uniform:
            p = uniform(n)
            l = huffman_lengths(p.probs, base)
        else:
            p = random_distribution(rng, n)
            l = random_kraft_lengths(rng, n, base)
        for q in q_grid:
            for r in verify_bounds(p, l, q, base, tolerance):
                if r.applicable:
                    stats[r.name].add(r)
    return dict(stats)


def run_suite(
    trials: int = 10_000,
    seed: int = 42,
    n_range: tuple[int, int] = (2, 12),
    q_grid: Sequence[float] = DEFAULT_Q_GRID,
    base: int = 2,
    tolerance: float = SLACK_TOL,
    force_uniform: bool = False,
    workers: int = 1,
) -> SuiteResult:
    """Check every applicable bound on random ``(p, l)`` pairs for each q in the grid.

    With ``workers > 1`` trials are split into contiguous blocks run in
    separate processes; the merged result is identical to a serial run.
    """
    lo, hi = n_range
    if not 1 <= lo <= hi:
        raise EscortCodeError(f"bad N range {n_range}")
    args = (seed, (lo, hi), tuple(q_grid), base, tolerance, force_uniform)
    if workers <= 1 or trials < 2 * workers:
        parts = [_run_trials(range(trials), *args)]
    else:
        bounds = np.linspace(0, trials, workers + 1).astype(int)
        blocks = [range(a, b) for a, b in zip(bounds, bounds[1:])]
        with ProcessPoolExecutor(workers) as pool:
            parts = list(pool.map(_run_trials, blocks, *[[a] * workers for a in args]))
    stats: dict[str, InequalityStats] = {}
    for part in parts:
        for name, st in part.items():
            stats.setdefault(name, InequalityStats()).merge(st)
    return SuiteResult(trials, stats)
