"""Prefix-code construction over a D-letter alphabet.

Huffman fed with an escort distribution minimizes the escort mean length
``M_q`` over all integer-length prefix codes, and therefore also yields
codes tuned for Campbell's exponential length.  No dedicated algorithm for
the exponential criterion is needed.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Sequence

import numpy as np

from .errors import (
    EmptyDistribution,
    InstanceTooLarge,
    InvalidBase,
    InvalidCodebook,
    KraftViolation,
    NonIntegerLength,
    NonPrefixCodebook,
)
from .kraft import kraft_feasible, kraft_sum, kraft_sum_exact  # noqa: F401  (re-exported)
from .prob import Distribution, escort

DIGITS = "0123456789abcdefghijklmnopqrstuvwxyz"
MAX_BASE = len(DIGITS)


def _check_base(base: int) -> int:
    if int(base) != base or not 2 <= base <= MAX_BASE:
        raise InvalidBase(f"alphabet size must be an integer in [2, {MAX_BASE}], got {base}")
    return int(base)


@dataclass(frozen=True)
class Codebook:
    """Codewords (digit strings over ``0..D-1``) indexed by symbol.

    Construction rejects empty words, out-of-range digits and codebooks that
    are not prefix-free; Kraft's inequality then holds automatically.
    """

    alphabet_size: int
    codewords: tuple[str, ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        base = _check_base(self.alphabet_size)
        words = tuple(str(w) for w in self.codewords)
        if not words:
            raise EmptyDistribution("codebook needs at least one codeword")
        valid = set(DIGITS[:base])
        for i, w in enumerate(words):
            if not w:
                raise NonPrefixCodebook(f"codeword {i} is empty")
            if not set(w) <= valid:
                raise InvalidCodebook(f"codeword {i} ({w!r}) has digits outside 0..{base - 1}")
        ordered = sorted(words)
        for a, b in zip(ordered, ordered[1:]):
            # in lexicographic order a prefix sorts immediately before its extensions
            if b.startswith(a):
                raise NonPrefixCodebook(f"codeword {a!r} is a prefix of {b!r}")
        object.__setattr__(self, "codewords", words)
        if self.labels is not None:
            labels = tuple(str(x) for x in self.labels)
            if len(labels) != len(words):
                raise InvalidCodebook(f"{len(labels)} labels for {len(words)} codewords")
            object.__setattr__(self, "labels", labels)

    def __len__(self) -> int:
        return len(self.codewords)

    @property
    def lengths(self) -> tuple[int, ...]:
        return tuple(len(w) for w in self.codewords)

    def symbol_names(self) -> tuple[str, ...]:
        if self.labels is not None:
            return self.labels
        return tuple(str(i) for i in range(len(self)))

    def with_labels(self, labels: Sequence[str] | None) -> "Codebook":
        return Codebook(self.alphabet_size, self.codewords, None if labels is None else tuple(labels))


def lengths_of(book: Codebook) -> np.ndarray:
    return np.array(book.lengths, dtype=float)


def _to_digits(value: int, width: int, base: int) -> str:
    out = []
    for _ in range(width):
        value, r = divmod(value, base)
        out.append(DIGITS[r])
    return "".join(reversed(out))


def code_from_lengths(
    lengths: Sequence[float], base: int = 2, labels: Sequence[str] | None = None
) -> Codebook:
    """Canonical prefix code with the given integer lengths.

    Symbols are visited in ``(length, index)`` order and receive successive
    base-D numerals, each left-justified to its length.
    """
    base = _check_base(base)
    ints = []
    for i, l in enumerate(lengths):
        if float(l) != int(l) or int(l) < 1:
            raise NonIntegerLength(f"length {i} is {l}; need a positive integer")
        ints.append(int(l))
    if not ints:
        raise EmptyDistribution("no lengths given")
    ks = kraft_sum_exact(ints, base)
    if ks > 1:
        raise KraftViolation(f"Kraft sum {float(ks):.12g} > 1 for base {base}")
    order = sorted(range(len(ints)), key=lambda i: (ints[i], i))
    words = [""] * len(ints)
    code = 0
    prev = ints[order[0]]
    for i in order:
        code *= base ** (ints[i] - prev)
        prev = ints[i]
        words[i] = _to_digits(code, ints[i], base)
        code += 1
    return Codebook(base, tuple(words), None if labels is None else tuple(labels))


def huffman_lengths(weights: Sequence[float], base: int = 2) -> list[int]:
    """D-ary Huffman codeword lengths for nonnegative ``weights``.

    Ties are broken by ``(weight, smallest original index in the subtree)``
    and a merged node inherits that smallest index.  Zero-weight dummy
    leaves are added so every merge takes exactly D nodes.  The resulting
    lengths are finally reassigned monotonically, so that symbols sorted by
    ``(-weight, index)`` get non-decreasing lengths; this keeps the length
    multiset and the cost, and makes equal-weight symbols get the shorter
    words in index order.
    """
    base = _check_base(base)
    w = [float(x) for x in weights]
    n = len(w)
    if n == 0:
        raise EmptyDistribution("cannot build a code for zero symbols")
    if n == 1:
        return [1]
    pad = (-(n - 1)) % (base - 1)
    heap = [(x, i, i) for i, x in enumerate(w)]
    heap += [(0.0, n + j, n + j) for j in range(pad)]
    heapq.heapify(heap)
    leaves: dict[int, list[int]] = {i: [i] for i in range(n)}
    depth = [0] * n
    next_id = n + pad
    while len(heap) > 1:
        group = [heapq.heappop(heap) for _ in range(base)]
        members: list[int] = []
        for _, _, node in group:
            members.extend(leaves.pop(node, ()))
        for s in members:
            depth[s] += 1
        leaves[next_id] = members
        heapq.heappush(heap, (math.fsum(g[0] for g in group), min(g[1] for g in group), next_id))
        next_id += 1
    order = sorted(range(n), key=lambda i: (-w[i], i))
    out = [0] * n
    for i, l in zip(order, sorted(depth)):
        out[i] = l
    return out


def huffman(p: Distribution, base: int = 2) -> Codebook:
    """Optimal (minimum expected length) prefix code for ``p``, canonical words."""
    return code_from_lengths(huffman_lengths(p.probs, base), base, p.labels)


def escort_huffman(p: Distribution, q: float, base: int = 2) -> Codebook:
    """Huffman code of the escort of order q; minimizes ``M_q``."""
    return huffman(escort(p, q), base)


def shannon_code(p: Distribution, q: float = 1.0, base: int = 2) -> Codebook:
    """Canonical code with lengths ``ceil(-log_D P_i)`` for the escort of order q.

    Zero-probability symbols are not representable and raise.
    """
    from .lengths import ideal_lengths_campbell, ideal_lengths_shannon

    if q == 1.0:
        l = ideal_lengths_shannon(p, base, integer_rounding=True)
    else:
        l = ideal_lengths_campbell(p, q, base, integer_rounding=True)
    return code_from_lengths(l, base, p.labels)


EXHAUSTIVE_MAX_N = 8
EXHAUSTIVE_MAX_LEN = 12


def exhaustive_optimal(
    p: Distribution, q: float, base: int = 2, max_len: int = 8
) -> tuple[np.ndarray, float]:
    """Brute-force minimum of ``M_q`` over integer Kraft-feasible lengths.

    Enumerates every non-decreasing length tuple with entries in
    ``1..max_len`` and Kraft sum <= 1 (checked in exact integers), pairs the
    shortest lengths with the largest escort weights and keeps the cheapest.
    Returns the lengths in symbol order and the minimal ``M_q``.
    """
    n = len(p)
    if n > EXHAUSTIVE_MAX_N or max_len > EXHAUSTIVE_MAX_LEN:
        raise InstanceTooLarge(
            f"N={n}, max_len={max_len} exceeds the limits N<={EXHAUSTIVE_MAX_N}, "
            f"max_len<={EXHAUSTIVE_MAX_LEN}"
        )
    base = _check_base(base)
    weights = escort(p, q).probs
    order = sorted(range(n), key=lambda i: (-weights[i], i))
    sorted_w = [float(weights[i]) for i in order]
    cap = base**max_len
    unit = {l: base ** (max_len - l) for l in range(1, max_len + 1)}
    best: tuple[int, ...] | None = None
    best_cost = math.inf
    for combo in combinations_with_replacement(range(1, max_len + 1), n):
        if sum(unit[l] for l in combo) > cap:
            continue
        cost = math.fsum(w * l for w, l in zip(sorted_w, combo))
        if cost < best_cost:
            best, best_cost = combo, cost
    if best is None:
        raise InstanceTooLarge(f"no Kraft-feasible lengths with max_len={max_len} for N={n}")
    out = np.zeros(n)
    for i, l in zip(order, best):
        out[i] = l
    return out, best_cost
