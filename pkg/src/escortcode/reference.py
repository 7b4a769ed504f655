"""Reference binary example: Huffman-on-escort codes for a 7-symbol source."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .coder import Codebook, escort_huffman
from .lengths import escort_mean_length
from .prob import Distribution, make_distribution

REFERENCE_SOURCE = (0.48, 0.3, 0.1, 0.05, 0.05, 0.01, 0.01)

# codewords listed for each escort order
REFERENCE_CODES = {
    1.0: ("0", "10", "110", "1110", "11110", "111110", "111111"),
    0.7: ("0", "10", "1100", "1101", "1110", "11110", "11111"),
    0.4: ("00", "01", "100", "101", "110", "1110", "1111"),
}

MQ_TOL = 1e-12


@dataclass(frozen=True)
class ColumnResult:
    q: float
    book: Codebook
    reference: tuple[str, ...]
    mq_produced: float
    mq_reference: float

    @property
    def produced_multiset(self) -> list[int]:
        return sorted(self.book.lengths)

    @property
    def reference_multiset(self) -> list[int]:
        return sorted(len(w) for w in self.reference)

    @property
    def multiset_match(self) -> bool:
        return Counter(self.book.lengths) == Counter(len(w) for w in self.reference)

    @property
    def codewords_match(self) -> bool:
        return self.book.codewords == self.reference

    @property
    def passed(self) -> bool:
        # a different tie-break may give another optimal multiset with equal M_q
        return self.multiset_match or abs(self.mq_produced - self.mq_reference) <= MQ_TOL


def reference_distribution() -> Distribution:
    return make_distribution(REFERENCE_SOURCE)


def reproduce_table(base: int = 2) -> list[ColumnResult]:
    p = reference_distribution()
    out = []
    for q, ref in REFERENCE_CODES.items():
        book = escort_huffman(p, q, base)
        out.append(
            ColumnResult(
                q=q,
                book=book,
                reference=ref,
                mq_produced=escort_mean_length(p, book.lengths, q),
                mq_reference=escort_mean_length(p, [len(w) for w in ref], q),
            )
        )
    return out
