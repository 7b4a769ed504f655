"""Escort distributions, Rényi/Tsallis entropies and generalized codeword lengths.

Includes optimal prefix-code construction (Huffman on the escort source), a
checker for the entropy lower bounds on every length measure, and a
container format for encoded streams.
"""

from .coder import (
    Codebook,
    code_from_lengths,
    escort_huffman,
    exhaustive_optimal,
    huffman,
    huffman_lengths,
    kraft_feasible,
    kraft_sum,
    lengths_of,
    shannon_code,
)
from .codec import EncodedStream, decode, encode
from .entropy import (
    EntropyOrder,
    q_exp,
    q_log,
    renyi_entropy,
    shannon_entropy,
    tsallis_entropy_normalized,
)
from .lengths import (
    BoundReport,
    campbell_beta,
    campbell_length,
    campbell_order,
    escort_mean_length,
    expected_length,
    ideal_lengths_campbell,
    ideal_lengths_shannon,
    length_measure_limit,
    new_length_measure,
    verify_bounds,
)
from .prob import Distribution, escort, make_distribution, uniform

__version__ = "0.1.0"
