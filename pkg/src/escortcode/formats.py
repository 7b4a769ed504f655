"""Text formats for distributions and codebooks.

Distribution TSV: one ``label<TAB>probability`` record per line, or bare
probabilities one per line (symbols are then named ``0, 1, ...``).  Lines
starting with ``#`` and blank lines are ignored.

Codebook TSV: a mandatory ``#D=<alphabet size>`` header, then one
``label<TAB>codeword`` record per line, codewords written as digits.
"""

from __future__ import annotations

import os
import re

from .coder import Codebook
from .errors import EscortCodeError, NegativeProbability, ParseError
from .prob import CONSTRUCTION_TOL, Distribution, make_distribution

_HEADER = re.compile(r"^#\s*D\s*=\s*(\d+)\s*$")


def _records(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.rstrip("\r\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        yield lineno, line


def parse_distribution(
    text: str, normalize: bool = False, tolerance: float = CONSTRUCTION_TOL
) -> Distribution:
    labels: list[str] = []
    values: list[float] = []
    labelled: bool | None = None
    for lineno, line in _records(text):
        fields = line.split("\t") if "\t" in line else line.split()
        if len(fields) == 1:
            label, value = None, fields[0]
        elif len(fields) == 2:
            label, value = fields
        else:
            raise ParseError(f"expected 'label<TAB>probability', got {line!r}", lineno)
        if labelled is None:
            labelled = label is not None
        elif labelled != (label is not None):
            raise ParseError("mix of labelled and bare probability lines", lineno)
        try:
            x = float(value)
        except ValueError:
            raise ParseError(f"not a number: {value!r}", lineno) from None
        if x < 0:
            raise NegativeProbability(f"line {lineno}: negative probability {value}")
        labels.append(label.strip() if label is not None else str(len(values)))
        values.append(x)
    if not values:
        raise ParseError("no probabilities found")
    try:
        return make_distribution(values, normalize=normalize, tolerance=tolerance, labels=labels)
    except EscortCodeError as exc:
        raise type(exc)(f"distribution: {exc}") from None


def format_distribution(p: Distribution) -> str:
    return "".join(f"{name}\t{x!r}\n" for name, x in zip(p.symbol_names(), p.probs.tolist()))


def parse_codebook(text: str) -> Codebook:
    base = None
    labels: list[str] = []
    words: list[str] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.rstrip("\r\n")
        if not line.strip():
            continue
        m = _HEADER.match(line.strip())
        if m:
            if base is not None:
                raise ParseError("duplicate #D= header", lineno)
            base = int(m.group(1))
            continue
        if line.lstrip().startswith("#"):
            continue
        if base is None:
            raise ParseError("codebook must start with a '#D=<alphabet size>' header", lineno)
        fields = line.split("\t")
        if len(fields) != 2:
            raise ParseError(f"expected 'label<TAB>codeword', got {line!r}", lineno)
        labels.append(fields[0].strip())
        words.append(fields[1].strip())
    if base is None:
        raise ParseError("missing '#D=<alphabet size>' header")
    return Codebook(base, tuple(words), tuple(labels))


def format_codebook(book: Codebook) -> str:
    lines = [f"#D={book.alphabet_size}\n"]
    lines += [f"{name}\t{w}\n" for name, w in zip(book.symbol_names(), book.codewords)]
    return "".join(lines)


def read_distribution(path: str | os.PathLike, normalize: bool = False, tolerance: float = CONSTRUCTION_TOL):
    with open(path, encoding="utf-8") as fh:
        return parse_distribution(fh.read(), normalize, tolerance)


def read_codebook(path: str | os.PathLike) -> Codebook:
    with open(path, encoding="utf-8") as fh:
        return parse_codebook(fh.read())


def write_codebook(book: Codebook, path: str | os.PathLike) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_codebook(book))
