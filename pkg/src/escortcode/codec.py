"""Self-describing container ("ESCC") for prefix-coded symbol streams.

Layout, all integers big-endian::

    magic      4 bytes  b"ESCC"
    version    1 byte   0x01
    D          1 byte   alphabet size
    count      8 bytes  number of encoded symbols
    book_len   4 bytes  length of the codebook section
    codebook   book_len bytes, codebook TSV (UTF-8)
    payload    for D = 2: codeword digits packed 8 per byte, MSB first,
               zero padded; for D > 2: one digit per byte

Decoding stops after ``count`` symbols, so pad digits are never parsed.
"""

from __future__ import annotations

import operator
import struct
from dataclasses import dataclass
from typing import Iterable, Sequence

from .coder import DIGITS, MAX_BASE, Codebook
from .formats import format_codebook, parse_codebook
from .errors import (
    CorruptHeader,
    DanglingBits,
    EscortCodeError,
    InvalidCodeword,
    NonPrefixCodebook,
    UnknownSymbol,
)

MAGIC = b"ESCC"
VERSION = 1
_FIXED = struct.Struct(">4sBBQI")
HEADER_SIZE = _FIXED.size

_TO_BYTE = {c: i for i, c in enumerate(DIGITS)}


@dataclass(frozen=True)
class EncodedStream:
    book: Codebook
    count: int
    payload: bytes
    digits: int | None = None  # known after encoding; not stored in the container

    @property
    def alphabet_size(self) -> int:
        return self.book.alphabet_size

    def to_bytes(self) -> bytes:
        section = format_codebook(self.book).encode("utf-8")
        head = _FIXED.pack(MAGIC, VERSION, self.book.alphabet_size, self.count, len(section))
        return head + section + self.payload

    @classmethod
    def from_bytes(cls, data: bytes) -> "EncodedStream":
        data = bytes(data)
        if len(data) < HEADER_SIZE:
            raise CorruptHeader(f"stream is {len(data)} bytes, shorter than the {HEADER_SIZE}-byte header")
        magic, version, base, count, book_len = _FIXED.unpack_from(data)
        if magic != MAGIC:
            raise CorruptHeader(f"bad magic {magic!r}")
        if version != VERSION:
            raise CorruptHeader(f"unsupported version {version}")
        if not 2 <= base <= MAX_BASE:
            raise CorruptHeader(f"alphabet size {base} out of range")
        end = HEADER_SIZE + book_len
        if end > len(data):
            raise CorruptHeader(f"codebook section of {book_len} bytes overruns the stream")
        try:
            book = parse_codebook(data[HEADER_SIZE:end].decode("utf-8"))
        except NonPrefixCodebook:
            raise
        except (EscortCodeError, UnicodeDecodeError) as exc:
            raise CorruptHeader(f"unreadable codebook section: {exc}") from None
        if book.alphabet_size != base:
            raise CorruptHeader(f"header says D={base}, codebook says D={book.alphabet_size}")
        return cls(book, count, data[end:])


def _digit_string(symbols: Iterable[int], book: Codebook) -> tuple[str, int]:
    words = book.codewords
    n = len(words)
    parts = []
    for s in symbols:
        try:
            i = operator.index(s)
        except TypeError:
            raise UnknownSymbol(f"symbol {s!r} is not an index") from None
        if not 0 <= i < n:
            raise UnknownSymbol(f"symbol {s!r} has no codeword (codebook has {n})")
        parts.append(words[i])
    return "".join(parts), len(parts)


def encode(symbols: Sequence[int], book: Codebook) -> EncodedStream:
    """Concatenate the codewords of ``symbols`` and pack them."""
    digits, count = _digit_string(symbols, book)
    if book.alphabet_size == 2:
        pad = -len(digits) % 8
        bits = digits + "0" * pad
        payload = int(bits, 2).to_bytes(len(bits) // 8, "big") if bits else b""
    else:
        payload = bytes(_TO_BYTE[c] for c in digits)
    return EncodedStream(book, count, payload, len(digits))


def _trie(book: Codebook) -> list[list[int]]:
    # child index > 0 is an inner node, < 0 is leaf -(symbol+1), 0 is absent
    base = book.alphabet_size
    nodes = [[0] * base]
    for sym, word in enumerate(book.codewords):
        node = 0
        for c in word[:-1]:
            d = _TO_BYTE[c]
            nxt = nodes[node][d]
            if nxt < 0:
                raise NonPrefixCodebook(f"codeword {word!r} extends another codeword")
            if nxt == 0:
                nodes.append([0] * base)
                nxt = nodes[node][d] = len(nodes) - 1
            node = nxt
        d = _TO_BYTE[word[-1]]
        if nodes[node][d] != 0:
            raise NonPrefixCodebook(f"codeword {word!r} collides with another codeword")
        nodes[node][d] = -(sym + 1)
    return nodes


def _payload_digits(stream: EncodedStream) -> list[int]:
    if stream.alphabet_size == 2:
        if not stream.payload:
            return []
        n = len(stream.payload) * 8
        return [int(c) for c in format(int.from_bytes(stream.payload, "big"), f"0{n}b")]
    out = list(stream.payload)
    if any(d >= stream.alphabet_size for d in out):
        raise InvalidCodeword(f"payload holds a digit >= D={stream.alphabet_size}")
    return out


def decode(stream: EncodedStream) -> list[int]:
    """Recover exactly ``stream.count`` symbol indices."""
    nodes = _trie(stream.book)
    digits = _payload_digits(stream)
    out: list[int] = []
    count = stream.count
    node = 0
    pos = 0
    total = len(digits)
    while len(out) < count:
        if pos >= total:
            raise DanglingBits(
                f"payload ended after {len(out)} of {count} symbols"
                + (" in the middle of a codeword" if node else "")
            )
        nxt = nodes[node][digits[pos]]
        pos += 1
        if nxt < 0:
            out.append(-nxt - 1)
            node = 0
        elif nxt == 0:
            raise InvalidCodeword(f"digit sequence at position {pos - 1} matches no codeword")
        else:
            node = nxt
    rest = digits[pos:]
    limit = 8 if stream.alphabet_size == 2 else 1
    if len(rest) >= limit or any(rest):
        raise InvalidCodeword(f"{len(rest)} unexpected trailing digits after the last symbol")
    return out


def encode_to_bytes(symbols: Sequence[int], book: Codebook) -> bytes:
    return encode(symbols, book).to_bytes()


def decode_bytes(data: bytes) -> tuple[list[int], Codebook]:
    stream = EncodedStream.from_bytes(data)
    return decode(stream), stream.book
