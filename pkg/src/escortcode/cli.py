"""Command-line front end.

Exit codes: 0 success, 1 a bound was violated (``verify``), 2 bad usage or
bad data.  Numbers are printed with 12 significant digits.
"""

from __future__ import annotations

import argparse
import sys
from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from . import codec
from .coder import Codebook, escort_huffman, shannon_code
from .entropy import renyi_entropy, shannon_entropy, tsallis_entropy_normalized
from .errors import CardinalityMismatch, EscortCodeError, UnknownSymbol
from .formats import format_codebook, parse_distribution, read_codebook, read_distribution
from .lengths import (
    SLACK_TOL,
    campbell_beta,
    campbell_length,
    escort_mean_length,
    expected_length,
    new_length_measure,
    verify_bounds,
)
from .prob import Distribution, escort, make_distribution
from .reference import REFERENCE_SOURCE, reproduce_table
from .suite import DEFAULT_Q_GRID, run_suite

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


def fmt(x: float) -> str:
    return f"{x:.12g}"


@dataclass(frozen=True)
class CliConfig:
    subcommand: str
    q: float = 1.0
    beta: float | None = None
    base: int = 2
    tolerance: float = SLACK_TOL
    normalize: bool = False
    trials: int = 10_000
    seed: int = 42

    def __post_init__(self):
        if not self.q >= 0:
            raise EscortCodeError(f"--q must be >= 0, got {self.q}")
        if self.base < 2:
            raise EscortCodeError(f"--base must be >= 2, got {self.base}")
        if self.trials < 1:
            raise EscortCodeError(f"--trials must be >= 1, got {self.trials}")
        if self.beta is not None and not self.beta > 0:
            raise EscortCodeError(f"--beta must be > 0, got {self.beta}")


def _config(args: argparse.Namespace) -> CliConfig:
    return CliConfig(
        subcommand=args.command,
        q=getattr(args, "q", 1.0),
        beta=getattr(args, "beta", None),
        base=getattr(args, "base", None) or 2,
        tolerance=getattr(args, "tolerance", SLACK_TOL),
        normalize=getattr(args, "normalize", False),
        trials=getattr(args, "trials", 10_000),
        seed=getattr(args, "seed", 42),
    )


class _Out:
    """Text sink: a file from ``-o`` or stdout."""

    def __init__(self, path: str | None):
        self.path = path
        self.fh = None

    def __enter__(self):
        self.fh = open(self.path, "w", encoding="utf-8") if self.path and self.path != "-" else sys.stdout
        return self.fh

    def __exit__(self, *exc):
        if self.fh is not sys.stdout:
            self.fh.close()


def _load_dist(path: str, cfg: CliConfig) -> Distribution:
    if path == "-":
        return parse_distribution(sys.stdin.read(), cfg.normalize)
    return read_distribution(path, cfg.normalize)


def cmd_entropy(args, cfg: CliConfig) -> int:
    p = _load_dist(args.dist, cfg)
    with _Out(args.output) as out:
        out.write("quantity\tvalue\n")
        out.write(f"H_1\t{fmt(shannon_entropy(p, cfg.base))}\n")
        out.write(f"H_{fmt(cfg.q)}\t{fmt(renyi_entropy(p, cfg.q, cfg.base))}\n")
        out.write(f"S_{fmt(cfg.q)}\t{fmt(tsallis_entropy_normalized(p, cfg.q))}\n")
        out.write(f"# escort distribution, q={fmt(cfg.q)}\n")
        _write_dist(out, escort(p, cfg.q))
    return EXIT_OK


def _write_dist(out, p: Distribution) -> None:
    for name, x in zip(p.symbol_names(), p.probs.tolist()):
        out.write(f"{name}\t{fmt(x)}\n")


def cmd_escort(args, cfg: CliConfig) -> int:
    p = _load_dist(args.dist, cfg)
    with _Out(args.output) as out:
        _write_dist(out, escort(p, cfg.q))
    return EXIT_OK


def _build_book(p: Distribution, cfg: CliConfig, method: str) -> Codebook:
    if method == "huffman":
        return escort_huffman(p, cfg.q, cfg.base)
    return shannon_code(p, cfg.q, cfg.base)


def cmd_codebook(args, cfg: CliConfig) -> int:
    p = _load_dist(args.dist, cfg)
    book = _build_book(p, cfg, args.method)
    with _Out(args.output) as out:
        out.write(format_codebook(book))
    return EXIT_OK


def _parse_lengths(text: str) -> list[float]:
    try:
        return [float(x) for x in text.replace(",", " ").split()]
    except ValueError:
        raise EscortCodeError(f"cannot parse lengths {text!r}") from None


def cmd_measure(args, cfg: CliConfig) -> int:
    p = _load_dist(args.dist, cfg)
    if args.lengths is not None:
        lengths = _parse_lengths(args.lengths)
        base = cfg.base
    elif args.codebook is not None:
        book = read_codebook(args.codebook)
        if args.base is not None and args.base != book.alphabet_size:
            raise EscortCodeError(f"--base {args.base} disagrees with codebook D={book.alphabet_size}")
        lengths = list(book.lengths)
        base = book.alphabet_size
    else:
        raise EscortCodeError("measure needs a codebook file or --lengths")
    if len(lengths) != len(p):
        raise CardinalityMismatch(f"{len(lengths)} codewords for {len(p)} symbols")
    q = cfg.q
    beta = cfg.beta if cfg.beta is not None else (campbell_beta(q) if 0 < q < 1 else None)
    reports = verify_bounds(p, lengths, q, base, cfg.tolerance)
    with _Out(args.output) as out:
        out.write("measure\tvalue\n")
        out.write(f"Lbar\t{fmt(expected_length(p, lengths))}\n")
        if beta is not None:
            out.write(f"C_beta(beta={fmt(beta)})\t{fmt(campbell_length(p, lengths, beta, base))}\n")
        else:
            out.write("C_beta\tn/a\n")
        out.write(f"M_q(q={fmt(q)})\t{fmt(escort_mean_length(p, lengths, q))}\n")
        out.write(f"L_q(q={fmt(q)})\t{fmt(new_length_measure(p, lengths, q, base))}\n")
        out.write("#\n")
        out.write("bound\tmeasure\tbound_value\tslack\tapplicable\tsatisfied\tequality\n")
        for r in reports:
            out.write(
                "\t".join(
                    [
                        r.name,
                        fmt(r.measure_value),
                        fmt(r.bound_value),
                        fmt(r.slack),
                        "yes" if r.applicable else "no",
                        "yes" if r.satisfied else "NO",
                        "yes" if r.equality_within_tolerance else "no",
                    ]
                )
                + "\n"
            )
    return EXIT_OK


def _parse_grid(text: str) -> tuple[float, ...]:
    try:
        grid = tuple(float(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise EscortCodeError(f"cannot parse q grid {text!r}") from None
    if not grid or any(not q >= 0 for q in grid):
        raise EscortCodeError(f"q grid must be non-empty with q >= 0, got {text!r}")
    return grid


def cmd_verify(args, cfg: CliConfig) -> int:
    grid = _parse_grid(args.q_grid) if args.q_grid else DEFAULT_Q_GRID
    result = run_suite(
        trials=cfg.trials,
        seed=cfg.seed,
        n_range=(args.n_min, args.n_max),
        q_grid=grid,
        base=cfg.base,
        tolerance=cfg.tolerance,
        force_uniform=args.uniform,
        workers=args.workers,
    )
    with _Out(args.output) as out:
        out.write(f"# trials={cfg.trials} seed={cfg.seed} N=[{args.n_min},{args.n_max}] D={cfg.base} "
                  f"q_grid={','.join(fmt(q) for q in grid)} tolerance={fmt(cfg.tolerance)}\n")
        out.write("inequality\tchecks\tviolations\tequalities\tworst_slack\tworst_q\tstatus\n")
        for name, st in result.stats.items():
            status = "PASS" if st.violations == 0 else "FAIL"
            out.write(
                f"{name}\t{st.checks}\t{st.violations}\t{st.equalities}\t{fmt(st.worst_slack)}\t"
                f"{fmt(st.worst_q)}\t{status}\n"
            )
        for name, st in result.stats.items():
            if st.violations:
                by_q = ", ".join(f"q={fmt(q)}: {k}" for q, k in sorted(st.violations_by_q.items()))
                out.write(f"# {name} violated at {by_q}\n")
        out.write(f"# total violations: {result.violations}\n")
    return EXIT_OK if result.passed else EXIT_VIOLATION


def _read_input(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    with open(path, "rb") as fh:
        return fh.read()


def _write_output(path: str | None, data: bytes) -> None:
    if path is None or path == "-":
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()
    else:
        with open(path, "wb") as fh:
            fh.write(data)


def _tokens(data: bytes, mode: str) -> list[str]:
    if mode == "bytes":
        return [str(b) for b in data]
    return data.decode("utf-8").split()


def _untokens(labels: Sequence[str], mode: str) -> bytes:
    if mode == "bytes":
        try:
            values = [int(x) for x in labels]
            return bytes(values)
        except ValueError:
            raise EscortCodeError("codebook labels are not byte values 0..255; try --tokens words") from None
    return "".join(f"{x}\n" for x in labels).encode("utf-8")


def cmd_encode(args, cfg: CliConfig) -> int:
    data = _read_input(args.input)
    tokens = _tokens(data, args.tokens)
    if args.codebook:
        book = read_codebook(args.codebook)
    else:
        if args.dist:
            p = _load_dist(args.dist, cfg)
        elif tokens:
            counts = Counter(tokens)
            names = sorted(counts, key=lambda t: (int(t), t) if args.tokens == "bytes" else (0, t))
            p = make_distribution([counts[t] for t in names], normalize=True, labels=names)
        else:
            p = make_distribution([1.0], labels=["0"])
        book = _build_book(p, cfg, args.method)
    index = {name: i for i, name in enumerate(book.symbol_names())}
    try:
        symbols = [index[t] for t in tokens]
    except KeyError as exc:
        raise UnknownSymbol(f"input token {exc.args[0]!r} has no codeword") from None
    _write_output(args.output, codec.encode_to_bytes(symbols, book))
    return EXIT_OK


def cmd_decode(args, cfg: CliConfig) -> int:
    symbols, book = codec.decode_bytes(_read_input(args.input))
    names = book.symbol_names()
    _write_output(args.output, _untokens([names[s] for s in symbols], args.tokens))
    return EXIT_OK


def cmd_paper_table(args, cfg: CliConfig) -> int:
    results = reproduce_table()
    ok = True
    with _Out(args.output) as out:
        for col in results:
            out.write(f"# q={fmt(col.q)}\n")
            out.write("symbol\tp_i\tproduced\treference\n")
            for i, (p_i, w, ref) in enumerate(zip(REFERENCE_SOURCE, col.book.codewords, col.reference)):
                out.write(f"{i}\t{fmt(p_i)}\t{w}\t{ref}\n")
            out.write(f"lengths produced\t{col.produced_multiset}\n")
            out.write(f"lengths reference\t{col.reference_multiset}\n")
            out.write(f"M_q produced\t{fmt(col.mq_produced)}\n")
            out.write(f"M_q reference\t{fmt(col.mq_reference)}\n")
            out.write(f"codewords identical\t{'yes' if col.codewords_match else 'no'}\n")
            out.write(f"q={fmt(col.q)}\t{'PASS' if col.passed else 'FAIL'}\n")
            ok &= col.passed
    return EXIT_OK if ok else EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="escortcode",
        description="Escort distributions, Rényi bounds and prefix codes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, q=True, base=True, output=True):
        if q:
            sp.add_argument("--q", type=float, default=1.0, help="escort / entropy order (default 1)")
        if base:
            sp.add_argument("--base", "-D", type=int, default=None, help="code alphabet size (default 2)")
        if output:
            sp.add_argument("--output", "-o", default=None, help="output file (default stdout)")

    def dist_arg(sp):
        sp.add_argument("dist", help="distribution TSV ('-' for stdin)")
        sp.add_argument("--normalize", action="store_true", help="rescale probabilities to sum to 1")

    sp = sub.add_parser("entropy", help="Shannon, Rényi and Tsallis entropies plus the escort")
    dist_arg(sp)
    common(sp)

    sp = sub.add_parser("escort", help="print the escort distribution of order q")
    dist_arg(sp)
    common(sp)

    sp = sub.add_parser("codebook", help="build a prefix code for the escort of order q")
    dist_arg(sp)
    common(sp)
    sp.add_argument("--method", choices=["huffman", "shannon"], default="huffman")

    sp = sub.add_parser("measure", help="length measures and bound report for a code")
    dist_arg(sp)
    sp.add_argument("codebook", nargs="?", default=None, help="codebook TSV")
    sp.add_argument("--lengths", default=None, help="comma separated lengths instead of a codebook")
    sp.add_argument("--beta", type=float, default=None, help="Campbell exponent (default (1-q)/q)")
    sp.add_argument("--tolerance", type=float, default=SLACK_TOL)
    common(sp)

    sp = sub.add_parser("verify", help="randomized check of every bound")
    sp.add_argument("--trials", type=int, default=10_000)
    sp.add_argument("--seed", type=int, default=42)
    sp.add_argument("--n-min", type=int, default=2)
    sp.add_argument("--n-max", type=int, default=12)
    sp.add_argument("--q-grid", default=None, help="comma separated orders (default 0,0.3,0.5,0.7,1,1.5,2,5)")
    sp.add_argument("--uniform", action="store_true", help="use uniform distributions only")
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--tolerance", type=float, default=SLACK_TOL)
    common(sp, q=False)

    sp = sub.add_parser("encode", help="encode a file into an ESCC container")
    sp.add_argument("input", help="input file ('-' for stdin)")
    src = sp.add_mutually_exclusive_group()
    src.add_argument("--dist", default=None, help="distribution TSV to build the code from")
    src.add_argument("--codebook", default=None, help="codebook TSV to use as is")
    sp.add_argument("--method", choices=["huffman", "shannon"], default="huffman")
    sp.add_argument("--tokens", choices=["bytes", "words"], default="bytes",
                    help="symbols are bytes (labels 0..255) or whitespace separated words")
    sp.add_argument("--normalize", action="store_true")
    common(sp)

    sp = sub.add_parser("decode", help="decode an ESCC container")
    sp.add_argument("input", help="container file ('-' for stdin)")
    sp.add_argument("--tokens", choices=["bytes", "words"], default="bytes")
    sp.add_argument("--output", "-o", default=None)

    sp = sub.add_parser("paper-table", help="rebuild the 7-symbol reference codes for q = 1, 0.7, 0.4")
    sp.add_argument("--output", "-o", default=None)
    return parser


COMMANDS = {
    "entropy": cmd_entropy,
    "escort": cmd_escort,
    "codebook": cmd_codebook,
    "measure": cmd_measure,
    "verify": cmd_verify,
    "encode": cmd_encode,
    "decode": cmd_decode,
    "paper-table": cmd_paper_table,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _config(args)
        return COMMANDS[args.command](args, cfg)
    except (EscortCodeError, OSError, UnicodeDecodeError) as exc:
        print(f"escortcode {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
