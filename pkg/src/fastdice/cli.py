"""Command-line interface.

Subcommands: uniform, perm, bernoulli, cost, bench.  Every run with the
same flags and seed prints byte-identical output; the default seed is 0,
and randomized runs need an explicit ``--seed random``.  Usage and domain
errors exit with status 2.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from dataclasses import dataclass

from .batch import auto_batch_size, batch_uniform, plan_batch
from .bernoulli import Rational, bernoulli_rational
from .bitsource import BufferedWordSource
from .core import fdr_uniform
from .cost import AsymptoticParams, asymptotic_cost, batch_cost, exact_cost
from .errors import FactorialOverflow, FastdiceError
from .permutation import (MAX_UNRANK_SIZE, Rank, factorial_decompose,
                          fisher_yates, lehmer_to_permutation_selection,
                          random_permutation_unranked)


@dataclass(frozen=True)
class RunConfig:
    """Common knobs of one CLI run; equal configs give identical bytes."""

    subcommand: str
    seed: int
    count: int
    format: str


@dataclass(frozen=True)
class BenchReport:
    """Empirical bit cost next to the theoretical prediction."""

    n: int
    count: int
    total_bits: int
    mean_bits_per_variate: float
    u_theory: float
    abs_deviation: float
    chi_square: float
    df: int


def _real(x: float) -> str:
    """Fixed CSV convention: 9 significant digits, no locale."""
    return f"{x:.9g}"


def _parse_seed(text: str) -> int:
    if text == "random":
        return int.from_bytes(os.urandom(8), "big")
    try:
        value = int(text, 16) if text.lower().startswith("0x") else int(text, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"seed must be decimal, 0x-hex, or 'random': {text!r}")
    if not 0 <= value < 1 << 64:
        raise argparse.ArgumentTypeError("seed must fit in 64 unsigned bits")
    return value


def _nonnegative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fastdice",
        description="Entropy-optimal sampling from coin flips.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=_parse_seed, default=0,
                        help="decimal or 0x-hex 64-bit seed, or 'random' "
                             "(default 0, fully deterministic)")
    common.add_argument("--format", choices=("text", "csv"), default="text",
                        help="output format where it applies (cost and bench "
                             "always emit csv; perm is always text)")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("uniform", parents=[common],
                       help="draw uniform integers on [0, n)")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--count", type=_nonnegative, default=1)
    p.add_argument("--batch", default=None, metavar="J|auto",
                   help="draw J values per master draw (count must divide)")
    p.set_defaults(func=cmd_uniform)

    p = sub.add_parser("perm", parents=[common],
                       help="draw uniform random permutations of {1..n}")
    p.add_argument("--n", type=_nonnegative, required=True)
    p.add_argument("--count", type=_nonnegative, default=1)
    p.add_argument("--method", choices=("fy", "unrank", "lehmer"),
                   default="fy",
                   help="fy: randomized Fisher-Yates; unrank: one uniform "
                        "rank unranked through Fisher-Yates; lehmer: one "
                        "uniform rank through the selection construction")
    p.set_defaults(func=cmd_perm)

    p = sub.add_parser("bernoulli", parents=[common],
                       help="draw exact Bernoulli(num/den) bits")
    p.add_argument("--num", type=_nonnegative, required=True)
    p.add_argument("--den", type=_positive, required=True)
    p.add_argument("--count", type=_nonnegative, default=1)
    p.set_defaults(func=cmd_bernoulli)

    p = sub.add_parser("cost", parents=[common],
                       help="CSV table of exact, toll, and asymptotic costs")
    p.add_argument("--n-min", type=_positive, required=True)
    p.add_argument("--n-max", type=_positive, required=True)
    p.add_argument("--asymptotic", type=_positive, default=12, metavar="K",
                   help="Fourier terms in the fluctuation (default 12)")
    p.add_argument("--batch", type=_positive, default=None, metavar="J",
                   help="append a u_batch column with batch_cost(n, J)")
    p.set_defaults(func=cmd_cost)

    p = sub.add_parser("bench", parents=[common],
                       help="measure bits per variate against theory")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--count", type=_positive, required=True)
    p.add_argument("--batch", type=_positive, default=None, metavar="J")
    p.set_defaults(func=cmd_bench)
    return parser


def _resolve_batch(flag: str | None, n: int) -> int | None:
    if flag is None:
        return None
    if flag == "auto":
        return auto_batch_size(n)
    try:
        j = int(flag)
    except ValueError:
        raise FastdiceError(f"--batch must be an integer or 'auto': {flag!r}")
    if j < 1:
        raise FastdiceError("--batch must be >= 1")
    return j


def cmd_uniform(config: RunConfig, args: argparse.Namespace) -> int:
    source = BufferedWordSource(config.seed)
    j = _resolve_batch(args.batch, args.n)
    values: list[int] = []
    if j is None:
        calls = config.count
        for _ in range(calls):
            values.append(fdr_uniform(source, args.n).value)
    else:
        if config.count % j != 0:
            raise FastdiceError(
                f"--count {config.count} is not a multiple of batch size {j}")
        plan = plan_batch(args.n, j)
        calls = config.count // j
        for _ in range(calls):
            values.extend(batch_uniform(source, plan))
    if config.format == "csv":
        print("value")
    for v in values:
        print(v)
    print(f"# bits={source.bits_consumed()} calls={calls}")
    return 0


def cmd_perm(config: RunConfig, args: argparse.Namespace) -> int:
    if args.method != "fy" and args.n > MAX_UNRANK_SIZE:
        raise FactorialOverflow(
            f"{args.n}! exceeds the 64-bit working range (cap is n = 20)")
    source = BufferedWordSource(config.seed)
    for _ in range(config.count):
        if args.method == "fy":
            perm = fisher_yates(source, args.n)
        elif args.method == "unrank":
            perm = random_permutation_unranked(source, args.n)
        else:  # lehmer: same rank draw, selection bijection
            u = fdr_uniform(source, math.factorial(args.n)).value
            perm = lehmer_to_permutation_selection(
                factorial_decompose(Rank(u, args.n)))
        print(" ".join(str(v) for v in perm))
    print(f"# bits={source.bits_consumed()} calls={config.count}")
    return 0


def cmd_bernoulli(config: RunConfig, args: argparse.Namespace) -> int:
    source = BufferedWordSource(config.seed)
    p = Rational(args.num, args.den)
    bits = [bernoulli_rational(source, p) for _ in range(config.count)]
    if config.format == "csv":
        print("bit")
    for b in bits:
        print(b)
    print(f"# bits={source.bits_consumed()} calls={config.count}")
    return 0


def cmd_cost(config: RunConfig, args: argparse.Namespace) -> int:
    if args.n_min > args.n_max:
        raise FastdiceError("--n-min must not exceed --n-max")
    params = AsymptoticParams(k_terms=args.asymptotic)
    header = "n,u_exact,log2n,toll,u_asymptotic"
    if args.batch is not None:
        header += ",u_batch"
    print(header)
    for n in range(args.n_min, args.n_max + 1):
        u = exact_cost(n)
        log2n = math.log2(n)
        row = [str(n), _real(u), _real(log2n), _real(u - log2n),
               _real(asymptotic_cost(n, params))]
        if args.batch is not None:
            row.append(_real(batch_cost(n, args.batch)))
        print(",".join(row))
    return 0


def cmd_bench(config: RunConfig, args: argparse.Namespace) -> int:
    source = BufferedWordSource(config.seed)
    counts: dict[int, int] = {}
    if args.batch is None:
        for _ in range(config.count):
            v = fdr_uniform(source, args.n).value
            counts[v] = counts.get(v, 0) + 1
        theory = exact_cost(args.n)
    else:
        if config.count % args.batch != 0:
            raise FastdiceError(
                f"--count {config.count} is not a multiple of batch size "
                f"{args.batch}")
        plan = plan_batch(args.n, args.batch)
        for _ in range(config.count // args.batch):
            for v in batch_uniform(source, plan):
                counts[v] = counts.get(v, 0) + 1
        theory = batch_cost(args.n, args.batch)
    total_bits = source.bits_consumed()
    mean = total_bits / config.count
    report = BenchReport(
        n=args.n, count=config.count, total_bits=total_bits,
        mean_bits_per_variate=mean, u_theory=theory,
        abs_deviation=abs(mean - theory),
        chi_square=_chi_square(counts, args.n, config.count),
        df=args.n - 1)
    print("n,count,total_bits,mean_bits_per_variate,u_theory,"
          "abs_deviation,chi_square,df")
    print(",".join([str(report.n), str(report.count), str(report.total_bits),
                    _real(report.mean_bits_per_variate),
                    _real(report.u_theory), _real(report.abs_deviation),
                    _real(report.chi_square), str(report.df)]))
    return 0


def _chi_square(counts: dict[int, int], n: int, total: int) -> float:
    """Goodness-of-fit statistic against uniform on n cells.

    Unseen cells contribute their expectation; summing sparsely keeps
    memory independent of n.
    """
    if total == 0:
        return 0.0
    expected = total / n
    stat = (n - len(counts)) * expected
    for v in sorted(counts):
        o = counts[v]
        stat += (o - expected) ** 2 / expected
    return stat


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    config = RunConfig(
        subcommand=args.subcommand, seed=getattr(args, "seed", 0),
        count=getattr(args, "count", 0), format=getattr(args, "format", "text"))
    try:
        return args.func(config, args)
    except (FastdiceError, ValueError) as exc:
        print(f"fastdice: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
