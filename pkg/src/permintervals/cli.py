"""Command-line interface: search a file of permutations, or generate one.

Input format: one permutation per line as whitespace-separated signed
integers; `#` starts a comment; blank lines are skipped.  The first
permutation is the reference one.

Exit codes: 0 success, 1 usage or parse error, 2 validation error,
3 oracle mismatch under --check-oracle.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time

from .core import IntervalClass, LengthMismatch, ValidationError, validate
from .generate import random_instance_raw
from .oracle import BRUTE_FORCE_BOUND, ORACLE_BY_CLASS
from .search import IntervalReport, run

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VALIDATION = 2
EXIT_ORACLE_MISMATCH = 3


class ParseError(Exception):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"line {line}, column {col}: {message}")
        self.line = line
        self.col = col


class IoError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_input(text: str) -> list[list[int]]:
    """Parse the text format into raw signed sequences."""
    perms = []
    length = None
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0]
        if not body.strip():
            continue
        row = []
        col = 0
        for token in body.split():
            col = body.index(token, col) + 1
            try:
                row.append(int(token))
            except ValueError:
                raise ParseError(f"not an integer: {token!r}", lineno, col) from None
            col += len(token) - 1
        if length is None:
            length = len(row)
        elif len(row) != length:
            raise LengthMismatch(
                f"line {lineno}: expected {length} elements, got {len(row)}"
            )
        perms.append(row)
    if not perms:
        raise ParseError("no permutations found", 1, 1)
    return perms


def format_instance(raw_perms) -> str:
    return "\n".join(" ".join(str(v) for v in p) for p in raw_perms) + "\n"


def emit_report(report: IntervalReport, fmt: str, stats: bool, elapsed_ms=None) -> str:
    if fmt == "json":
        doc = {
            "class": report.interval_class.value,
            "n": report.n,
            "k": report.k,
            "intervals": [[t, x] for t, x in report.intervals],
            "count": report.count,
            "op_counters": report.counters,
        }
        if stats and elapsed_ms is not None:
            doc["time_ms"] = round(elapsed_ms, 3)
        return json.dumps(doc) + "\n"
    lines = [f"{t} {x}" for t, x in report.intervals]
    if stats:
        lines.append(f"# N={report.count}")
        if elapsed_ms is not None:
            lines.append(f"# time_ms={elapsed_ms:.3f}")
        for key, value in report.counters.items():
            lines.append(f"# {key}={value}")
    return "\n".join(lines) + ("\n" if lines else "")


def _is_positive_identity(raw) -> bool:
    return list(raw) == list(range(1, len(raw) + 1))


def _cmd_search(args) -> int:
    try:
        with open(args.input, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        print(f"error: cannot read {args.input}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        raws = parse_input(text)
    except (ParseError, LengthMismatch) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    interval_class = IntervalClass(args.interval_class)
    if not args.renumber and not _is_positive_identity(raws[0]):
        print(
            "error: first permutation is not the positive identity "
            "(pass --renumber to relabel)",
            file=sys.stderr,
        )
        return EXIT_VALIDATION
    try:
        instance = validate(raws, interval_class)
    except ValidationError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    start = time.perf_counter()
    report = run(instance, interval_class)
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    if args.check_oracle:
        if instance.n <= BRUTE_FORCE_BOUND:
            expected = ORACLE_BY_CLASS[interval_class](instance)
            got = set(report.intervals)
            if got != expected:
                print("oracle mismatch:", file=sys.stderr)
                print(f"  instance: {raws}", file=sys.stderr)
                print(f"  missing: {sorted(expected - got)}", file=sys.stderr)
                print(f"  spurious: {sorted(got - expected)}", file=sys.stderr)
                return EXIT_ORACLE_MISMATCH
        else:
            print(
                f"# oracle check skipped: n={instance.n} exceeds "
                f"bound {BRUTE_FORCE_BOUND}",
                file=sys.stderr,
            )
    sys.stdout.write(emit_report(report, args.format, args.stats, elapsed_ms))
    return EXIT_OK


def _cmd_gen(args) -> int:
    rng = random.Random(args.seed)
    raws = random_instance_raw(
        rng, args.n, args.k, signed=args.signed, conserved=args.conserved
    )
    sys.stdout.write(format_instance(raws))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="permintervals", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p_search = sub.add_parser("search", help="find intervals in an instance file")
    p_search.add_argument("input", help="path to the instance file")
    p_search.add_argument(
        "--class",
        dest="interval_class",
        default=IntervalClass.COMMON.value,
        choices=[c.value for c in IntervalClass],
        help="interval class to search for",
    )
    p_search.add_argument(
        "--renumber",
        action="store_true",
        help="relabel so the first permutation becomes the positive identity",
    )
    p_search.add_argument("--format", choices=("text", "json"), default="text")
    p_search.add_argument(
        "--check-oracle",
        action="store_true",
        help=f"cross-check against brute force when n <= {BRUTE_FORCE_BOUND}",
    )
    p_search.add_argument("--stats", action="store_true", help="emit count and timing")
    p_search.set_defaults(func=_cmd_search)

    p_gen = sub.add_parser("gen", help="generate a random instance")
    p_gen.add_argument("--n", type=int, required=True, help="number of elements")
    p_gen.add_argument("--k", type=int, default=2, help="number of permutations")
    p_gen.add_argument("--seed", type=int, default=0, help="random seed")
    p_gen.add_argument("--signed", action="store_true", help="random signs")
    p_gen.add_argument(
        "--conserved",
        action="store_true",
        help="force every permutation to start with +1 and end with +n",
    )
    p_gen.set_defaults(func=_cmd_gen)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
