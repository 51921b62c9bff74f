#!/usr/bin/env python3
"""Timing sweep over n for every interval class.

Generates K random permutations per size, times the search (instance
construction excluded), and reports wall time, emitted count and stack push
counters.  Doubling n should roughly double the time.

Usage: python scripts/benchmark_linearity.py [--classes common,nested]
       [--sizes 100000,200000,400000] [--k 3] [--seed 7] [--repeats 3]
"""

import argparse
import random
import time

from permintervals import IntervalClass, validate
from permintervals.generate import random_instance_raw
from permintervals.search import run


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--classes", default="common",
                        help="comma-separated class names, or 'all'")
    parser.add_argument("--sizes", default="100000,200000,400000")
    parser.add_argument("--k", type=int, default=3)
    parser.add_argument("--seed", type=int, default=7)
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()

    if args.classes == "all":
        classes = list(IntervalClass)
    else:
        classes = [IntervalClass(c) for c in args.classes.split(",")]
    sizes = [int(s) for s in args.sizes.split(",")]

    print(f"{'class':<22} {'n':>8} {'time_s':>8} {'ratio':>6} {'count':>10} {'pushes':>9}")
    for cls in classes:
        rng = random.Random(args.seed)
        conserved = cls in (IntervalClass.CONSERVED,
                            IntervalClass.IRREDUCIBLE_CONSERVED)
        prev = None
        for n in sizes:
            raws = random_instance_raw(rng, n, args.k, conserved=conserved)
            inst = validate(raws, cls)
            run(inst, cls)  # warmup
            elapsed = min(
                _timed(lambda: run(inst, cls)) for _ in range(args.repeats)
            )
            report = run(inst, cls)
            pushes = report.counters["l_pushes"] + report.counters["r_pushes"]
            ratio = f"{elapsed / prev:.2f}" if prev else "-"
            print(f"{cls.value:<22} {n:>8} {elapsed:>8.3f} {ratio:>6} "
                  f"{report.count:>10} {pushes:>9}")
            prev = elapsed


def _timed(fn):
    start = time.perf_counter()
    fn()
    return time.perf_counter() - start


if __name__ == "__main__":
    main()
