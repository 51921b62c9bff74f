"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run with `pytest -v -s tests/test_acceptance.py` to see the lines inline;
without -s they still appear in captured output on failure.
"""

import random
import time
from contextlib import contextmanager

from permintervals.bounds import compute_inf, compute_sup
from permintervals.core import Interval, IntervalClass, validate
from permintervals.oracle import ORACLE_BY_CLASS
from permintervals.search import run
from conftest import ALL_CLASSES, EX1_RAW, EX2_RAW, identity_copies, make_instance

IC = IntervalClass


@contextmanager
def criterion(name):
    try:
        yield
    except BaseException:
        print(f"ACCEPTANCE {name}: FAIL")
        raise
    print(f"ACCEPTANCE {name}: PASS")


def best_time(fn, repeats=5):
    fn()  # warmup
    return min(_timed(fn) for _ in range(repeats))


def _timed(fn):
    start = time.perf_counter()
    fn()
    return time.perf_counter() - start


def test_criterion_1_golden_example_1():
    with criterion("1 golden example 1"):
        inst = validate(EX1_RAW, IC.COMMON)
        expected = {
            IC.COMMON: {(1, 2), (1, 3), (1, 6), (1, 7), (3, 6), (4, 5), (4, 6)},
            IC.NESTED: {(1, 2), (1, 3), (3, 6), (4, 5), (4, 6)},
            IC.MAXIMAL_NESTED: {(3, 6), (1, 3)},
            IC.IRREDUCIBLE_COMMON: {
                (4, 5), (4, 6), (3, 6), (1, 2), (1, 3), (1, 7),
            },
        }
        for cls, want in expected.items():
            assert set(run(inst, cls).intervals) == want, cls
            elapsed = best_time(lambda: run(inst, cls))
            assert elapsed < 1e-3, f"{cls}: {elapsed * 1e3:.3f} ms"


def test_criterion_2_golden_example_2():
    with criterion("2 golden example 2"):
        inst = validate(EX2_RAW, IC.CONSERVED)
        assert set(run(inst, IC.CONSERVED).intervals) == {(1, 7), (2, 3)}
        assert set(run(inst, IC.COMMON).intervals) == {
            (1, 3), (1, 6), (1, 7), (2, 3), (2, 6), (2, 7),
            (4, 5), (4, 6), (4, 7),
        }
        for cls in (IC.CONSERVED, IC.COMMON):
            elapsed = best_time(lambda: run(inst, cls))
            assert elapsed < 1e-3, f"{cls}: {elapsed * 1e3:.3f} ms"


def test_criterion_3_oracle_equivalence():
    with criterion("3 oracle equivalence, 1000 instances per class"):
        start = time.perf_counter()
        rng = random.Random(20240817)
        for cls in ALL_CLASSES:
            oracle = ORACLE_BY_CLASS[cls]
            for _ in range(1000):
                n = rng.randint(2, 12)
                k = rng.randint(1, 4)
                inst = make_instance(rng, n, k, cls)
                got = set(run(inst, cls).intervals)
                want = oracle(inst)
                assert got == want, (cls, inst.permutations, got, want)
        elapsed = time.perf_counter() - start
        assert elapsed < 60.0, f"{elapsed:.1f} s"


def test_criterion_4_range_extrema():
    with criterion("4 batched range extrema vs direct scan"):
        rng = random.Random(99)
        checked = 0
        while checked < 100_000:
            n = rng.randint(2, 200)
            perm = list(range(1, n + 1))
            rng.shuffle(perm)
            queries = []
            for _ in range(min(4 * n, 600)):
                q2 = rng.randint(1, n)
                q1 = rng.randint(0, q2 - 1)
                queries.append((q1, q2))
            infs = compute_inf(perm, queries)
            sups = compute_sup(perm, queries)
            lo_pad = [n + 1] + perm
            hi_pad = [0] + perm
            for (q1, q2), lo, hi in zip(queries, infs, sups):
                assert lo == min(lo_pad[q1 : q2 + 1])
                assert hi == max(hi_pad[q1 : q2 + 1])
            checked += len(queries)
        assert checked >= 100_000


def test_criterion_5_containment_and_size_bounds():
    with criterion("5 containment chains and irreducible size bounds"):
        rng = random.Random(31337)
        for _ in range(1000):
            n = rng.randint(2, 12)
            k = rng.randint(1, 4)
            inst = make_instance(rng, n, k, IC.CONSERVED, signed=True)
            res = {cls: set(run(inst, cls).intervals) for cls in ALL_CLASSES}
            assert res[IC.MAXIMAL_NESTED] <= res[IC.NESTED] <= res[IC.COMMON]
            assert res[IC.IRREDUCIBLE_COMMON] <= res[IC.COMMON]
            assert res[IC.SAME_SIGN_COMMON] <= res[IC.COMMON]
            assert res[IC.CONSERVED] <= res[IC.COMMON]
            assert res[IC.IRREDUCIBLE_CONSERVED] <= res[IC.CONSERVED]
            assert len(res[IC.IRREDUCIBLE_COMMON]) <= n - 1
            assert len(res[IC.IRREDUCIBLE_CONSERVED]) <= n - 1


def test_criterion_6_linear_scaling():
    with criterion("6 near-linear scaling to n=400000"):
        rng = random.Random(7)
        times = []
        for n in (100_000, 200_000, 400_000):
            raws = [list(range(1, n + 1))]
            for _ in range(2):
                p = list(range(1, n + 1))
                rng.shuffle(p)
                raws.append(p)
            inst = validate(raws, IC.COMMON)
            run(inst, IC.COMMON)  # warmup
            elapsed = min(_timed(lambda: run(inst, IC.COMMON)) for _ in range(2))
            report = run(inst, IC.COMMON)
            pushes = report.counters["l_pushes"] + report.counters["r_pushes"]
            assert pushes <= 2 * (n + 1), (n, pushes)
            assert elapsed < 2.0, f"n={n}: {elapsed:.2f} s"
            times.append(elapsed)
        for smaller, larger in zip(times, times[1:]):
            assert larger <= 2.5 * smaller, times


def test_criterion_7_large_identity_counts():
    with criterion("7 identity copies at n=1000"):
        inst = identity_copies(1000, 4)
        common = run(inst, IC.COMMON)
        assert common.count == 1000 * 999 // 2 == 499500
        irreducible = run(inst, IC.IRREDUCIBLE_COMMON)
        assert irreducible.count == 999
        assert set(irreducible.intervals) == {
            Interval(t, t + 1) for t in range(1, 1000)
        }
