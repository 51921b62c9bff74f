"""Brute-force reference implementations for every interval class.

These check interval definitions directly from the permutations, without the
stacks, bounds or search machinery, so they can vouch for the fast path on
small instances.  All functions refuse instances larger than the bound.
"""

from __future__ import annotations

from .core import Interval, IntervalClass, ProblemInstance

BRUTE_FORCE_BOUND = 64


class BruteForceBoundExceeded(Exception):
    pass


def _check_bound(instance: ProblemInstance, bound: int) -> None:
    if instance.n > bound:
        raise BruteForceBoundExceeded(f"n={instance.n} exceeds bound {bound}")


def oracle_common(
    instance: ProblemInstance, bound: int = BRUTE_FORCE_BOUND
) -> set[Interval]:
    """(t..x) is common iff its elements are consecutive positions in every
    permutation (signs ignored)."""
    _check_bound(instance, bound)
    n = instance.n
    inverses = [p.inverse for p in instance.permutations[1:]]
    res = set()
    for t in range(1, n):
        lo = [inv[t - 1] for inv in inverses]
        hi = lo[:]
        for x in range(t + 1, n + 1):
            for k, inv in enumerate(inverses):
                pos = inv[x - 1]
                if pos < lo[k]:
                    lo[k] = pos
                elif pos > hi[k]:
                    hi[k] = pos
            if all(hi[k] - lo[k] == x - t for k in range(len(inverses))):
                res.add(Interval(t, x))
    return res


def oracle_nested(
    instance: ProblemInstance, bound: int = BRUTE_FORCE_BOUND
) -> set[Interval]:
    """A common interval of size two is nested; a larger one is nested iff
    it still is after dropping one of its endpoints."""
    common = oracle_common(instance, bound)
    nested = {iv for iv in common if iv.x == iv.t + 1}
    for size in range(3, instance.n + 1):
        for iv in common:
            if iv.x - iv.t + 1 != size:
                continue
            if Interval(iv.t + 1, iv.x) in nested or Interval(iv.t, iv.x - 1) in nested:
                nested.add(iv)
    return nested


def oracle_maximal_nested(
    instance: ProblemInstance, bound: int = BRUTE_FORCE_BOUND
) -> set[Interval]:
    """Nested intervals not contained in a one-element-larger nested one."""
    nested = oracle_nested(instance, bound)
    return {
        iv
        for iv in nested
        if Interval(iv.t - 1, iv.x) not in nested
        and Interval(iv.t, iv.x + 1) not in nested
    }


def oracle_conserved(
    instance: ProblemInstance, bound: int = BRUTE_FORCE_BOUND
) -> set[Interval]:
    """Common intervals whose occurrence in every permutation runs between
    the same delimiters: either t first and x last, both positive, or x
    first and t last, both negative."""
    common = oracle_common(instance, bound)
    res = set()
    for t, x in common:
        ok = True
        for p in instance.permutations[1:]:
            positions = [p.inverse[e - 1] for e in range(t, x + 1)]
            a = p.values[min(positions) - 1]
            b = p.values[max(positions) - 1]
            forward = a == t and b == x and p.positive[t - 1] and p.positive[x - 1]
            backward = (
                a == x and b == t and not p.positive[t - 1] and not p.positive[x - 1]
            )
            if not (forward or backward):
                ok = False
                break
        if ok:
            res.add(Interval(t, x))
    return res


def oracle_irreducible_conserved(
    instance: ProblemInstance, bound: int = BRUTE_FORCE_BOUND
) -> set[Interval]:
    """Conserved intervals not expressible as a chain of two or more smaller
    conserved intervals overlapping on single elements."""
    conserved = oracle_conserved(instance, bound)
    by_start: dict[int, list[int]] = {}
    for t, x in conserved:
        by_start.setdefault(t, []).append(x)
    res = set()
    for t, x in conserved:
        # Reachable right ends from t via chains of conserved steps, skipping
        # the interval itself as a single step.
        frontier = [t]
        seen = {t}
        reducible = False
        while frontier and not reducible:
            nxt = []
            for c in frontier:
                for x2 in by_start.get(c, ()):
                    if x2 > x or (c == t and x2 == x):
                        continue
                    if x2 == x:
                        reducible = True
                        break
                    if x2 not in seen:
                        seen.add(x2)
                        nxt.append(x2)
                if reducible:
                    break
            frontier = nxt
        if not reducible:
            res.add(Interval(t, x))
    return res


def oracle_irreducible_common(
    instance: ProblemInstance, bound: int = BRUTE_FORCE_BOUND
) -> set[Interval]:
    """For each adjacent pair (w, w+1): the common interval containing both
    with the largest t, ties broken by the smallest x."""
    common = oracle_common(instance, bound)
    res = set()
    for w in range(1, instance.n):
        best = None
        for t, x in common:
            if t <= w < x:
                if best is None or t > best[0] or (t == best[0] and x < best[1]):
                    best = (t, x)
        if best is not None:
            res.add(Interval(*best))
    return res


def oracle_same_sign(
    instance: ProblemInstance, bound: int = BRUTE_FORCE_BOUND
) -> set[Interval]:
    """Common intervals whose elements carry one uniform sign inside each
    permutation."""
    common = oracle_common(instance, bound)
    res = set()
    for t, x in common:
        ok = True
        for p in instance.permutations:
            signs = {p.positive[e - 1] for e in range(t, x + 1)}
            if len(signs) > 1:
                ok = False
                break
        if ok:
            res.add(Interval(t, x))
    return res


ORACLE_BY_CLASS = {
    IntervalClass.COMMON: oracle_common,
    IntervalClass.NESTED: oracle_nested,
    IntervalClass.MAXIMAL_NESTED: oracle_maximal_nested,
    IntervalClass.CONSERVED: oracle_conserved,
    IntervalClass.IRREDUCIBLE_CONSERVED: oracle_irreducible_conserved,
    IntervalClass.IRREDUCIBLE_COMMON: oracle_irreducible_common,
    IntervalClass.SAME_SIGN_COMMON: oracle_same_sign,
}
