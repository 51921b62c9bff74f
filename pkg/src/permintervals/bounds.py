"""Per-cut bounds on interval endpoints, from batched range extrema.

For each cut t (between elements t and t+1) the search needs two numbers:
b_t, a lower bound that any interval (t..x) must reach down to, and B_t, an
upper bound it must reach up to.  Both come from the extrema of the stretch
of each permutation delimited by the positions of t and t+1.

compute_inf answers a batch of range-minimum queries over prefixes in one
left-to-right sweep with a monotone stack; compute_sup is the mirror for
maxima.  Both run in O(n + q log n): each query is answered at its right
endpoint by bisecting the stack's segment starts.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from typing import Sequence

from .core import (
    CONSERVED_CLASSES,
    IntervalClass,
    ProblemInstance,
    SignedPermutation,
)
from .lrstack import LRStack


class QueryOutOfRange(Exception):
    pass


def _bucket_queries(n: int, queries) -> list:
    buckets = [[] for _ in range(n + 1)]
    for i, (q1, q2) in enumerate(queries):
        if not (0 <= q1 < q2 <= n):
            raise QueryOutOfRange(f"query ({q1}, {q2}) outside 0 <= q1 < q2 <= {n}")
        buckets[q2].append((q1, i))
    return buckets


def compute_inf(perm: Sequence[int], queries) -> list[int]:
    """Minimum of perm over positions q1..q2 for each query, where position 0
    holds a virtual sentinel n+1 (so a query starting at 0 sees it)."""
    n = len(perm)
    queries = list(queries)
    buckets = _bucket_queries(n, queries)
    ans = [0] * len(queries)
    vals = [n + 1]
    starts = [0]
    for h in range(1, n + 1):
        v = perm[h - 1]
        start = h
        while vals and vals[-1] > v:
            vals.pop()
            start = starts.pop()
        vals.append(v)
        starts.append(start)
        for q1, i in buckets[h]:
            ans[i] = vals[bisect_right(starts, q1) - 1]
    return ans


def compute_sup(perm: Sequence[int], queries) -> list[int]:
    """Maximum of perm over positions q1..q2, with a virtual 0 at position 0."""
    n = len(perm)
    queries = list(queries)
    buckets = _bucket_queries(n, queries)
    ans = [0] * len(queries)
    vals = [0]
    starts = [0]
    for h in range(1, n + 1):
        v = perm[h - 1]
        start = h
        while vals and vals[-1] < v:
            vals.pop()
            start = starts.pop()
        vals.append(v)
        starts.append(start)
        for q1, i in buckets[h]:
            ans[i] = vals[bisect_right(starts, q1) - 1]
    return ans


def compute_inf_via_lrstack(perm: Sequence[int], queries) -> list[int]:
    """Reference for compute_inf built on the paired stacks with union-find.

    L holds candidate minima (values), R holds positions; the segment of a
    value is exactly the set of positions whose prefix-minimum it is, so
    find_l answers the query.
    """
    return _extrema_via_lrstack(perm, queries, maximum=False)


def compute_sup_via_lrstack(perm: Sequence[int], queries) -> list[int]:
    return _extrema_via_lrstack(perm, queries, maximum=True)


def _extrema_via_lrstack(perm, queries, maximum):
    n = len(perm)
    queries = list(queries)
    buckets = _bucket_queries(n, queries)
    ans = [0] * len(queries)
    st = LRStack(n + 2, "L+R-" if maximum else "L-R-", enable_find=True)
    sentinel = 0 if maximum else n + 1
    for h in range(0, n + 1):
        v = sentinel if h == 0 else perm[h - 1]
        st.pop_l(v)
        st.push_lr(v, h)
        for q1, i in buckets[h]:
            ans[i] = st.find_l(q1)
    return ans


def queries_for_profile(inverse: Sequence[int]) -> list[tuple[int, int]]:
    """For each cut t, the (sorted) positions of t and t+1."""
    n = len(inverse)
    out = []
    for t in range(1, n):
        p = inverse[t - 1]
        q = inverse[t]
        out.append((p, q) if p < q else (q, p))
    return out


# Above this size the per-permutation extrema use the vectorized sparse-table
# path instead of the interpreted sweep.
VECTOR_THRESHOLD = 1024


def _extrema_sweep(perm: SignedPermutation) -> tuple[list[int], list[int]]:
    qs = queries_for_profile(perm.inverse)
    return compute_inf(perm.values, qs), compute_sup(perm.values, qs)


def _extrema_vectorized(perm: SignedPermutation) -> tuple[list[int], list[int]]:
    """Range min/max between the positions of t and t+1 for every cut t,
    answered from doubling sparse tables built with numpy."""
    import numpy as np

    arr = np.asarray(perm.values, dtype=np.int64)
    pos = np.asarray(perm.inverse, dtype=np.int64) - 1
    lo = np.minimum(pos[:-1], pos[1:])
    hi = np.maximum(pos[:-1], pos[1:])
    lengths = hi - lo + 1
    levels = (np.frexp(lengths.astype(np.float64))[1] - 1).astype(np.int64)
    sp_min = [arr]
    sp_max = [arr]
    j = 0
    while (2 << j) <= len(arr):
        half = 1 << j
        sp_min.append(np.minimum(sp_min[j][:-half], sp_min[j][half:]))
        sp_max.append(np.maximum(sp_max[j][:-half], sp_max[j][half:]))
        j += 1
    m_out = np.empty(len(lo), dtype=np.int64)
    M_out = np.empty(len(lo), dtype=np.int64)
    for jj in range(len(sp_min)):
        mask = levels == jj
        if not mask.any():
            continue
        ll = lo[mask]
        rr = hi[mask] - (1 << jj) + 1
        m_out[mask] = np.minimum(sp_min[jj][ll], sp_min[jj][rr])
        M_out[mask] = np.maximum(sp_max[jj][ll], sp_max[jj][rr])
    return m_out.tolist(), M_out.tolist()


def profile_extrema(
    perm: SignedPermutation, *, force: str | None = None
) -> tuple[list[int], list[int]]:
    """Per-cut extrema (m_t, M_t) of one permutation, for t in 1..n-1."""
    if force == "sweep":
        return _extrema_sweep(perm)
    if force == "vectorized" or perm.n >= VECTOR_THRESHOLD:
        return _extrema_vectorized(perm)
    return _extrema_sweep(perm)


@dataclass
class BoundsProfile:
    """Arrays b and B indexed by cut: b[t-1] = b_t, B[t-1] = B_t for t in
    1..n-1.  Optionally keeps the raw per-cut extrema m and M."""

    n: int
    b: list[int]
    B: list[int]
    m: list[int] | None = None
    M: list[int] | None = None

    def check(self) -> None:
        for t in range(1, self.n):
            assert 0 <= self.b[t - 1] <= t, f"b_{t} out of range"
            assert t + 1 <= self.B[t - 1] <= self.n + 1, f"B_{t} out of range"


def compute_bounds(
    instance: ProblemInstance,
    interval_class: IntervalClass,
    *,
    keep_extrema: bool = False,
) -> BoundsProfile:
    """Fold the per-permutation extrema into the b/B arrays for the class.

    For the common family b_t/B_t are the min/max over permutations of the
    stretch extrema.  For the conserved family each extremum is first widened
    by one unless it already touches the cut, accounting for the delimiting
    elements required just outside the interval.
    """
    n = instance.n
    conserved = interval_class in CONSERVED_CLASSES
    if instance.k == 1 or n < 2:
        b = list(range(1, n))
        bb = list(range(2, n + 1))
        return BoundsProfile(n, b, bb, b[:] if keep_extrema else None,
                             bb[:] if keep_extrema else None)
    b = [n + 1] * (n - 1)
    B = [0] * (n - 1)
    m = [n + 1] * (n - 1) if keep_extrema else None
    M = [0] * (n - 1) if keep_extrema else None
    for p in instance.permutations[1:]:
        mk, Mk = profile_extrema(p)
        if keep_extrema:
            m = list(map(min, m, mk))
            M = list(map(max, M, Mk))
        if conserved:
            mk = [v if v == i + 1 else v - 1 for i, v in enumerate(mk)]
            Mk = [v if v == i + 2 else v + 1 for i, v in enumerate(Mk)]
        b = list(map(min, b, mk))
        B = list(map(max, B, Mk))
    return BoundsProfile(n, b, B, m, M)
