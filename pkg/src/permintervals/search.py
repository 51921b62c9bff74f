"""Single-pass interval search over the paired stacks, one filter per class.

The driver walks the cuts t = n-1 down to 1.  At each cut it pops the left
stack with the lower bound b_t, pops the right stack with the upper bound
B_t, pushes the pair (b_t, t+1) when the upper bound is tight, and lets the
class filter read the stacks and emit intervals.  Filters never mutate the
stacks; they only walk the segment owned by t (when t survived on L, it is
the top of L and equals b_t).

Intervals are emitted with t strictly decreasing and, within one cut,
x strictly increasing.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .bounds import BoundsProfile, compute_bounds
from .core import (
    CONSERVED_CLASSES,
    Interval,
    IntervalClass,
    ProblemInstance,
)
from .lrstack import LRStack


@dataclass
class IntervalReport:
    interval_class: IntervalClass
    n: int
    k: int
    intervals: list[Interval]
    counters: dict = field(default_factory=dict)

    @property
    def count(self) -> int:
        return len(self.intervals)


def run(
    instance: ProblemInstance,
    interval_class: IntervalClass,
    *,
    debug: bool = False,
) -> IntervalReport:
    """Find all intervals of the given class in the instance."""
    instance.ensure_class(interval_class)
    n = instance.n
    out: list[Interval] = []
    counters: dict = {}
    if n >= 2:
        profile = compute_bounds(instance, interval_class)
        st = _search(instance, interval_class, profile, out, debug)
        counters = st.counters()
    return IntervalReport(interval_class, n, instance.k, out, counters)


def _search(instance, interval_class, profile, out, debug):
    n = instance.n
    st = LRStack(n + 2, "L-R+")
    fil, post_push = _make_filter(instance, interval_class, profile, st, out)
    b = profile.b
    B = profile.B
    pop_l = st.pop_l
    pop_r = st.pop_r
    push_lr = st.push_lr
    for t in range(n - 1, 0, -1):
        bt = b[t - 1]
        Bt = B[t - 1]
        pop_l(bt)
        pop_r(Bt)
        if Bt == t + 1:
            if push_lr(bt, t + 1) and post_push is not None:
                post_push(t + 1)
        if debug:
            st.check_invariants()
            before = st.fingerprint()
            fil(t)
            assert st.fingerprint() == before, "filter mutated the stacks"
        else:
            fil(t)
    return st


def _make_filter(instance, interval_class, profile, st, out):
    if interval_class is IntervalClass.COMMON:
        return _common_filter(st, out), None
    if interval_class is IntervalClass.NESTED:
        return _nested_filter(st, out, instance.n), None
    if interval_class is IntervalClass.MAXIMAL_NESTED:
        return _maximal_nested_filter(st, out, instance.n, profile)
    if interval_class is IntervalClass.SAME_SIGN_COMMON:
        return _same_sign_filter(st, out, instance), None
    if interval_class is IntervalClass.IRREDUCIBLE_COMMON:
        return _irreducible_common_filter(st, out, instance.n), None
    if interval_class in CONSERVED_CLASSES:
        single = interval_class is IntervalClass.IRREDUCIBLE_CONSERVED
        return _conserved_filter(st, out, instance, single)
    raise ValueError(f"unsupported class {interval_class}")


def _common_filter(st, out):
    on_l = st.on_l
    rtop = st.rtop
    rbot = st.rbot
    r = st.r
    r_index = st.r_index
    append = out.append

    def fil(t):
        if not on_l[t]:
            return
        xt = rtop[t]
        if xt == -1:
            return
        lo = r_index[rbot[t]]
        for i in range(r_index[xt], lo - 1, -1):
            append(Interval(t, r[i]))

    return fil


def _nested_filter(st, out, n):
    on_l = st.on_l
    on_r = st.on_r
    rtop = st.rtop
    rbot = st.rbot
    r = st.r
    r_index = st.r_index
    append = out.append
    # W[t] is the largest x with (t+1..x) emitted, 0 when none; an interval
    # (t..x) is nested iff x = t+1, or x extends an emitted (t+1..x'), or
    # x-1 sits on R next to x (then (t..x-1) was emitted at this very cut).
    W = [0] * n

    def fil(t):
        if not on_l[t]:
            return
        xt = rtop[t]
        if xt == -1:
            return
        if xt > W[t]:
            W[t] = 0
        wt = W[t]
        if xt != t + 1 and wt == 0:
            return
        lo = r_index[rbot[t]]
        i = r_index[xt]
        while i >= lo:
            x = r[i]
            if x != t + 1 and x > wt and not on_r[x - 1]:
                break
            append(Interval(t, x))
            W[t - 1] = x
            i -= 1

    return fil


def _maximal_nested_filter(st, out, n, profile):
    on_l = st.on_l
    on_r = st.on_r
    rtop = st.rtop
    rbot = st.rbot
    r = st.r
    r_index = st.r_index
    append = out.append
    b = profile.b
    B = profile.B
    # W[t] plays the same role as in the nested filter but always records the
    # largest nested right end y reachable from cut t+1, emitted or not.
    W = [0] * n
    # Rg[x] jumps from x to the first w >= x on R where (w, w+1) is missing
    # its upper neighbour, or to the bottom of R.  Set once when x is pushed;
    # deeper elements never change status while x is alive, so it stays valid.
    Rg = [0] * (n + 2)

    def post_push(x):
        if len(r) == 1 or not on_r[x + 1]:
            Rg[x] = x
        else:
            Rg[x] = Rg[r[-2]]

    def fil(t):
        if not on_l[t]:
            return
        xt = rtop[t]
        if xt == -1:
            return
        if xt > W[t]:
            W[t] = 0
        wt = W[t]
        if xt != t + 1 and wt == 0:
            return
        xbot = rbot[t]
        yt = Rg[wt if wt else xt]
        if yt > xbot:
            yt = xbot
        W[t - 1] = yt
        # Candidates are the jump targets up to yt, plus yt itself when the
        # chain overshoots it (yt can be a plain segment end, not a jump
        # target).  A candidate is maximal unless the next cut extends it.
        x = Rg[xt]
        if x > yt:
            x = yt
        while x <= yt:
            if t > 1 and not (b[t - 2] < t - 1 or B[t - 2] > x):
                break
            append(Interval(t, x))
            i = r_index[x] - 1
            if i < 0:
                break
            nx = Rg[r[i]]
            if nx <= yt:
                x = nx
            elif x < yt:
                x = yt
            else:
                break

    return fil, post_push


def _same_sign_filter(st, out, instance):
    on_l = st.on_l
    rtop = st.rtop
    rbot = st.rbot
    r = st.r
    r_index = st.r_index
    append = out.append
    n = instance.n
    # X[t] is the first x > t whose sign differs from t's in some permutation;
    # a same-sign interval at cut t must end before it.
    X = [n + 1] * (n + 1)
    for p in instance.permutations[1:]:
        pos = p.positive
        run_end = n + 1
        for e in range(n - 1, 0, -1):
            if pos[e] != pos[e - 1]:
                run_end = e + 1
            if run_end < X[e]:
                X[e] = run_end

    def fil(t):
        if not on_l[t]:
            return
        xt = rtop[t]
        if xt == -1:
            return
        limit = X[t]
        lo = r_index[rbot[t]]
        for i in range(r_index[xt], lo - 1, -1):
            x = r[i]
            if x >= limit:
                break
            append(Interval(t, x))

    return fil


def _irreducible_common_filter(st, out, n):
    on_l = st.on_l
    rtop = st.rtop
    rbot = st.rbot
    r = st.r
    r_index = st.r_index
    append = out.append
    # S holds cuts still waiting for their smallest enclosing interval,
    # increasing toward the top (the list tail).
    S: list[int] = []
    # Once (t'..x) is emitted, x is settled: larger intervals ending at x are
    # reducible.  Settled right ends are grouped into maximal runs of
    # consecutive integers so the walk can skip a run in one jump; runs are
    # merged with union-find keyed by the integers themselves.
    settled = bytearray(n + 2)
    parent = list(range(n + 2))
    size = [1] * (n + 2)
    run_max = list(range(n + 2))

    def find(v):
        root = v
        while parent[root] != root:
            root = parent[root]
        while parent[v] != root:
            parent[v], v = root, parent[v]
        return root

    def settle(x):
        if settled[x]:
            return
        settled[x] = 1
        root = x
        for nb in (x - 1, x + 1):
            if 0 <= nb <= n + 1 and settled[nb]:
                r2 = find(nb)
                if size[root] < size[r2]:
                    root, r2 = r2, root
                parent[r2] = root
                size[root] += size[r2]
                if run_max[r2] > run_max[root]:
                    run_max[root] = run_max[r2]

    def fil(t):
        S.append(t)
        if not on_l[t]:
            return
        x = rtop[t]
        if x == -1:
            return
        xbot = rbot[t]
        while x <= xbot and S:
            if S[-1] < x:
                append(Interval(t, x))
                settle(x)
                while S and S[-1] < x:
                    S.pop()
                i = r_index[x] - 1
                x = r[i] if i >= 0 else n + 1
            elif settled[x]:
                # Skip the whole settled run; its largest member is still on
                # R because right ends leave R smallest-first.
                i = r_index[run_max[find(x)]] - 1
                x = r[i] if i >= 0 else n + 1
            else:
                break

    return fil


def _conserved_filter(st, out, instance, single):
    on_l = st.on_l
    rtop = st.rtop
    rbot = st.rbot
    append = out.append
    n = instance.n
    perms = instance.permutations[1:]
    # Elements with identical sign vectors across the permutations form one
    # group; a conserved interval ends where its cut's group next appears.
    group_of = [0] * (n + 2)
    groups: dict = {}
    for e in range(1, n + 1):
        key = tuple(p.positive[e - 1] for p in perms)
        group_of[e] = groups.setdefault(key, len(groups))
    first = [-1] * len(groups)
    chain_next = [-1] * (n + 2)
    chain_prev = [-1] * (n + 2)

    def post_push(x):
        g = group_of[x]
        head = first[g]
        chain_next[x] = head
        chain_prev[x] = -1
        if head != -1:
            chain_prev[head] = x
        first[g] = x

    def on_pop_r(x):
        g = group_of[x]
        p = chain_prev[x]
        nx = chain_next[x]
        if p == -1:
            first[g] = nx
        else:
            chain_next[p] = nx
        if nx != -1:
            chain_prev[nx] = p

    st.on_pop_r = on_pop_r

    def position_ok(t):
        # The cut is admissible when t precedes t+1 in every permutation
        # where t is positive, and follows it where t is negative.
        for p in perms:
            before = p.inverse[t - 1] < p.inverse[t]
            if before != p.positive[t - 1]:
                return False
        return True

    def fil(t):
        if not on_l[t]:
            return
        if rtop[t] == -1:
            return
        x = first[group_of[t]]
        if x == -1 or not position_ok(t):
            return
        xbot = rbot[t]
        if single:
            if x <= xbot:
                append(Interval(t, x))
            return
        while x != -1 and x <= xbot:
            append(Interval(t, x))
            x = chain_next[x]

    return fil, post_push
