"""Paired monotone stacks linking left endpoints to right-endpoint segments.

The structure keeps two stacks L and R of distinct integers from a bounded
universe.  Each stack is strictly monotone from top to bottom; the order type
string picks the direction per stack ("L-R+" means L decreases and R
increases from top to bottom).  Every element a on L owns a contiguous
segment of R, delimited by the cursors rtop(a) (segment element nearest the
top of R) and rbot(a) (nearest the bottom).  The segments of the L elements,
read from the top of L down, partition R from its top down.

An element a' on L blocks a when a' could not sit below a without breaking
monotonicity (for a decreasing L: a' > a).  Same for R.  pop_l removes the
blocking prefix and installs a in its place, inheriting the freed segments;
pop_r removes blocking right endpoints and discards or re-points the L
elements whose segment was hit; push_lr records the pair (a, b) on top.
"""

from __future__ import annotations


class LRStackError(Exception):
    pass


class NotOnR(LRStackError):
    pass


ORDER_TYPES = ("L-R+", "L-R-", "L+R+", "L+R-")


class LRStack:
    """Universe elements are ints in range(universe).

    With enable_find=True a union-find over R elements answers find_l(b) in
    near-constant amortized time; in that mode pop_r is unsupported because
    unions cannot be undone.  Without it find_l falls back to a linear scan.
    """

    __slots__ = (
        "order",
        "_l_desc",
        "_r_desc",
        "l",
        "r",
        "on_l",
        "on_r",
        "l_index",
        "r_index",
        "rtop",
        "rbot",
        "l_pushes",
        "r_pushes",
        "l_pops",
        "r_pops",
        "on_pop_r",
        "_find",
        "_uf_parent",
        "_uf_size",
        "_uf_owner",
    )

    def __init__(self, universe: int, order: str = "L-R+", *, enable_find: bool = False):
        if order not in ORDER_TYPES:
            raise ValueError(f"unknown order type {order!r}")
        self.order = order
        self._l_desc = order[1] == "-"
        self._r_desc = order[3] == "-"
        self.l: list[int] = []
        self.r: list[int] = []
        self.on_l = bytearray(universe)
        self.on_r = bytearray(universe)
        # Positions are stable: both stacks push and pop at the list tail.
        self.l_index = [0] * universe
        self.r_index = [0] * universe
        self.rtop = [-1] * universe
        self.rbot = [-1] * universe
        self.l_pushes = 0
        self.r_pushes = 0
        self.l_pops = 0
        self.r_pops = 0
        self.on_pop_r = None
        self._find = enable_find
        if enable_find:
            self._uf_parent = list(range(universe))
            self._uf_size = [1] * universe
            self._uf_owner = [-1] * universe

    # -- queries ----------------------------------------------------------

    def top_l(self):
        return self.l[-1] if self.l else None

    def top_r(self):
        return self.r[-1] if self.r else None

    def next(self, u: int):
        """Element following u on its stack, toward the bottom."""
        if self.on_l[u]:
            i = self.l_index[u]
            return self.l[i - 1] if i > 0 else None
        if self.on_r[u]:
            i = self.r_index[u]
            return self.r[i - 1] if i > 0 else None
        raise LRStackError(f"{u} is on neither stack")

    def set_r(self, a: int) -> list[int]:
        """Segment of R owned by a, from rtop(a) to rbot(a)."""
        if not self.on_l[a] or self.rtop[a] == -1:
            return []
        hi = self.r_index[self.rtop[a]]
        lo = self.r_index[self.rbot[a]]
        return [self.r[i] for i in range(hi, lo - 1, -1)]

    def counters(self) -> dict:
        return {
            "l_pushes": self.l_pushes,
            "r_pushes": self.r_pushes,
            "l_pops": self.l_pops,
            "r_pops": self.r_pops,
        }

    # -- mutations --------------------------------------------------------

    def pop_l(self, a: int) -> None:
        """Remove the prefix of L blocking a; if anything was removed, put a
        on top (unless already there) and hand it the freed segments."""
        l = self.l
        on_l = self.on_l
        rbot = self.rbot
        desc = self._l_desc
        popped = False
        merged_rbot = -1
        members = [] if self._find else None
        while l:
            top = l[-1]
            if (top <= a) if desc else (top >= a):
                break
            l.pop()
            on_l[top] = 0
            self.l_pops += 1
            popped = True
            # Deeper pops own segments nearer the bottom of R; keep the last.
            if rbot[top] != -1:
                merged_rbot = rbot[top]
            if members is not None and self.rtop[top] != -1:
                members.append(self.rtop[top])
        if not popped:
            return
        if not on_l[a]:
            l.append(a)
            on_l[a] = 1
            self.l_index[a] = len(l) - 1
            self.l_pushes += 1
            rbot[a] = merged_rbot
        else:
            if rbot[a] == -1:
                rbot[a] = merged_rbot
            if members is not None and self.rtop[a] != -1:
                members.append(self.rtop[a])
        top = l[-1]
        self.rtop[top] = self.r[-1] if self.r else -1
        if members:
            self._union_all(members, top)

    def pop_r(self, b: int) -> None:
        """Remove the prefix of R blocking b (b itself is never pushed), then
        drop or re-point L elements whose segment was emptied or clipped."""
        if self._find:
            raise LRStackError("pop_r is unsupported with find_l backing")
        r = self.r
        on_r = self.on_r
        desc = self._r_desc
        hook = self.on_pop_r
        while r:
            top = r[-1]
            if (top <= b) if desc else (top >= b):
                break
            r.pop()
            on_r[top] = 0
            self.r_pops += 1
            if hook is not None:
                hook(top)
        l = self.l
        rtop = self.rtop
        rbot = self.rbot
        while l:
            a = l[-1]
            ra = rtop[a]
            if ra != -1 and on_r[rbot[a]]:
                if not on_r[ra]:
                    # Segment clipped from the top; a owns the top of R now.
                    rtop[a] = r[-1]
                break
            rtop[a] = -1
            rbot[a] = -1
            l.pop()
            self.on_l[a] = 0
            self.l_pops += 1

    def push_lr(self, a: int, b: int) -> bool:
        """Record the pair (a, b); either side is skipped when already on top.
        Returns True when b was actually pushed on R."""
        l = self.l
        r = self.r
        if not l or l[-1] != a:
            l.append(a)
            self.on_l[a] = 1
            self.l_index[a] = len(l) - 1
            self.l_pushes += 1
            self.rtop[a] = -1
            self.rbot[a] = -1
        pushed_b = False
        if not r or r[-1] != b:
            r.append(b)
            self.on_r[b] = 1
            self.r_index[b] = len(r) - 1
            self.r_pushes += 1
            pushed_b = True
        top = l[-1]
        old = self.rtop[top]
        self.rtop[top] = r[-1]
        if self.rbot[top] == -1:
            self.rbot[top] = r[-1]
        if self._find and pushed_b:
            self._uf_parent[b] = b
            self._uf_size[b] = 1
            self._uf_owner[b] = top
            if old != -1:
                self._union_all([b, old], top)
        return pushed_b

    # -- find_l -----------------------------------------------------------

    def find_l(self, b: int) -> int:
        """The L element whose segment contains b."""
        if not self.on_r[b]:
            raise NotOnR(f"{b} is not on R")
        if self._find:
            return self._uf_owner[self._uf_find(b)]
        return self.find_l_scan(b)

    def find_l_scan(self, b: int) -> int:
        """Linear-scan reference for find_l."""
        if not self.on_r[b]:
            raise NotOnR(f"{b} is not on R")
        i = self.r_index[b]
        for a in reversed(self.l):
            if self.rtop[a] == -1:
                continue
            if self.r_index[self.rbot[a]] <= i <= self.r_index[self.rtop[a]]:
                return a
        raise LRStackError(f"no owner found for {b}")

    def _uf_find(self, x: int) -> int:
        parent = self._uf_parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def _union_all(self, members: list[int], owner: int) -> None:
        size = self._uf_size
        parent = self._uf_parent
        root = self._uf_find(members[0])
        for m in members[1:]:
            r2 = self._uf_find(m)
            if r2 == root:
                continue
            if size[root] < size[r2]:
                root, r2 = r2, root
            parent[r2] = root
            size[root] += size[r2]
        self._uf_owner[root] = owner

    # -- diagnostics ------------------------------------------------------

    def fingerprint(self) -> tuple:
        """Snapshot of the externally visible state, for purity checks."""
        return (
            tuple(self.l),
            tuple(self.r),
            tuple(self.rtop[a] for a in self.l),
            tuple(self.rbot[a] for a in self.l),
        )

    def check_invariants(self) -> None:
        """Assert monotonicity, index consistency and segment structure."""
        for stack, desc, on, index in (
            (self.l, self._l_desc, self.on_l, self.l_index),
            (self.r, self._r_desc, self.on_r, self.r_index),
        ):
            for i, u in enumerate(stack):
                assert on[u], f"{u} on stack but flag unset"
                assert index[u] == i, f"stale index for {u}"
                if i + 1 < len(stack):
                    above = stack[i + 1]
                    # Top is the list tail; desc means top > bottom.
                    assert (above > u) if desc else (above < u), (
                        f"monotonicity broken at {u}, {above}"
                    )
            assert sum(on) == len(stack), "flag count differs from stack size"
        # Segments partition R from its top down, in L order from the top.
        expected_hi = len(self.r) - 1
        for a in reversed(self.l):
            if self.rtop[a] == -1:
                assert self.rbot[a] == -1, f"rbot set without rtop for {a}"
                continue
            assert self.on_r[self.rtop[a]], f"rtop({a}) not on R"
            assert self.on_r[self.rbot[a]], f"rbot({a}) not on R"
            hi = self.r_index[self.rtop[a]]
            lo = self.r_index[self.rbot[a]]
            assert lo <= hi, f"inverted segment for {a}"
            assert hi == expected_hi, f"segment of {a} not flush at index {hi}"
            expected_hi = lo - 1
        assert expected_hi == -1 or not self.l, "R not fully covered by segments"
