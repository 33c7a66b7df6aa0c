"""Interval-biased search tree over consecutive disjoint integer intervals.

The tree stores intervals [a_0,a_1), ..., [a_{m-1},a_m); the root of any
subtree holds the interval containing the integer midpoint of the subtree's
boundary span, so each child subtree spans at most half of its parent.
Node ids equal interval indices.  Searching costs O(log(span(start)/
span(found))) node visits; precomputed hints (three LCA nodes per query
range) let a search start below the root.
"""

from __future__ import annotations

from bisect import bisect_right
from typing import NamedTuple


class Hint(NamedTuple):
    """Hint nodes for queries confined to boundary range [a_i, a_j)."""

    i: int
    j: int
    center: int        # lca(v_i, v_{j-1})
    left: int | None   # lca(v_i, v_{c-1}), absent when c == i
    right: int | None  # lca(v_{c+1}, v_{j-1}), absent when c == j-1


class Ibst:
    __slots__ = ("boundaries", "m", "root", "left", "right", "parent",
                 "_euler", "_euler_first", "_euler_table")

    def __init__(self, boundaries):
        b = list(boundaries)
        if len(b) < 2:
            raise ValueError("need at least one interval")
        for x, y in zip(b, b[1:]):
            if x >= y:
                raise ValueError("boundaries must be strictly increasing")
        m = len(b) - 1
        self.boundaries = b
        self.m = m
        self.left = [-1] * m
        self.right = [-1] * m
        self.parent = [-1] * m
        self.root = self._build(0, m)
        self._build_lca()

    def _build(self, lo: int, hi: int) -> int:
        # subtree over intervals lo..hi-1 (boundary range [b[lo], b[hi]))
        if lo >= hi:
            return -1
        b = self.boundaries
        mid = (b[lo] + b[hi]) // 2
        i = bisect_right(b, mid, lo, hi) - 1
        if i < lo:
            i = lo
        l = self._build(lo, i)
        r = self._build(i + 1, hi)
        if l >= 0:
            self.parent[l] = i
        if r >= 0:
            self.parent[r] = i
        self.left[i] = l
        self.right[i] = r
        return i

    def _build_lca(self):
        # Euler tour + sparse table of minimum depth, indices as payload.
        # The tour re-visits a node after each child, which LCA-by-RMQ needs.
        euler: list[int] = []
        depth: list[int] = []
        first = [-1] * self.m

        def tour(v: int, d: int) -> None:
            euler.append(v)
            depth.append(d)
            if first[v] < 0:
                first[v] = len(euler) - 1
            for ch in (self.left[v], self.right[v]):
                if ch >= 0:
                    tour(ch, d + 1)
                    euler.append(v)
                    depth.append(d)

        tour(self.root, 0)  # depth is O(log span), recursion is safe
        self._euler = euler
        self._euler_first = first
        # sparse table over (depth, euler position)
        n = len(euler)
        table = [list(range(n))]
        k = 1
        while (1 << k) <= n:
            prev = table[-1]
            half = 1 << (k - 1)
            cur = []
            for i in range(n - (1 << k) + 1):
                a, bb = prev[i], prev[i + half]
                cur.append(a if depth[a] <= depth[bb] else bb)
            table.append(cur)
            k += 1
        self._euler_table = (depth, table)

    def lca(self, u: int, v: int) -> int:
        lo = self._euler_first[u]
        hi = self._euler_first[v]
        if lo > hi:
            lo, hi = hi, lo
        depth, table = self._euler_table
        k = (hi - lo + 1).bit_length() - 1
        a = table[k][lo]
        b = table[k][hi - (1 << k) + 1]
        return self._euler[a if depth[a] <= depth[b] else b]

    def interval(self, i: int) -> tuple[int, int]:
        return self.boundaries[i], self.boundaries[i + 1]

    def _descend(self, v: int, q: int) -> tuple[int, int]:
        b = self.boundaries
        visits = 0
        while True:
            visits += 1
            if b[v] <= q < b[v + 1]:
                return v, visits
            v = self.left[v] if q < b[v] else self.right[v]

    def search(self, q: int) -> int:
        return self.search_counted(q)[0]

    def search_counted(self, q: int) -> tuple[int, int]:
        """(interval index containing q, nodes visited), searching from the root."""
        b = self.boundaries
        if not b[0] <= q < b[-1]:
            raise ValueError(f"query {q} outside [{b[0]}, {b[-1]})")
        return self._descend(self.root, q)

    def hint_for(self, i: int, j: int) -> Hint:
        """Hint for queries in the boundary range [a_i, a_j); 0 <= i < j <= m."""
        if not 0 <= i < j <= self.m:
            raise ValueError(f"bad boundary range ({i}, {j})")
        c = self.lca(i, j - 1)
        vl = self.lca(i, c - 1) if c > i else None
        vr = self.lca(c + 1, j - 1) if c < j - 1 else None
        return Hint(i, j, c, vl, vr)

    def precompute_hints(self, ranges) -> list[Hint]:
        return [self.hint_for(i, j) for i, j in ranges]

    def search_with_hint(self, hint: Hint, q: int) -> int:
        return self.search_with_hint_counted(hint, q)[0]

    def search_with_hint_counted(self, hint: Hint, q: int) -> tuple[int, int]:
        """Hint-accelerated search; q must lie inside the hint's range."""
        b = self.boundaries
        if not b[hint.i] <= q < b[hint.j]:
            raise ValueError(f"query {q} outside hint range [{b[hint.i]}, {b[hint.j]})")
        c = hint.center
        if b[c] <= q < b[c + 1]:
            return c, 1
        if q < b[c]:
            v, visits = self._descend(hint.left, q)
        else:
            v, visits = self._descend(hint.right, q)
        return v, visits + 1

    # -- verification helpers -------------------------------------------------

    def subtree_spans(self) -> list[tuple[int, int, int]]:
        """(node, own span, subtree span) triples, for the halving invariant."""
        lo = list(range(self.m))
        hi = [i + 1 for i in range(self.m)]
        order = []
        stack = [self.root]
        while stack:
            v = stack.pop()
            if v < 0:
                continue
            order.append(v)
            stack.append(self.left[v])
            stack.append(self.right[v])
        b = self.boundaries
        for v in reversed(order):
            for ch in (self.left[v], self.right[v]):
                if ch >= 0:
                    lo[v] = min(lo[v], lo[ch])
                    hi[v] = max(hi[v], hi[ch])
        return [(v, b[v + 1] - b[v], b[hi[v]] - b[lo[v]]) for v in range(self.m)]
