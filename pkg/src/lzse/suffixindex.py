"""Suffix array, LCP array and range-minimum machinery.

Positions handed to :func:`lcp_suffixes` (and stored in ``sa``) are 1-based,
matching the factorization position model; ranks are 0-based.
"""

from __future__ import annotations

import numpy as np

from .text import Text


class RangeArgMin:
    """Sparse-table range-minimum structure returning the leftmost argmin."""

    __slots__ = ("values", "_tables")

    def __init__(self, values):
        arr = np.asarray(values, dtype=np.int64)
        self.values = arr
        n = len(arr)
        tables = []
        if n:
            idx = np.arange(n, dtype=np.int32)
            tables.append(idx)
            k = 1
            while (1 << k) <= n:
                prev = tables[-1]
                half = 1 << (k - 1)
                left = prev[: n - (1 << k) + 1]
                right = prev[half : half + len(left)]
                # <= keeps the smaller index on ties
                tables.append(np.where(arr[left] <= arr[right], left, right))
                k += 1
        self._tables = tables

    def argmin(self, lo: int, hi: int) -> int:
        """Index of the minimum over values[lo..hi] inclusive, leftmost on ties."""
        if lo > hi:
            raise ValueError(f"empty range [{lo}, {hi}]")
        if not 0 <= lo <= hi < len(self.values):
            raise ValueError(f"range [{lo}, {hi}] out of bounds")
        k = (hi - lo + 1).bit_length() - 1
        a = int(self._tables[k][lo])
        b = int(self._tables[k][hi - (1 << k) + 1])
        if self.values[a] <= self.values[b]:
            return a
        return b

    def min(self, lo: int, hi: int) -> int:
        return int(self.values[self.argmin(lo, hi)])


class SuffixIndex:
    """Suffix array over a text with LCP array and O(1) LCP range minima.

    sa[i] is the 1-based start of the rank-i suffix; isa[p-1] is the rank of
    the suffix starting at position p; lcp[i] is the common prefix length of
    the suffixes of ranks i-1 and i (lcp[0] = 0).
    """

    __slots__ = ("text", "n", "sa", "isa", "lcp", "rmq")

    def __init__(self, text: Text, sa, isa, lcp, rmq):
        self.text = text
        self.n = len(text)
        self.sa = sa
        self.isa = isa
        self.lcp = lcp
        self.rmq = rmq


def _sort_suffixes(symbols) -> np.ndarray:
    """0-based suffix array by prefix doubling over numpy lexsort."""
    n = len(symbols)
    if n == 0:
        return np.empty(0, dtype=np.int64)
    rank = np.asarray(symbols, dtype=np.int64)
    k = 1
    while True:
        # pad with -1 so shorter suffixes sort first
        shifted = np.full(n, -1, dtype=np.int64)
        if k < n:
            shifted[: n - k] = rank[k:]
        order = np.lexsort((shifted, rank))
        changed = np.empty(n, dtype=np.int64)
        changed[0] = 0
        changed[1:] = (rank[order][1:] != rank[order][:-1]) | (
            shifted[order][1:] != shifted[order][:-1]
        )
        new_rank = np.empty(n, dtype=np.int64)
        new_rank[order] = np.cumsum(changed)
        rank = new_rank
        if rank[order[-1]] == n - 1:
            return order
        k *= 2


def _kasai_lcp(symbols, sa0: np.ndarray, isa0) -> list[int]:
    n = len(symbols)
    lcp = [0] * n
    h = 0
    for p in range(n):
        r = isa0[p]
        if r == 0:
            h = 0
            continue
        q = sa0[r - 1]
        while p + h < n and q + h < n and symbols[p + h] == symbols[q + h]:
            h += 1
        lcp[r] = h
        if h:
            h -= 1
    return lcp


def build_suffix_index(text: Text) -> SuffixIndex:
    """Build the suffix array, inverse, LCP array and LCP range minima."""
    symbols = text.symbols
    n = len(symbols)
    if n == 0:
        return SuffixIndex(text, [], [], [], RangeArgMin([]))
    sa0 = _sort_suffixes(symbols)
    isa0 = [0] * n
    for r, p in enumerate(sa0):
        isa0[p] = r
    lcp = _kasai_lcp(symbols, sa0, isa0)
    sa = [int(p) + 1 for p in sa0]
    return SuffixIndex(text, sa, isa0, lcp, RangeArgMin(lcp))


def lcp_suffixes(idx: SuffixIndex, p: int, q: int) -> int:
    """Length of the longest common prefix of the suffixes at 1-based p and q."""
    n = idx.n
    if not (1 <= p <= n and 1 <= q <= n):
        raise ValueError(f"positions ({p}, {q}) out of range 1..{n}")
    if p == q:
        return n - p + 1
    rp = idx.isa[p - 1]
    rq = idx.isa[q - 1]
    if rp > rq:
        rp, rq = rq, rp
    return idx.rmq.min(rp + 1, rq)
