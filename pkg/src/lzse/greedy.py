"""Greedy LZSE parsing: trie-based practical parser and brute-force oracle.

Both parsers scan left to right and take the longest prefix of the unparsed
suffix that equals a contiguous run of existing factors, breaking length
ties by the leftmost source start.  When no run matches, a char factor is
emitted.  The two implementations must agree factor-for-factor, sources
included; the oracle enumerates every candidate start, the practical parser
only the starts marked in the extended-factor trie.
"""

from __future__ import annotations

from bisect import bisect_right

from .factorization import Char, Copy, Factorization
from .suffixindex import SuffixIndex, build_suffix_index
from .text import Text


class _Trie:
    """Symbol-keyed trie over extended factors.

    Each node carries at most two marks (factor index, factor start
    position); more would contradict the at-most-twice property of
    extended factors, so a third mark raises.
    """

    __slots__ = ("children", "marks")

    def __init__(self):
        self.children: list[dict[int, int]] = [{}]
        self.marks: list[list[tuple[int, int]] | None] = [None]

    def insert(self, syms, lo: int, hi: int, mark: tuple[int, int]) -> None:
        children = self.children
        v = 0
        for t in range(lo, hi):
            c = syms[t]
            nxt = children[v].get(c)
            if nxt is None:
                nxt = len(children)
                children[v][c] = nxt
                children.append({})
                self.marks.append(None)
            v = nxt
        if self.marks[v] is None:
            self.marks[v] = [mark]
        else:
            if len(self.marks[v]) >= 2:
                raise RuntimeError("more than two marks on a trie node")
            self.marks[v].append(mark)

    def contains_marked(self, syms, lo: int, hi: int) -> bool:
        children = self.children
        v = 0
        for t in range(lo, hi):
            v = children[v].get(syms[t])
            if v is None:
                return False
        return self.marks[v] is not None


def greedy_factorize(text: Text, idx: SuffixIndex | None = None) -> Factorization:
    """Greedy LZSE factorization via the extended-factor trie.

    Candidate starts come from trie marks on the path matching the unparsed
    suffix; each is extended with one LCP query and truncated to whole
    factors.  The LCP is capped at the parsed prefix so a source can never
    overlap the factor being formed.
    """
    n = len(text)
    if n == 0:
        return Factorization([], 0, text.alphabet_size)
    if idx is None:
        idx = build_suffix_index(text)
    syms = text.symbols
    isa = idx.isa
    rmq_argmin = idx.rmq.argmin
    lcp_arr = idx.lcp

    factors: list[Char | Copy] = []
    bounds = [1]  # bounds[t] = pos_l of factor t+1
    trie = _Trie()
    deferred = 0  # factor awaiting its doubled extended factor, 0 = none
    p = 0  # symbols parsed so far
    while p < n:
        best_len = 0
        best_pos = n + 2
        best_start = best_end = 0
        children = trie.children
        marks = trie.marks
        v = 0
        depth = 0
        while p + depth < n:
            v = children[v].get(syms[p + depth])
            if v is None:
                break
            depth += 1
            node_marks = marks[v]
            if node_marks is None:
                continue
            for fi, fpos in node_marks:
                # lcp of suffixes p+1 and fpos, capped at the parsed prefix
                ra = isa[p]
                rb = isa[fpos - 1]
                if ra > rb:
                    ra, rb = rb, ra
                d = lcp_arr[rmq_argmin(ra + 1, rb)]
                cap = p - fpos + 1
                if d > cap:
                    d = cap
                j = bisect_right(bounds, fpos + d) - 1
                cand = bounds[j] - fpos
                if cand > best_len or (cand == best_len and fpos < best_pos):
                    best_len = cand
                    best_pos = fpos
                    best_start = fi
                    best_end = j
        if best_len == 0:
            factors.append(Char(syms[p]))
            flen = 1
        else:
            factors.append(Copy(best_start, best_end - best_start + 1))
            flen = best_len
        k = len(factors)
        bounds.append(bounds[-1] + flen)
        p += flen
        if deferred:
            dlo = bounds[deferred - 1] - 1
            trie.insert(syms, dlo, bounds[k] - 1, (deferred, dlo + 1))
            deferred = 0
        flo = bounds[k - 1] - 1
        if trie.contains_marked(syms, flo, bounds[k] - 1):
            deferred = k
        else:
            trie.insert(syms, flo, bounds[k] - 1, (k, flo + 1))
    return Factorization(factors, n, text.alphabet_size)


def greedy_factorize_oracle(text: Text) -> Factorization:
    """Reference greedy parser trying every existing factor as a source start.

    Quadratic per step and index-free: match lengths come from direct symbol
    comparison.  Used to pin down the practical parser's output exactly.
    """
    n = len(text)
    syms = text.symbols
    factors: list[Char | Copy] = []
    bounds = [1]
    p = 0
    while p < n:
        best_len = 0
        best_pos = n + 2
        best_start = best_end = 0
        for fi in range(1, len(factors) + 1):
            fpos = bounds[fi - 1]
            cap = p - fpos + 1
            d = 0
            base = fpos - 1
            while d < cap and p + d < n and syms[p + d] == syms[base + d]:
                d += 1
            j = bisect_right(bounds, fpos + d) - 1
            if j < fi:
                continue
            cand = bounds[j] - fpos
            if cand > best_len or (cand == best_len and fpos < best_pos):
                best_len = cand
                best_pos = fpos
                best_start = fi
                best_end = j
        if best_len == 0:
            factors.append(Char(syms[p]))
            flen = 1
        else:
            factors.append(Copy(best_start, best_end - best_start + 1))
            flen = best_len
        bounds.append(bounds[-1] + flen)
        p += flen
    return Factorization(factors, n, text.alphabet_size)
