"""Derivation DAG path counts, heavy-edge selection and heavy paths.

The derivation DAG of an LZSE factorization has an edge from each copy
factor to every factor inside its source range, children ordered left to
right.  s_i counts paths from factor i down to sinks, e_i counts paths
from sources down to factor i; their floor-log brackets decide which
edges are heavy.  Heavy edges form vertex-disjoint paths and any
source-to-sink path crosses at most 2*lg(nD) light edges.
"""

from __future__ import annotations

from .factorization import Copy, Factorization
from .suffixindex import RangeArgMin


def compute_path_counts(fact: Factorization) -> tuple[list[int], list[int], int]:
    """(s, e, nD): per-factor path counts and the number of maximal paths.

    s is filled in increasing index order through a running prefix-sum
    array (copy ranges only reference earlier indices); e in decreasing
    order with activation/cancellation events at range ends so each e_i
    is final before it is distributed.  Nodes that receive nothing are
    sources and get e_i = 1.  Total work is linear in z.
    """
    z = fact.z
    s = [0] * z
    prefix = [0] * (z + 1)
    for i, f in enumerate(fact.factors):
        if isinstance(f, Copy):
            s[i] = prefix[f.start + f.count - 1] - prefix[f.start - 1]
        else:
            s[i] = 1
        prefix[i + 1] = prefix[i] + s[i]

    e = [0] * z
    activate = [0] * (z + 1)   # contribution starts applying at index r
    cancel = [0] * (z + 1)     # contribution stops applying at index l - 1
    acc = 0
    n_d = 0
    for i in range(z, 0, -1):
        acc += activate[i] - cancel[i]
        ei = e[i - 1] = acc if acc else 1
        if acc == 0:
            n_d += s[i - 1]  # no incoming edge: a source node
        f = fact.factors[i - 1]
        if isinstance(f, Copy):
            activate[f.start + f.count - 1] += ei
            if f.start >= 2:
                cancel[f.start - 1] += ei
    return s, e, n_d


def select_heavy_edges(fact: Factorization, s: list[int], e: list[int]) -> list[int]:
    """heavy_child[i-1] = child index of factor i's heavy edge, or 0 for none.

    The candidate child of a copy factor over [l, r] is the range argmax of
    s (smallest index on ties); the edge is heavy iff both floor-log pairs
    agree: lg(s) bracket and lg(e) bracket.
    """
    z = fact.z
    heavy = [0] * z
    if z == 0:
        return heavy
    rmq = RangeArgMin([-x for x in s])  # argmax with leftmost tie-break
    for i, f in enumerate(fact.factors):
        if not isinstance(f, Copy):
            continue
        l = f.start
        r = f.start + f.count - 1
        j = rmq.argmin(l - 1, r - 1) + 1
        if (s[i].bit_length() == s[j - 1].bit_length()
                and e[i].bit_length() == e[j - 1].bit_length()):
            heavy[i] = j
    return heavy


class HeavyPathDecomposition:
    """Disjoint heavy paths covering every factor, with a locator per factor."""

    __slots__ = ("paths", "locator", "heavy_child")

    def __init__(self, paths: list[list[int]], locator: list[tuple[int, int]],
                 heavy_child: list[int]):
        self.paths = paths
        self.locator = locator  # factor i -> (path id, 1-based position)
        self.heavy_child = heavy_child

    def path_of(self, i: int) -> tuple[int, int]:
        return self.locator[i - 1]


def heavy_paths(fact: Factorization, heavy_child: list[int]) -> HeavyPathDecomposition:
    """Maximal chains under heavy_child; every factor lands in exactly one path."""
    z = fact.z
    incoming = [0] * (z + 1)
    for i in range(1, z + 1):
        j = heavy_child[i - 1]
        if j:
            if incoming[j]:
                raise RuntimeError(f"factor {j} has two incoming heavy edges")
            incoming[j] = i
    paths: list[list[int]] = []
    locator: list[tuple[int, int]] = [(0, 0)] * z
    for i in range(1, z + 1):
        if incoming[i]:
            continue
        path = []
        v = i
        while v:
            path.append(v)
            locator[v - 1] = (len(paths), len(path))
            v = heavy_child[v - 1]
        paths.append(path)
    assert sum(len(p) for p in paths) == z
    return HeavyPathDecomposition(paths, locator, heavy_child)


def max_light_edges_on_path(fact: Factorization, decomposition: HeavyPathDecomposition) -> int:
    """Maximum number of light edges on any path through the derivation DAG."""
    z = fact.z
    heavy_child = decomposition.heavy_child
    ml = [0] * (z + 1)
    best = 0
    for i in range(1, z + 1):
        f = fact.factors[i - 1]
        if isinstance(f, Copy):
            v = 0
            for j in range(f.start, f.start + f.count):
                v = max(v, ml[j] + (0 if heavy_child[i - 1] == j else 1))
            ml[i] = v
            best = max(best, v)
    return best
