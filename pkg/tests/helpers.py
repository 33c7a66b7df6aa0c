"""Shared brute-force oracles and fixture generators for the test suite.

Everything here is deliberately independent of the library's fast paths:
suffix sorting by direct string comparison, LCP by character scan, path
counting by exhaustive enumeration, and random-but-valid factorizations
built factor by factor.
"""

from __future__ import annotations

import random

from lzse.factorization import Char, Copy, Factorization
from lzse.text import Text


def brute_suffix_sort(text: Text) -> list[int]:
    """1-based suffix start positions in lexicographic order."""
    n = len(text)
    return sorted(range(1, n + 1), key=lambda p: text.symbols[p - 1:])


def brute_lcp(text: Text, p: int, q: int) -> int:
    """Longest common prefix of suffixes at 1-based p, q by direct scan."""
    n = len(text)
    d = 0
    while p + d <= n and q + d <= n and text[p + d - 1] == text[q + d - 1]:
        d += 1
    return d


def dag_children(fact: Factorization) -> list[list[int]]:
    """children[i] for factor i (1-based; index 0 unused)."""
    out: list[list[int]] = [[] for _ in range(fact.z + 1)]
    for i, f in enumerate(fact.factors, start=1):
        if isinstance(f, Copy):
            out[i] = list(range(f.start, f.start + f.count))
    return out


def brute_path_counts(fact: Factorization) -> tuple[list[int], list[int], int]:
    """(s, e, nD) by exhaustively enumerating paths, no sharing or memoing."""
    z = fact.z
    children = dag_children(fact)

    def paths_down(v: int) -> int:
        if not children[v]:
            return 1
        return sum(paths_down(c) for c in children[v])

    s = [paths_down(v) for v in range(1, z + 1)]
    e = [0] * (z + 1)
    has_incoming = [False] * (z + 1)
    for i in range(1, z + 1):
        for c in children[i]:
            has_incoming[c] = True

    def walk(v: int) -> None:
        e[v] += 1
        for c in children[v]:
            walk(c)

    n_d = 0
    for v in range(1, z + 1):
        if not has_incoming[v]:
            walk(v)
            n_d += s[v - 1]
    return s, e[1:], n_d


def random_valid_factorization(rng: random.Random, max_z: int = 60,
                               sigma: int | None = None,
                               copy_bias: float = 0.55) -> Factorization:
    """Random well-formed LZSE factorization (text defined by decoding it)."""
    sigma = sigma or rng.choice([2, 3, 4])
    z = rng.randint(1, max_z)
    factors: list[Char | Copy] = []
    for _ in range(z):
        k = len(factors)
        if k == 0 or rng.random() > copy_bias:
            factors.append(Char(rng.randrange(sigma)))
        else:
            l = rng.randint(1, k)
            r = rng.randint(l, min(k, l + 7))
            factors.append(Copy(l, r - l + 1))
    return Factorization(factors)


def random_text(rng: random.Random, n: int, sigma: int) -> Text:
    return Text(bytes(rng.randrange(sigma) for _ in range(n)))


def factor_string(fact: Factorization, text: Text, i: int) -> tuple[int, ...]:
    return text.symbols[fact.pos_l(i) - 1: fact.pos_r(i)]


def all_binary_texts(max_len: int):
    for n in range(1, max_len + 1):
        for mask in range(1 << n):
            yield Text(bytes((mask >> k) & 1 for k in range(n)))
