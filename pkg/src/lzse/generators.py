"""Generators for adversarial string families and synthetic corpora.

The ORSP family encodes range-sum queries as a token string whose greedy
LZSE factorization has exactly 3m+1 factors; the lower-bound family over
{a, b} separates the greedy factorization (2m^2 - 2m + 7 factors) from a
smaller hand-built one (m^2 + 6 factors).
"""

from __future__ import annotations

import random
from typing import NamedTuple

from .factorization import Char, Copy, Factorization
from .text import Text


class OrspInstance(NamedTuple):
    m: int
    queries: list[tuple[int, int]]
    text: Text  # tokens: x_k -> k-1 (k = 1..m), $_i -> m+i-1 (i = 1..m+1)

    def is_delimiter(self, sym: int) -> bool:
        return sym >= self.m


def gen_orsp(m: int, queries: list[tuple[int, int]] | None = None,
             seed: int | None = None) -> OrspInstance:
    """Token text x_1..x_m $_1 Q_1 $_2 ... $_m Q_m $_{m+1} with Q_i = x_{l_i}..x_{r_i}."""
    if m < 1:
        raise ValueError("m must be at least 1")
    if queries is None:
        rng = random.Random(seed)
        queries = []
        for _ in range(m):
            l = rng.randint(1, m)
            queries.append((l, rng.randint(l, m)))
    else:
        queries = [tuple(q) for q in queries]
        if len(queries) != m:
            raise ValueError(f"expected {m} queries, got {len(queries)}")
        for l, r in queries:
            if not 1 <= l <= r <= m:
                raise ValueError(f"query ({l}, {r}) out of range 1..{m}")
    tokens = list(range(m))
    for i, (l, r) in enumerate(queries):
        tokens.append(m + i)
        tokens.extend(range(l - 1, r))
    tokens.append(2 * m)
    return OrspInstance(m, queries, Text(tokens, alphabet_size=2 * m + 1))


class LowerBoundFamily(NamedTuple):
    m: int
    text: Text
    alternative: Factorization  # valid non-greedy parse with m^2 + 6 factors


def gen_lower_bound_family(m: int) -> LowerBoundFamily:
    """Binary string T_{m-1,m-1} with its small alternative factorization.

    The text is A B followed by the blocks A_i b^(2^(j+1)) b for
    i, j = 1..m-1, where A = a^(2^(m+1)), B = b^(2^(m+1)) b and A_i is the
    suffix a^(2^(m-i+1)) ... a^(2^m) of A's doubling parse.  The
    alternative parse splits B as b|b|b|b^2|...|b^(2^m) so each appended
    block is a single copy of the contiguous run from a^(2^(m-i+1))
    through b^(2^(j+1)+1) worth of factors.
    """
    if m < 2:
        raise ValueError("m must be at least 2")
    a, b = ord("a"), ord("b")
    symbols = [a] * (1 << (m + 1)) + [b] * ((1 << (m + 1)) + 1)
    # alternative parse of A B: a|a|a^2|...|a^(2^m)|b|b|b|b^2|...|b^(2^m)
    factors: list[Char | Copy] = [Char(a), Copy(1, 1)]
    for k in range(1, m + 1):
        factors.append(Copy(1, k + 1))  # a^(2^k) copies everything so far
    factors.extend([Char(b), Copy(m + 3, 1), Copy(m + 3, 1)])
    for k in range(1, m + 1):
        factors.append(Copy(m + 4, k + 1))  # b^(2^k) = b, b, b^2, ..., b^(2^(k-1))
    for i in range(1, m):
        for j in range(1, m):
            run = [a] * ((1 << (m + 1)) - (1 << (m - i + 1)))
            run += [b] * ((1 << (j + 1)) + 1)
            symbols.extend(run)
            # contiguous factors: a^(2^(m-i+1)) .. a^(2^m), b, b, b, b^2 .. b^(2^j)
            start = m - i + 3
            factors.append(Copy(start, i + j + 3))
    text = Text(symbols)
    alternative = Factorization(factors, len(symbols))
    return LowerBoundFamily(m, text, alternative)


def gen_unary(n: int, symbol: int = ord("a")) -> Text:
    if n < 0:
        raise ValueError("n must be non-negative")
    return Text([symbol] * n)


def gen_random(n: int, sigma: int, seed: int) -> Text:
    if n < 0 or sigma < 1:
        raise ValueError("need n >= 0 and sigma >= 1")
    rng = random.Random(seed)
    alphabet = 256 if sigma <= 256 else 1 << 32
    return Text([rng.randrange(sigma) for _ in range(n)], alphabet)


def gen_periodic(pattern, reps: int) -> Text:
    if reps < 0:
        raise ValueError("reps must be non-negative")
    if isinstance(pattern, str):
        pattern = pattern.encode("latin-1")
    syms = list(pattern) * reps
    alphabet = 256 if all(s < 256 for s in syms) else 1 << 32
    return Text(syms, alphabet)
