import math
import random

import pytest

from lzse.dag import (compute_path_counts, heavy_paths, max_light_edges_on_path,
                      select_heavy_edges)
from lzse.factorization import Char, Copy, Factorization

from helpers import brute_path_counts, random_valid_factorization

FIG = Factorization([Char(97), Char(98), Copy(1, 2), Copy(2, 2), Copy(1, 3)])
ABAB = Factorization([Char(97), Char(98), Copy(1, 2), Copy(3, 1)])


def test_path_counts_figure():
    s, e, nd = compute_path_counts(FIG)
    assert s == [1, 1, 2, 3, 4]
    assert e == [3, 4, 2, 1, 1]
    assert nd == 7 == s[3] + s[4] == e[0] + e[1]
    assert (s, e, nd) == brute_path_counts(FIG)


def test_path_counts_all_chars():
    f = Factorization([Char(c) for c in b"abc"])
    assert compute_path_counts(f) == ([1, 1, 1], [1, 1, 1], 3)


def test_path_counts_abab():
    s, e, nd = compute_path_counts(ABAB)
    assert s == [1, 1, 2, 2] and e == [1, 1, 1, 1] and nd == 2
    assert (s, e, nd) == brute_path_counts(ABAB)


def test_heavy_selection_abab():
    s, e, _ = compute_path_counts(ABAB)
    heavy = select_heavy_edges(ABAB, s, e)
    assert heavy == [0, 0, 0, 3]  # F4 -> F3 heavy, F3 -> F1 light


def test_heavy_selection_figure_all_light():
    s, e, _ = compute_path_counts(FIG)
    assert select_heavy_edges(FIG, s, e) == [0] * 5


def test_heavy_selection_char_only():
    f = Factorization([Char(0), Char(1)])
    s, e, _ = compute_path_counts(f)
    assert select_heavy_edges(f, s, e) == [0, 0]


def test_heavy_paths_abab():
    s, e, _ = compute_path_counts(ABAB)
    dec = heavy_paths(ABAB, select_heavy_edges(ABAB, s, e))
    assert sorted(map(tuple, dec.paths)) == [(1,), (2,), (4, 3)]
    pid, pos = dec.path_of(4)
    assert dec.paths[pid] == [4, 3] and pos == 1
    assert dec.path_of(3) == (pid, 2)


def test_heavy_paths_all_singletons():
    s, e, _ = compute_path_counts(FIG)
    dec = heavy_paths(FIG, select_heavy_edges(FIG, s, e))
    assert sorted(map(tuple, dec.paths)) == [(1,), (2,), (3,), (4,), (5,)]


def test_heavy_chain_of_three():
    # a | b | ab(1..2) | =F3 | =F4 : the three nested copies chain up
    f = Factorization([Char(97), Char(98), Copy(1, 2), Copy(3, 1), Copy(4, 1)])
    s, e, _ = compute_path_counts(f)
    heavy = select_heavy_edges(f, s, e)
    assert heavy == [0, 0, 0, 3, 4]
    dec = heavy_paths(f, heavy)
    assert [5, 4, 3] in dec.paths and len(dec.paths) == 3


def test_max_light_edges():
    char_only = Factorization([Char(0), Char(1)])
    s, e, _ = compute_path_counts(char_only)
    dec = heavy_paths(char_only, select_heavy_edges(char_only, s, e))
    assert max_light_edges_on_path(char_only, dec) == 0

    s, e, nd = compute_path_counts(ABAB)
    dec = heavy_paths(ABAB, select_heavy_edges(ABAB, s, e))
    assert max_light_edges_on_path(ABAB, dec) == 1
    assert 1 <= 2 * math.log2(nd)

    s, e, nd = compute_path_counts(FIG)
    dec = heavy_paths(FIG, select_heavy_edges(FIG, s, e))
    assert max_light_edges_on_path(FIG, dec) == 2
    assert 2 <= 2 * math.log2(nd)


def test_two_incoming_heavy_edges_rejected():
    f = Factorization([Char(0), Copy(1, 1), Copy(1, 1)])
    with pytest.raises(RuntimeError):
        heavy_paths(f, [0, 1, 1])  # deliberately corrupt heavy-child array


def test_random_counts_match_enumeration():
    rng = random.Random(4)
    for _ in range(250):
        fact = random_valid_factorization(rng, max_z=60)
        s, e, nd = compute_path_counts(fact)
        sb, eb, ndb = brute_path_counts(fact)
        assert s == sb and e == eb and nd == ndb
        heavy = select_heavy_edges(fact, s, e)
        dec = heavy_paths(fact, heavy)
        # vertex-disjoint cover
        seen = [False] * (fact.z + 1)
        for path in dec.paths:
            for v in path:
                assert not seen[v]
                seen[v] = True
        assert all(seen[1:])
        assert max_light_edges_on_path(fact, dec) <= 2 * math.log2(nd) + 1e-9
