"""LZ77/LZSS baselines, field-stream extraction and zeroth-order entropy.

The baselines parse greedily with longest-previous-factor matches found
through the suffix array (nearest smaller positions above and below in
rank order maximize the LCP); sources may be any earlier text position
and may self-overlap.  Field streams split each representation into the
symbol groups whose empirical entropies the size report accounts.
"""

from __future__ import annotations

import math
from collections import Counter
from typing import NamedTuple

from .factorization import Char, Copy, Factorization
from .grammar import Cfg, grammar_to_lzse, repair_compress
from .suffixindex import SuffixIndex, build_suffix_index
from .text import Text


class Lz77Factor(NamedTuple):
    src: int      # 1-based source position, 0 when length == 0
    length: int   # copied characters
    next_sym: int # literal following the copied substring


class LzssFactor(NamedTuple):
    src: int      # 1-based source position, 0 for a literal
    length: int   # copied characters, 0 for a literal
    sym: int      # literal symbol, -1 for a copy


def _smaller_neighbors(sa: list[int]) -> tuple[list[int], list[int]]:
    """Per rank, the nearest rank above/below holding a smaller position."""
    n = len(sa)
    psv = [-1] * n
    nsv = [-1] * n
    stack: list[int] = []
    for r in range(n):
        while stack and sa[stack[-1]] > sa[r]:
            stack.pop()
        psv[r] = stack[-1] if stack else -1
        stack.append(r)
    stack = []
    for r in range(n - 1, -1, -1):
        while stack and sa[stack[-1]] > sa[r]:
            stack.pop()
        nsv[r] = stack[-1] if stack else -1
        stack.append(r)
    return psv, nsv


class _Lpf:
    """Longest-previous-factor queries: nearest smaller positions in rank
    order are the LCP-maximizing earlier occurrences; ties between the two
    candidates go to the smaller source position."""

    __slots__ = ("idx", "psv", "nsv")

    def __init__(self, idx: SuffixIndex):
        self.idx = idx
        self.psv, self.nsv = _smaller_neighbors(idx.sa)

    def longest_previous(self, i: int) -> tuple[int, int]:
        idx = self.idx
        r = idx.isa[i - 1]
        best_src, best_len = 0, 0
        j = self.psv[r]
        if j >= 0:
            length = idx.rmq.min(j + 1, r)
            if length > 0:
                best_src, best_len = idx.sa[j], length
        j = self.nsv[r]
        if j >= 0:
            length = idx.rmq.min(r + 1, j)
            if length > best_len or (length == best_len and 0 < idx.sa[j] < best_src):
                if length > 0:
                    best_src, best_len = idx.sa[j], length
        return best_src, best_len


def lz77_factorize(text: Text, idx: SuffixIndex | None = None) -> list[Lz77Factor]:
    """Greedy LZ77 triples (source, length, next char); length 0 for fresh chars."""
    n = len(text)
    if idx is None:
        idx = build_suffix_index(text)
    lpf = _Lpf(idx) if n else None
    out: list[Lz77Factor] = []
    i = 1
    while i <= n:
        src, length = lpf.longest_previous(i)
        if length > n - i:
            length = n - i  # keep one character for the mandatory literal
        if length == 0:
            out.append(Lz77Factor(0, 0, text[i - 1]))
            i += 1
        else:
            out.append(Lz77Factor(src, length, text[i + length - 1]))
            i += length + 1
    return out


def lzss_factorize(text: Text, idx: SuffixIndex | None = None) -> list[LzssFactor]:
    """Greedy LZSS: literals and (source, length) copies, overlap allowed."""
    n = len(text)
    if idx is None:
        idx = build_suffix_index(text)
    lpf = _Lpf(idx) if n else None
    out: list[LzssFactor] = []
    i = 1
    while i <= n:
        src, length = lpf.longest_previous(i)
        if length > n - i + 1:
            length = n - i + 1
        if length == 0:
            out.append(LzssFactor(0, 0, text[i - 1]))
            i += 1
        else:
            out.append(LzssFactor(src, length, -1))
            i += length
    return out


def lz77_decode(factors: list[Lz77Factor], alphabet_size: int = 256) -> Text:
    out: list[int] = []
    for f in factors:
        for k in range(f.length):
            out.append(out[f.src - 1 + k])
        out.append(f.next_sym)
    return Text(out, alphabet_size)


def lzss_decode(factors: list[LzssFactor], alphabet_size: int = 256) -> Text:
    out: list[int] = []
    for f in factors:
        if f.length == 0:
            out.append(f.sym)
        else:
            for k in range(f.length):
                out.append(out[f.src - 1 + k])
    return Text(out, alphabet_size)


def h0(stream) -> float:
    """Zeroth-order empirical entropy in bits per symbol; 0 for empty input."""
    counts = Counter(stream)
    total = sum(counts.values())
    if total == 0:
        return 0.0
    val = -sum(c / total * math.log2(c / total) for c in counts.values())
    return val if val else 0.0  # avoid -0.0 for single-symbol streams


class FieldStreams(NamedTuple):
    method: str
    streams: dict[str, list]

    def counts(self) -> dict[str, int]:
        return {name: len(vals) for name, vals in self.streams.items()}


def extract_field_streams(method: str, artifact) -> FieldStreams:
    """Split a method's output into its per-field symbol streams.

    lzse and repair-se report copy sources as start factor indices and
    lengths as referenced-factor counts; lz77/lzss use text offsets and
    character counts; repair reports left-hand symbols, right-hand symbols
    and the start rule's children separately.
    """
    if method in ("lzse", "repair-se"):
        if method == "repair-se":
            if not isinstance(artifact, Cfg):
                raise TypeError("repair-se expects a grammar")
            artifact = grammar_to_lzse(artifact)
        if not isinstance(artifact, Factorization):
            raise TypeError("lzse expects a Factorization")
        flags, literals, sources, lengths = [], [], [], []
        for f in artifact.factors:
            if isinstance(f, Char):
                flags.append(0)
                literals.append(f.symbol)
            else:
                flags.append(1)
                sources.append(f.start)
                lengths.append(f.count)
        return FieldStreams(method, {"flag": flags, "literal": literals,
                                     "source": sources, "length": lengths})
    if method == "lz77":
        if not (isinstance(artifact, list)
                and all(isinstance(f, Lz77Factor) for f in artifact)):
            raise TypeError("lz77 expects Lz77Factor list")
        return FieldStreams(method, {
            "source": [f.src for f in artifact if f.length > 0],
            "length": [f.length for f in artifact],
            "next_char": [f.next_sym for f in artifact],
        })
    if method == "lzss":
        if not (isinstance(artifact, list)
                and all(isinstance(f, LzssFactor) for f in artifact)):
            raise TypeError("lzss expects LzssFactor list")
        return FieldStreams(method, {
            "flag": [0 if f.length == 0 else 1 for f in artifact],
            "literal": [f.sym for f in artifact if f.length == 0],
            "source": [f.src for f in artifact if f.length > 0],
            "length": [f.length for f in artifact if f.length > 0],
        })
    if method == "repair":
        if not isinstance(artifact, Cfg):
            raise TypeError("repair expects a grammar")
        lhs = [x for x in artifact.rules if x != artifact.start]
        rhs = [s for x in lhs for s in artifact.rules[x]]
        return FieldStreams(method, {
            "left_hand": lhs,
            "right_hand": rhs,
            "start_children": list(artifact.rules[artifact.start]),
        })
    raise ValueError(f"unknown method {method!r}")


METHODS = ("lz77", "lzss", "lzse", "repair", "repair-se")


def _method_artifact(method: str, text: Text, idx: SuffixIndex,
                     repair_grammar: Cfg | None):
    from .greedy import greedy_factorize
    if method == "lz77":
        return lz77_factorize(text, idx)
    if method == "lzss":
        return lzss_factorize(text, idx)
    if method == "lzse":
        return greedy_factorize(text, idx)
    if method in ("repair", "repair-se"):
        return repair_grammar
    raise ValueError(f"unknown method {method!r}")


def size_report(methods, text: Text, idx: SuffixIndex | None = None,
                max_workers: int | None = None) -> dict:
    """Per-method factor counts, per-stream entropies and total bit costs.

    total_bits sums H0(stream) * |stream| over every reported stream; char
    factors therefore pay through the flag and literal streams, which the
    report keeps separate so source/length/next_char columns can be read
    off directly.
    """
    methods = list(methods)
    for m in methods:
        if m not in METHODS:
            raise ValueError(f"unknown method {m!r}")
    if idx is None and any(m in ("lz77", "lzss", "lzse") for m in methods):
        idx = build_suffix_index(text)
    repair_grammar = None
    if any(m in ("repair", "repair-se") for m in methods):
        repair_grammar = repair_compress(text)

    def one(method: str) -> tuple[str, dict]:
        artifact = _method_artifact(method, text, idx, repair_grammar)
        fs = extract_field_streams(method, artifact)
        entry: dict = {}
        if method in ("lzse", "repair-se"):
            fact = artifact if isinstance(artifact, Factorization) else grammar_to_lzse(artifact)
            entry["factors"] = fact.z
            entry["copy_factors"] = sum(1 for f in fact.factors if isinstance(f, Copy))
        elif method in ("lz77", "lzss"):
            entry["factors"] = len(artifact)
            entry["copy_factors"] = sum(1 for f in artifact if f.length > 0)
        else:
            entry["rules"] = len(artifact.rules)
            entry["grammar_size"] = artifact.size
        streams = {}
        total_bits = 0.0
        for name, vals in fs.streams.items():
            bits_per = h0(vals)
            streams[name] = {"count": len(vals), "h0": bits_per,
                             "bits": bits_per * len(vals)}
            total_bits += bits_per * len(vals)
        entry["streams"] = streams
        entry["total_bits"] = total_bits
        return method, entry

    if max_workers is not None and max_workers > 1 and len(methods) > 1:
        from concurrent.futures import ThreadPoolExecutor
        with ThreadPoolExecutor(max_workers=max_workers) as pool:
            results = dict(pool.map(one, methods))
    else:
        results = dict(one(m) for m in methods)
    report = {"n": len(text), "methods": {m: results[m] for m in methods}}
    if repair_grammar is not None and "repair-se" in methods and "repair" in methods:
        report["repair_se_factors_le_repair_size"] = (
            results["repair-se"].get("factors", 0) <= repair_grammar.size)
    return report
