"""Binary archive format for LZSE factorizations.

Layout: magic "LZSE", version byte 0x01, mode byte (0 = byte alphabet,
1 = 32-bit tokens), varint n, varint z, then one record per factor.
A record starts with varint v: v = 0 introduces a char factor followed by
its symbol (one byte in byte mode, varint in token mode); v >= 1 is a copy
factor with k = v referenced factors, followed by varint d = i - l >= 1,
the back-distance from the factor's own index to its start factor.
Varints are unsigned LEB128.
"""

from __future__ import annotations

from .factorization import Char, Copy, Factorization
from .text import BYTE_ALPHABET, TOKEN_ALPHABET, Text

MAGIC = b"LZSE"
VERSION = 1
MODE_BYTE = 0
MODE_TOKEN = 1


class ArchiveError(ValueError):
    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (at byte {offset})"
        super().__init__(message)
        self.offset = offset


def write_varint(out: bytearray, value: int) -> None:
    if value < 0:
        raise ArchiveError(f"cannot encode negative value {value}")
    while True:
        b = value & 0x7F
        value >>= 7
        if value:
            out.append(b | 0x80)
        else:
            out.append(b)
            return


def read_varint(data: bytes, pos: int) -> tuple[int, int]:
    value = 0
    shift = 0
    start = pos
    while True:
        if pos >= len(data):
            raise ArchiveError("truncated varint", start)
        b = data[pos]
        pos += 1
        value |= (b & 0x7F) << shift
        if not b & 0x80:
            return value, pos
        shift += 7
        if shift > 63:
            raise ArchiveError("varint too long", start)


def serialize(fact: Factorization) -> bytes:
    mode = MODE_BYTE if fact.alphabet_size <= BYTE_ALPHABET else MODE_TOKEN
    out = bytearray(MAGIC)
    out.append(VERSION)
    out.append(mode)
    write_varint(out, fact.n)
    write_varint(out, fact.z)
    for i, f in enumerate(fact.factors, start=1):
        if isinstance(f, Char):
            write_varint(out, 0)
            if mode == MODE_BYTE:
                if not 0 <= f.symbol < 256:
                    raise ArchiveError(f"factor {i}: symbol {f.symbol} not a byte")
                out.append(f.symbol)
            else:
                write_varint(out, f.symbol)
        else:
            write_varint(out, f.count)
            write_varint(out, i - f.start)
    return bytes(out)


def deserialize(data: bytes) -> Factorization:
    if data[:4] != MAGIC:
        raise ArchiveError("bad magic", 0)
    if len(data) < 6:
        raise ArchiveError("truncated header", len(data))
    if data[4] != VERSION:
        raise ArchiveError(f"unsupported version {data[4]}", 4)
    mode = data[5]
    if mode not in (MODE_BYTE, MODE_TOKEN):
        raise ArchiveError(f"unknown mode byte {mode}", 5)
    pos = 6
    n, pos = read_varint(data, pos)
    z, pos = read_varint(data, pos)
    factors: list[Char | Copy] = []
    for i in range(1, z + 1):
        record_at = pos
        v, pos = read_varint(data, pos)
        if v == 0:
            if mode == MODE_BYTE:
                if pos >= len(data):
                    raise ArchiveError(f"factor {i}: truncated symbol", pos)
                sym = data[pos]
                pos += 1
            else:
                sym, pos = read_varint(data, pos)
            factors.append(Char(sym))
        else:
            d, pos = read_varint(data, pos)
            if d < 1 or d >= i:
                raise ArchiveError(f"factor {i}: bad back-distance {d}", record_at)
            factors.append(Copy(i - d, v))
    if pos != len(data):
        raise ArchiveError(f"{len(data) - pos} trailing bytes", pos)
    alphabet = BYTE_ALPHABET if mode == MODE_BYTE else TOKEN_ALPHABET
    try:
        fact = Factorization(factors, n, alphabet_size=alphabet)
    except ValueError as ex:
        raise ArchiveError(str(ex)) from ex
    return fact


# token texts on disk: magic, version, varint count, then 32-bit LE tokens
TOKEN_MAGIC = b"LZTK"


def write_token_text(text: Text) -> bytes:
    out = bytearray(TOKEN_MAGIC)
    out.append(1)
    write_varint(out, len(text))
    for sym in text.symbols:
        out.extend(sym.to_bytes(4, "little"))
    return bytes(out)


def read_token_text(data: bytes) -> Text:
    if data[:4] != TOKEN_MAGIC:
        raise ArchiveError("bad token-text magic", 0)
    if len(data) < 5 or data[4] != 1:
        raise ArchiveError("unsupported token-text version", 4)
    count, pos = read_varint(data, 5)
    if len(data) - pos != 4 * count:
        raise ArchiveError(f"expected {4 * count} token bytes", pos)
    syms = [int.from_bytes(data[pos + 4 * t: pos + 4 * t + 4], "little")
            for t in range(count)]
    return Text(syms, TOKEN_ALPHABET)
