"""Symbol sequences over byte or token alphabets."""

from __future__ import annotations

BYTE_ALPHABET = 256
TOKEN_ALPHABET = 1 << 32


class Text:
    """Immutable sequence of non-negative integer symbols.

    Byte mode uses symbols 0..255; token mode allows 32-bit symbols for
    large alphabets.  Sequence indexing is the usual 0-based Python kind;
    the 1-based positions used by factorization APIs are documented at
    their call sites.
    """

    __slots__ = ("symbols", "alphabet_size")

    def __init__(self, symbols, alphabet_size: int = BYTE_ALPHABET):
        syms = tuple(symbols)
        for s in syms:
            if not 0 <= s < alphabet_size:
                raise ValueError(f"symbol {s} out of range for alphabet {alphabet_size}")
        object.__setattr__(self, "symbols", syms)
        object.__setattr__(self, "alphabet_size", alphabet_size)

    def __setattr__(self, name, value):
        raise AttributeError("Text is immutable")

    @classmethod
    def from_bytes(cls, data: bytes) -> "Text":
        return cls(data, BYTE_ALPHABET)

    @classmethod
    def from_str(cls, s: str) -> "Text":
        return cls.from_bytes(s.encode("latin-1"))

    @classmethod
    def from_tokens(cls, tokens) -> "Text":
        return cls(tokens, TOKEN_ALPHABET)

    def to_bytes(self) -> bytes:
        if self.alphabet_size > BYTE_ALPHABET:
            raise ValueError("token-mode text cannot be rendered as bytes")
        return bytes(self.symbols)

    def to_str(self) -> str:
        return self.to_bytes().decode("latin-1")

    @property
    def is_byte_mode(self) -> bool:
        return self.alphabet_size <= BYTE_ALPHABET

    def __len__(self) -> int:
        return len(self.symbols)

    def __getitem__(self, i):
        return self.symbols[i]

    def __iter__(self):
        return iter(self.symbols)

    def __eq__(self, other) -> bool:
        return isinstance(other, Text) and self.symbols == other.symbols

    def __hash__(self) -> int:
        return hash(self.symbols)

    def __repr__(self) -> str:
        if self.is_byte_mode and len(self) <= 40:
            return f"Text({self.to_str()!r})"
        return f"Text(<{len(self)} symbols, alphabet={self.alphabet_size}>)"
