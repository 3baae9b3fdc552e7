"""Monomial orders: lex, graded reverse lex, and block elimination orders.

An order exposes a sort key on exponent tuples; keys compare the same way
the monomials do, so `sorted(..., key=order.key, reverse=True)` lists terms
leading-first.
"""

from __future__ import annotations

from dataclasses import dataclass


def _grevlex_key(exponents: tuple[int, ...]) -> tuple[int, ...]:
    # deg first, then reversed negated exponents: the lexicographically larger
    # key is the grevlex-larger monomial.
    return (sum(exponents), *(-e for e in reversed(exponents)))


@dataclass(frozen=True)
class TermOrder:
    """kind is 'lex', 'grevlex', or 'elimination'; block is the size of the
    leading variable block for elimination orders (grevlex within each block)."""

    kind: str = "grevlex"
    block: int = 0

    @staticmethod
    def lex() -> "TermOrder":
        return TermOrder("lex")

    @staticmethod
    def grevlex() -> "TermOrder":
        return TermOrder("grevlex")

    @staticmethod
    def elimination(block: int) -> "TermOrder":
        if block < 0:
            raise ValueError("elimination block size must be >= 0")
        return TermOrder("elimination", block)

    def key(self, exponents: tuple[int, ...]) -> tuple[int, ...]:
        if self.kind == "grevlex":
            return _grevlex_key(exponents)
        if self.kind == "lex":
            return exponents
        if self.kind == "elimination":
            head = exponents[: self.block]
            tail = exponents[self.block:]
            return _grevlex_key(head) + _grevlex_key(tail)
        raise ValueError(f"unknown term order kind {self.kind!r}")

    def compare(self, a: tuple[int, ...], b: tuple[int, ...]) -> int:
        """-1, 0, or 1 as the monomial a is smaller than, equal to, or larger than b."""
        ka, kb = self.key(a), self.key(b)
        if ka < kb:
            return -1
        if ka > kb:
            return 1
        return 0

    def __str__(self) -> str:
        if self.kind == "elimination":
            return f"elimination({self.block})"
        return self.kind
