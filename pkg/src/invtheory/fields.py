"""Coefficient fields: the rationals and prime fields F_p.

Scalars are ordinary Python values -- `Fraction` over Q, `int` in [0, p)
over F_p -- and a `Field` instance supplies the arithmetic on them.  Keeping
scalars as plain values makes polynomials hashable and cheap to copy.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DivisorNotInvertible


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class Field:
    """Q when ``p`` is None, otherwise F_p with least non-negative scalars."""

    p: int | None = None

    def __post_init__(self) -> None:
        if self.p is not None and not _is_prime(self.p):
            raise ValueError(f"modulus {self.p} is not prime")

    # -- classification ----------------------------------------------------

    @property
    def is_rationals(self) -> bool:
        return self.p is None

    def characteristic(self) -> int:
        return 0 if self.p is None else self.p

    # -- constants and coercion --------------------------------------------

    def zero(self):
        return Fraction(0) if self.p is None else 0

    def one(self):
        return Fraction(1) if self.p is None else 1

    def coerce(self, value):
        """Turn an int, Fraction, or 'a/b' string into a scalar of this field."""
        if isinstance(value, str):
            text = value.strip()
            if "/" in text:
                num_text, den_text = text.split("/", 1)
                return self.from_pair(int(num_text), int(den_text))
            return self.from_pair(int(text), 1)
        if isinstance(value, bool):
            raise TypeError("bool is not a field scalar")
        if isinstance(value, int):
            return self.from_pair(value, 1)
        if isinstance(value, Fraction):
            return self.from_pair(value.numerator, value.denominator)
        raise TypeError(f"cannot coerce {value!r} into {self}")

    def from_pair(self, num: int, den: int):
        """The scalar num/den; raises DivisorNotInvertible when den has no inverse."""
        if self.p is None:
            if den == 0:
                raise DivisorNotInvertible("denominator 0 has no inverse in Q")
            return Fraction(num, den)
        den_mod = den % self.p
        if den_mod == 0:
            raise DivisorNotInvertible(f"denominator {den} is 0 mod {self.p}")
        return num * pow(den_mod, -1, self.p) % self.p

    # -- arithmetic ----------------------------------------------------------

    def add(self, a, b):
        return a + b if self.p is None else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.p is None else (a - b) % self.p

    def mul(self, a, b):
        return a * b if self.p is None else (a * b) % self.p

    def neg(self, a):
        return -a if self.p is None else (-a) % self.p

    def inv(self, a):
        if self.is_zero(a):
            raise DivisorNotInvertible("0 has no inverse")
        return 1 / a if self.p is None else pow(a, -1, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a) -> bool:
        return a == 0

    def to_str(self, a) -> str:
        return str(a)

    def __str__(self) -> str:
        return "QQ" if self.p is None else f"GF({self.p})"


QQ = Field()


def prime_field(p: int) -> Field:
    """The field with p elements, p prime."""
    return Field(p)
