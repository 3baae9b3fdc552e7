"""Univariate polynomials over Q and reduced rational functions in one
variable T.  Used for Molien series and Hilbert series arithmetic; everything
is exact Fraction arithmetic.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InexactDivision, ZeroDenominator


class UniPoly:
    """Dense univariate polynomial over Q; coefficients ascending in T."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    # -- constructors -----------------------------------------------------

    @staticmethod
    def zero() -> "UniPoly":
        return UniPoly()

    @staticmethod
    def one() -> "UniPoly":
        return UniPoly((1,))

    @staticmethod
    def constant(c) -> "UniPoly":
        return UniPoly((c,))

    @staticmethod
    def t_power(k: int) -> "UniPoly":
        return UniPoly((0,) * k + (1,))

    @staticmethod
    def one_minus_t_power(k: int) -> "UniPoly":
        """1 - T^k."""
        if k == 0:
            return UniPoly.zero()
        return UniPoly((1,) + (0,) * (k - 1) + (-1,))

    # -- inspection ---------------------------------------------------------

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __call__(self, value) -> Fraction:
        total = Fraction(0)
        for c in reversed(self.coeffs):
            total = total * value + c
        return total

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other: "UniPoly") -> "UniPoly":
        other = _as_unipoly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(
            (self.coefficient(i) + other.coefficient(i)) for i in range(n)
        )

    __radd__ = __add__

    def __neg__(self) -> "UniPoly":
        return UniPoly(-c for c in self.coeffs)

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-_as_unipoly(other))

    def __rsub__(self, other) -> "UniPoly":
        return _as_unipoly(other) - self

    def __mul__(self, other) -> "UniPoly":
        other = _as_unipoly(other)
        if self.is_zero() or other.is_zero():
            return UniPoly.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __divmod__(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        other = _as_unipoly(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        quo = [Fraction(0)] * max(0, len(rem) - len(other.coeffs) + 1)
        lead = other.coeffs[-1]
        d = other.degree()
        while len(rem) - 1 >= d and any(c != 0 for c in rem):
            while rem and rem[-1] == 0:
                rem.pop()
            if len(rem) - 1 < d:
                break
            shift = len(rem) - 1 - d
            factor = rem[-1] / lead
            quo[shift] = factor
            for j, b in enumerate(other.coeffs):
                rem[shift + j] -= factor * b
            rem.pop()
        return UniPoly(quo), UniPoly(rem)

    def exact_div(self, other: "UniPoly") -> "UniPoly":
        """Quotient when the division is exact; InexactDivision otherwise."""
        quo, rem = divmod(self, other)
        if not rem.is_zero():
            raise InexactDivision(f"({self}) is not divisible by ({other})")
        return quo

    def gcd(self, other: "UniPoly") -> "UniPoly":
        """Monic greatest common divisor."""
        a, b = self, _as_unipoly(other)
        while not b.is_zero():
            a, b = b, divmod(a, b)[1]
        if a.is_zero():
            return a
        return a * (1 / a.coeffs[-1])

    def __pow__(self, k: int) -> "UniPoly":
        if k < 0:
            raise ValueError("negative power")
        result = UniPoly.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == UniPoly.constant(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        pieces = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            text = str(c)
            negative = text.startswith("-")
            if negative:
                text = text[1:]
            if k == 0:
                body = text
            else:
                power = "T" if k == 1 else f"T^{k}"
                body = power if text == "1" else f"{text}*{power}"
            if not pieces:
                pieces.append(f"-{body}" if negative else body)
            else:
                pieces.append(f"-{body}" if negative else f"+{body}")
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"UniPoly({self})"


def _as_unipoly(value) -> UniPoly:
    if isinstance(value, UniPoly):
        return value
    if isinstance(value, (int, Fraction)):
        return UniPoly.constant(value)
    raise TypeError(f"cannot treat {value!r} as a univariate polynomial")


class RationalFunction:
    """num/den over Q[T], reduced, with den(0) = 1 whenever den(0) != 0
    (otherwise den is monic).  Equal values have equal representations."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num = _as_unipoly(num)
        den = _as_unipoly(den)
        if den.is_zero():
            raise ZeroDenominator("rational function with denominator 0")
        if num.is_zero():
            self.num, self.den = UniPoly.zero(), UniPoly.one()
            return
        g = num.gcd(den)
        if g.degree() > 0:
            num = num.exact_div(g)
            den = den.exact_div(g)
        scale = den.coefficient(0)
        if scale == 0:
            scale = den.coeffs[-1]
        num = num * (1 / scale)
        den = den * (1 / scale)
        self.num, self.den = num, den

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __add__(self, other) -> "RationalFunction":
        other = _as_ratfunc(other)
        return RationalFunction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other) -> "RationalFunction":
        return self + (-_as_ratfunc(other))

    def __mul__(self, other) -> "RationalFunction":
        other = _as_ratfunc(other)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, (RationalFunction, UniPoly, int, Fraction)):
            return NotImplemented
        other = _as_ratfunc(other)
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def series_coefficients(self, count: int) -> list[Fraction]:
        """First `count` Taylor coefficients at T = 0."""
        if self.den.coefficient(0) == 0:
            raise ZeroDenominator("pole at T = 0")
        out: list[Fraction] = []
        for k in range(count):
            value = self.num.coefficient(k)
            for i in range(1, k + 1):
                value -= self.den.coefficient(i) * out[k - i]
            out.append(value)  # den(0) == 1 after normalization
        return out

    def __str__(self) -> str:
        if self.den == UniPoly.one():
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self) -> str:
        return f"RationalFunction({self})"


def _as_ratfunc(value) -> RationalFunction:
    if isinstance(value, RationalFunction):
        return value
    return RationalFunction(_as_unipoly(value), UniPoly.one())


def rational_function_sum(terms) -> RationalFunction:
    """Exact sum of an iterable of (numerator, denominator) pairs or
    RationalFunction values."""
    total = RationalFunction(UniPoly.zero(), UniPoly.one())
    for term in terms:
        if isinstance(term, tuple):
            term = RationalFunction(term[0], term[1])
        total = total + _as_ratfunc(term)
    return total
