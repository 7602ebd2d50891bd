"""Exact arithmetic kernel.

Unbounded rationals (`fractions.Fraction`), directed-rounded decimal
enclosures, and a couple of elementary number-theoretic helpers.  Every
pass/fail comparison elsewhere in the package goes through exact rational
arithmetic; the enclosure type exists only to certify the one transcendental
quantity (a rational power of a rational) with outward rounding.

All values are immutable and all operations are pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import ROUND_CEILING, ROUND_FLOOR, Context, Decimal
from fractions import Fraction

Rational = Fraction

# Exact forms of the decimal constants driving the audits.  The decimal
# literals are finite, so these identifications are lossless.
RATIO_BOUND = Fraction(143, 125)          # 1.144
SHIFTED_RATIO_BOUND = Fraction(23, 20)    # 1.15
SIX_FIFTHS = Fraction(6, 5)
CHEBYSHEV_A = Fraction(1)
CHEBYSHEV_B = Fraction(1130289, 1000000)  # 1.130289

DEFAULT_DIGITS = 50


def rational_cmp(a, b) -> int:
    """Three-way exact comparison of rationals by cross-multiplication.

    Returns -1, 0 or +1.  Inputs may be anything `Fraction` accepts.
    """
    a = Fraction(a)
    b = Fraction(b)
    lhs = a.numerator * b.denominator
    rhs = b.numerator * a.denominator
    return (lhs > rhs) - (lhs < rhs)


def euler_phi(m: int) -> int:
    """Count of units modulo m, via trial-division factorization."""
    if m < 1:
        raise ValueError("euler_phi requires m >= 1")
    result = m
    n = m
    p = 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            result -= result // p
        p += 1 if p == 2 else 2
    if n > 1:
        result -= result // n
    return result


def _ctx(digits: int, rounding: str) -> Context:
    return Context(prec=digits, rounding=rounding)


def _ulp(value: Decimal, digits: int) -> Decimal:
    # one unit in the last place of a `digits`-digit result
    if value.is_zero():
        return Decimal(1).scaleb(-digits)
    return Decimal(1).scaleb(value.adjusted() - digits + 1)


def _pad_down(value: Decimal, digits: int) -> Decimal:
    return _ctx(digits + 2, ROUND_FLOOR).subtract(value, _ulp(value, digits))


def _pad_up(value: Decimal, digits: int) -> Decimal:
    return _ctx(digits + 2, ROUND_CEILING).add(value, _ulp(value, digits))


@dataclass(frozen=True)
class RealEnclosure:
    """A closed decimal interval [lower, upper] certified to contain a real.

    Basic arithmetic uses directed rounding on the endpoints; `exp` and `ln`
    are computed correctly rounded and then widened by one unit in the last
    place on each side, so the enclosure stays valid whatever rounding mode
    the library function honoured.  Widening is always outward, hence every
    derived enclosure still contains the true value.
    """

    lower: Decimal
    upper: Decimal

    def __post_init__(self):
        if self.lower > self.upper:
            raise ValueError(f"inverted enclosure: {self.lower} > {self.upper}")

    @classmethod
    def point(cls, value) -> "RealEnclosure":
        d = Decimal(value)
        return cls(d, d)

    @classmethod
    def from_rational(cls, value, digits: int = DEFAULT_DIGITS) -> "RealEnclosure":
        value = Fraction(value)
        num = Decimal(value.numerator)
        den = Decimal(value.denominator)
        lo = _ctx(digits, ROUND_FLOOR).divide(num, den)
        hi = _ctx(digits, ROUND_CEILING).divide(num, den)
        return cls(lo, hi)

    def width(self) -> Decimal:
        return _ctx(DEFAULT_DIGITS, ROUND_CEILING).subtract(self.upper, self.lower)

    def contains(self, value) -> bool:
        value = Fraction(value)
        return Fraction(self.lower) <= value <= Fraction(self.upper)

    def is_point(self) -> bool:
        return self.lower == self.upper

    def add(self, other: "RealEnclosure", digits: int = DEFAULT_DIGITS) -> "RealEnclosure":
        lo = _ctx(digits, ROUND_FLOOR).add(self.lower, other.lower)
        hi = _ctx(digits, ROUND_CEILING).add(self.upper, other.upper)
        return RealEnclosure(lo, hi)

    def sub(self, other: "RealEnclosure", digits: int = DEFAULT_DIGITS) -> "RealEnclosure":
        lo = _ctx(digits, ROUND_FLOOR).subtract(self.lower, other.upper)
        hi = _ctx(digits, ROUND_CEILING).subtract(self.upper, other.lower)
        return RealEnclosure(lo, hi)

    def mul(self, other: "RealEnclosure", digits: int = DEFAULT_DIGITS) -> "RealEnclosure":
        down = _ctx(digits, ROUND_FLOOR)
        up = _ctx(digits, ROUND_CEILING)
        pairs = [
            (self.lower, other.lower),
            (self.lower, other.upper),
            (self.upper, other.lower),
            (self.upper, other.upper),
        ]
        lo = min(down.multiply(a, b) for a, b in pairs)
        hi = max(up.multiply(a, b) for a, b in pairs)
        return RealEnclosure(lo, hi)

    def exp(self, digits: int = DEFAULT_DIGITS) -> "RealEnclosure":
        c = Context(prec=digits)
        return RealEnclosure(
            _pad_down(c.exp(self.lower), digits),
            _pad_up(c.exp(self.upper), digits),
        )

    def ln(self, digits: int = DEFAULT_DIGITS) -> "RealEnclosure":
        if self.lower <= 0:
            raise ValueError("ln requires a strictly positive enclosure")
        c = Context(prec=digits)
        return RealEnclosure(
            _pad_down(c.ln(self.lower), digits),
            _pad_up(c.ln(self.upper), digits),
        )

    def __str__(self) -> str:
        return f"[{self.lower}, {self.upper}]"

    def to_dict(self) -> dict:
        return {"lower": str(self.lower), "upper": str(self.upper)}


def pow_enclosure(base, exponent: RealEnclosure, digits: int = DEFAULT_DIGITS) -> "RealEnclosure":
    """Enclosure of base**exponent for a positive rational base.

    A degenerate integer exponent is evaluated exactly in rational
    arithmetic; otherwise the power goes through exp(exponent * ln(base))
    with outward rounding at every step, so larger `digits` yields a nested,
    tighter enclosure.
    """
    base = Fraction(base)
    if base <= 0:
        raise ValueError("pow_enclosure requires a positive base")
    if digits < 1:
        raise ValueError("digits must be >= 1")
    lo, hi = exponent.lower, exponent.upper
    if lo == hi and lo == lo.to_integral_value():
        return RealEnclosure.from_rational(base ** int(lo), digits)
    ln_base = RealEnclosure.from_rational(base, digits).ln(digits)
    return exponent.mul(ln_base, digits).exp(digits)
