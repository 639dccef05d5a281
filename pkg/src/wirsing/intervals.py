"""Exact interval arithmetic over arbitrary-precision rationals.

Every irrational quantity in this package is carried as a closed interval
with rational (``fractions.Fraction``) endpoints.  All operations round
outward, so the returned interval always contains the exact result.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Union

from .errors import DomainError

RationalLike = Union[int, Fraction]


def _frac(x: RationalLike) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class RealInterval:
    """Closed interval [lo, hi] with rational endpoints."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", _frac(self.lo))
        object.__setattr__(self, "hi", _frac(self.hi))
        if self.lo > self.hi:
            raise DomainError(f"interval endpoints out of order: [{self.lo}, {self.hi}]")

    @classmethod
    def point(cls, x: RationalLike) -> "RealInterval":
        x = _frac(x)
        return cls(x, x)

    def width(self) -> Fraction:
        return self.hi - self.lo

    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, x: RationalLike) -> bool:
        return self.lo <= x <= self.hi

    def contains_zero(self) -> bool:
        return self.lo <= 0 <= self.hi

    def overlaps(self, other: "RealInterval") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def __add__(self, other):
        if isinstance(other, RealInterval):
            return RealInterval(self.lo + other.lo, self.hi + other.hi)
        o = _frac(other)
        return RealInterval(self.lo + o, self.hi + o)

    __radd__ = __add__

    def __neg__(self):
        return RealInterval(-self.hi, -self.lo)

    def __sub__(self, other):
        if isinstance(other, RealInterval):
            return RealInterval(self.lo - other.hi, self.hi - other.lo)
        o = _frac(other)
        return RealInterval(self.lo - o, self.hi - o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, RealInterval):
            products = (self.lo * other.lo, self.lo * other.hi,
                        self.hi * other.lo, self.hi * other.hi)
            return RealInterval(min(products), max(products))
        o = _frac(other)
        if o >= 0:
            return RealInterval(self.lo * o, self.hi * o)
        return RealInterval(self.hi * o, self.lo * o)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, RealInterval):
            other = RealInterval.point(other)
        if other.contains_zero():
            raise DomainError("division by interval containing zero")
        quotients = (self.lo / other.lo, self.lo / other.hi,
                     self.hi / other.lo, self.hi / other.hi)
        return RealInterval(min(quotients), max(quotients))

    def __rtruediv__(self, other):
        return RealInterval.point(other) / self

    def __abs__(self):
        if self.lo >= 0:
            return self
        if self.hi <= 0:
            return -self
        return RealInterval(Fraction(0), max(-self.lo, self.hi))

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise DomainError("interval powers require a non-negative integer exponent")
        result = RealInterval.point(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # Certified order relations: True only when provable from the endpoints.
    def certainly_lt(self, other: "RealInterval") -> bool:
        return self.hi < other.lo

    def certainly_gt(self, other: "RealInterval") -> bool:
        return self.lo > other.hi

    def certainly_positive(self) -> bool:
        return self.lo > 0

    def __float__(self):
        return float(self.midpoint())

    def __repr__(self):
        return f"RealInterval({self.lo!r}, {self.hi!r})"

    def __str__(self):
        return f"[{self.lo}, {self.hi}]"


# Module-level aliases matching the operation names of the numeric kernel.
def interval_add(a: RealInterval, b: RealInterval) -> RealInterval:
    return a + b


def interval_mul(a: RealInterval, b: RealInterval) -> RealInterval:
    return a * b


def interval_div(a: RealInterval, b: RealInterval) -> RealInterval:
    return a / b


def _sqrt_floor(x: Fraction, scale: int) -> Fraction:
    """Largest multiple of 10**-scale that is <= sqrt(x)."""
    s = 10 ** scale
    return Fraction(isqrt((x.numerator * s * s) // x.denominator), s)


def _sqrt_ceil(x: Fraction, scale: int) -> Fraction:
    """A multiple of 10**-scale that is >= sqrt(x)."""
    s = 10 ** scale
    t = -((-x.numerator * s * s) // x.denominator)  # ceil(x * s^2)
    r = isqrt(t)
    if r * r < t:
        r += 1
    return Fraction(r, s)


def exact_sqrt(x: Fraction):
    """Return sqrt(x) as a Fraction when x is a perfect rational square, else None."""
    if x < 0:
        return None
    ns = isqrt(x.numerator)
    ds = isqrt(x.denominator)
    if ns * ns == x.numerator and ds * ds == x.denominator:
        return Fraction(ns, ds)
    return None


def interval_sqrt(a: RealInterval, target_width: RationalLike = Fraction(1, 10**30)) -> RealInterval:
    """Outward-rounded square root of an interval of non-negative reals.

    The result width is at most ``target_width`` plus whatever growth the
    width of ``a`` itself forces.
    """
    target_width = _frac(target_width)
    if a.lo < 0:
        raise DomainError("interval_sqrt of an interval with negative lower endpoint")
    if target_width <= 0:
        raise DomainError("target_width must be positive")
    lo_exact = exact_sqrt(a.lo)
    hi_exact = exact_sqrt(a.hi)
    if lo_exact is not None and hi_exact is not None:
        return RealInterval(lo_exact, hi_exact)
    # 10^-scale <= target_width / 2 so floor/ceil rounding stays within budget.
    scale = 1
    while Fraction(2, 10 ** scale) > target_width:
        scale += 1
    lo = lo_exact if lo_exact is not None else _sqrt_floor(a.lo, scale)
    hi = hi_exact if hi_exact is not None else _sqrt_ceil(a.hi, scale)
    return RealInterval(lo, hi)


_LN2_LO = Fraction(693147180559945309417232121458, 10**30)
_LN2_HI = Fraction(693147180559945309417232121459, 10**30)
_LN2 = RealInterval(_LN2_LO, _LN2_HI)

# Relative slop absorbing float rounding in math.log over the 53-bit mantissa range.
_LOG_SLOP = Fraction(1, 10**12)


def _log_int(n: int) -> RealInterval:
    """Certified enclosure of ln(n) for a positive integer via bit-length bracketing."""
    if n <= 0:
        raise DomainError("log of a non-positive integer")
    if n == 1:
        return RealInterval.point(0)
    b = n.bit_length()
    shift = max(0, b - 53)
    m = n >> shift
    if shift == 0:
        # exact mantissa: only the float-log slop separates the endpoints
        f = Fraction(math.log(n))
        return RealInterval(f * (1 - _LOG_SLOP), f * (1 + _LOG_SLOP))
    # n in [m * 2^shift, (m+1) * 2^shift]
    lo_f = math.log(m)
    hi_f = math.log(m + 1)
    lo = Fraction(lo_f) * (1 - _LOG_SLOP) + shift * _LN2_LO
    hi = Fraction(hi_f) * (1 + _LOG_SLOP) + shift * _LN2_HI
    return RealInterval(lo, hi)


def interval_log(a: RealInterval) -> RealInterval:
    """Certified natural logarithm of an interval of positive rationals."""
    if a.lo <= 0:
        raise DomainError("interval_log requires a strictly positive interval")
    lo = _log_int(a.lo.numerator) - _log_int(a.lo.denominator)
    hi = _log_int(a.hi.numerator) - _log_int(a.hi.denominator)
    return RealInterval(lo.lo, hi.hi)


def truncate_decimal(x: Fraction, digits: int) -> str:
    """Decimal expansion of x truncated (toward zero) to ``digits`` places."""
    sign = "-" if x < 0 else ""
    x = abs(x)
    s = 10 ** digits
    t = (x.numerator * s) // x.denominator
    whole, frac = divmod(t, s)
    if digits == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{frac:0{digits}d}"


def display_digits(iv: RealInterval, digits: int):
    """Truncated decimal display, or None if the endpoints disagree at that scale.

    A digit string is returned only when both endpoints share it, so every
    printed digit is certified.
    """
    lo_s = truncate_decimal(iv.lo, digits)
    hi_s = truncate_decimal(iv.hi, digits)
    if lo_s == hi_s and (iv.lo >= 0 or iv.hi <= 0):
        return lo_s
    return None
