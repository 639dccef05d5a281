"""Concrete real numbers usable as approximation targets.

A target must produce a certified rational enclosure of itself at any
requested width.  Three families are supported: algebraic numbers given by
an isolating interval of an integer polynomial, explicit series such as the
factorial-exponent Liouville numbers, and fixed-precision decimal oracles.
"""

from __future__ import annotations

import math
from fractions import Fraction
from pathlib import Path
from typing import Optional

from .errors import DomainError, PrecisionError
from .intervals import RealInterval, exact_sqrt
from .polynomials import AlgebraicReal, IntPolynomial, isolate_real_roots

try:
    import gmpy2

    def _ipow(base: int, exp: int) -> int:
        return int(gmpy2.mpz(base) ** exp)
except ImportError:  # pragma: no cover
    def _ipow(base: int, exp: int) -> int:
        return base ** exp


class TargetNumber:
    """Base class; subclasses certify enclosures of a fixed irrational number."""

    kind = "ABSTRACT"
    name = "?"

    def enclosure(self, width: Fraction) -> RealInterval:
        raise NotImplementedError

    def power_enclosure(self, j: int, width: Fraction) -> RealInterval:
        """Certified enclosure of the j-th power at roughly the requested width."""
        if j == 0:
            return RealInterval.point(1)
        base = self.enclosure(width)
        iv = base ** j
        while iv.width() > width:
            base = self.enclosure(base.width() / 2**8)
            iv = base ** j
        return iv

    def exact_power(self, j: int) -> Optional[Fraction]:
        """The exact rational value of the j-th power when it is rational."""
        return None

    @property
    def minimal_polynomial(self) -> Optional[IntPolynomial]:
        return None

    def __repr__(self):
        return f"<{type(self).__name__} {self.name}>"


class AlgebraicTarget(TargetNumber):
    kind = "QUADRATIC_IRRATIONAL"

    def __init__(self, root: AlgebraicReal, name: str):
        poly = root.minimal_polynomial
        if poly.degree < 2:
            raise DomainError("target must be irrational")
        self._root = root
        self.name = name

    def enclosure(self, width: Fraction) -> RealInterval:
        self._root = self._root.refine(width)
        return self._root.isolating

    @property
    def minimal_polynomial(self) -> IntPolynomial:
        return self._root.minimal_polynomial

    def exact_power(self, j: int) -> Optional[Fraction]:
        quad = self.quadratic_parts(j)
        if quad is not None and quad[1] == 0:
            return quad[0]
        return None

    def quadratic_parts(self, j: int):
        """For a degree-2 target write xi^j = u + v*xi exactly; None otherwise."""
        poly = self.minimal_polynomial
        if poly.degree != 2:
            return None
        c0, c1, c2 = poly.coefficients
        # xi^2 = -(c1*xi + c0)/c2
        u, v = Fraction(1), Fraction(0)
        for _ in range(j):
            # (u + v*xi) * xi = u*xi + v*xi^2
            u, v = -v * Fraction(c0, c2), u - v * Fraction(c1, c2)
        return u, v


def golden_ratio() -> AlgebraicTarget:
    roots = isolate_real_roots(IntPolynomial([-1, -1, 1]),
                               RealInterval(Fraction(1), Fraction(2)))
    return AlgebraicTarget(roots[0], "golden")


def sqrt_target(k: int) -> AlgebraicTarget:
    if k <= 0 or exact_sqrt(Fraction(k)) is not None:
        raise DomainError(f"sqrt:{k} is not irrational")
    s = math.isqrt(k)
    root = AlgebraicReal(IntPolynomial([-k, 0, 1]),
                         RealInterval(Fraction(s), Fraction(s + 1)))
    return AlgebraicTarget(root, f"sqrt:{k}")


def quadratic_target(a: int, b: int, c: int) -> AlgebraicTarget:
    """The largest real root of a x^2 + b x + c (must be irrational)."""
    if a == 0:
        raise DomainError("quadratic target needs a != 0")
    disc = b * b - 4 * a * c
    if disc <= 0:
        raise DomainError("quadratic has no two real roots")
    if exact_sqrt(Fraction(disc)) is not None:
        raise DomainError("quadratic target must be irrational")
    bound = Fraction(1) + max(abs(Fraction(b, a)), abs(Fraction(c, a)))
    roots = isolate_real_roots(IntPolynomial([c, b, a]), RealInterval(-bound, bound))
    return AlgebraicTarget(roots[-1], f"quad:{a},{b},{c}")


class LiouvilleTarget(TargetNumber):
    """sum_{k>=1} base^(-k!), the classical factorial-exponent Liouville number."""

    kind = "EXPLICIT_SERIES"

    def __init__(self, base: int = 10):
        if base < 2:
            raise DomainError("liouville base must be >= 2")
        self.base = base
        self.name = f"liouville:{base}"

    def partial_sum(self, terms: int) -> Fraction:
        e_last = math.factorial(terms)
        num = sum(_ipow(self.base, e_last - math.factorial(j)) for j in range(1, terms + 1))
        return Fraction(num, _ipow(self.base, e_last))

    def tail_bound(self, terms: int) -> Fraction:
        """The omitted tail after `terms` terms is in (0, 2 * base^-(terms+1)!)."""
        return Fraction(2, _ipow(self.base, math.factorial(terms + 1)))

    def enclosure(self, width: Fraction) -> RealInterval:
        terms = 2
        while self.tail_bound(terms) > width:
            terms += 1
        lo = self.partial_sum(terms)
        return RealInterval(lo, lo + self.tail_bound(terms))


class DecimalOracleTarget(TargetNumber):
    """A number known through a decimal expansion oracle.

    ``digit_fn(ndigits)`` must return a string of ``ndigits`` decimal digits d
    such that the number lies in [0.d, 0.d + 10^-ndigits] * 10^exponent.
    A fixed digit string gives a finite-precision oracle that raises
    PrecisionError when exhausted.
    """

    kind = "DECIMAL_ORACLE"

    def __init__(self, digit_fn, exponent: int = 0, name: str = "decimal",
                 max_digits: Optional[int] = None):
        self._digit_fn = digit_fn
        self.exponent = exponent
        self.name = name
        self.max_digits = max_digits

    @classmethod
    def from_string(cls, digits: str, exponent: int = 0, name: str = "decimal"):
        digits = digits.strip()
        if not digits.isdigit():
            raise DomainError("decimal oracle digits must be 0-9 only")

        def fn(n):
            if n > len(digits):
                raise PrecisionError(
                    f"decimal oracle {name!r} holds {len(digits)} digits; {n} requested — "
                    "supply more digits or lower the requested precision")
            return digits[:n]

        return cls(fn, exponent, name, max_digits=len(digits))

    @classmethod
    def from_file(cls, path) -> "DecimalOracleTarget":
        """File format: first line digits, second line decimal exponent."""
        lines = Path(path).read_text().splitlines()
        if len(lines) < 2:
            raise DomainError("decimal oracle file needs a digit line and an exponent line")
        return cls.from_string(lines[0], int(lines[1]), name=f"decimal:{path}")

    def enclosure(self, width: Fraction) -> RealInterval:
        scale = Fraction(10) ** self.exponent
        n = 1
        while Fraction(10) ** (self.exponent - n) > width:
            n += 1
        d = self._digit_fn(n)
        lo = Fraction(int(d), 10 ** n) * scale
        return RealInterval(lo, lo + Fraction(1, 10 ** n) * scale)


def parse_target(spec: str) -> TargetNumber:
    """Target mini-language: golden | sqrt:<k> | quad:<a>,<b>,<c> | liouville:<base> | decimal:<file>."""
    if spec == "golden":
        return golden_ratio()
    if spec.startswith("sqrt:"):
        return sqrt_target(int(spec[5:]))
    if spec == "sqrt2":
        return sqrt_target(2)
    if spec.startswith("quad:"):
        parts = spec[5:].split(",")
        if len(parts) != 3:
            raise DomainError("quad target needs three coefficients: quad:<a>,<b>,<c>")
        return quadratic_target(*(int(p) for p in parts))
    if spec == "liouville":
        return LiouvilleTarget(10)
    if spec.startswith("liouville:"):
        return LiouvilleTarget(int(spec[10:]))
    if spec.startswith("decimal:"):
        return DecimalOracleTarget.from_file(spec[8:])
    raise DomainError(f"unknown target spec {spec!r}")
