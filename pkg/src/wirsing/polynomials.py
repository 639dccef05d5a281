"""Integer polynomials, Sturm-sequence root isolation, and algebraic reals."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from .errors import DomainError
from .intervals import RealInterval, exact_sqrt


def _normalize(coeffs: Sequence[int]) -> Tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class IntPolynomial:
    """Univariate polynomial with integer coefficients, lowest degree first."""

    coefficients: Tuple[int, ...]

    def __init__(self, coefficients: Sequence[int]):
        object.__setattr__(self, "coefficients", _normalize(coefficients))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1  # -1 for the zero polynomial

    def is_zero(self) -> bool:
        return not self.coefficients

    def __call__(self, x):
        """Horner evaluation; works for int, Fraction and RealInterval arguments."""
        acc = Fraction(0) if not isinstance(x, RealInterval) else RealInterval.point(0)
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial([i * c for i, c in enumerate(self.coefficients)][1:])

    def content(self) -> int:
        return math.gcd(*self.coefficients) if self.coefficients else 0

    def primitive(self) -> "IntPolynomial":
        if self.is_zero():
            return self
        g = self.content()
        sign = 1 if self.coefficients[-1] > 0 else -1
        return IntPolynomial([sign * c // g for c in self.coefficients])

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if self.is_zero() or other.is_zero():
            return IntPolynomial([])
        out = [0] * (self.degree + other.degree + 1)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return IntPolynomial(out)

    def __str__(self):
        if self.is_zero():
            return "0"
        terms = []
        for i, c in enumerate(self.coefficients):
            if c:
                terms.append(f"{c}*x^{i}" if i else f"{c}")
        return " + ".join(terms)


def _frac_divmod(a: List[Fraction], b: List[Fraction]):
    """Polynomial division over Q on low-first coefficient lists."""
    a = a[:]
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    while len(a) >= len(b) and any(a):
        while a and a[-1] == 0:
            a.pop()
        if len(a) < len(b):
            break
        coef = a[-1] / b[-1]
        shift = len(a) - len(b)
        q[shift] = coef
        for i, bc in enumerate(b):
            a[shift + i] -= coef * bc
        a.pop()
    while a and a[-1] == 0:
        a.pop()
    return q, a


def poly_gcd(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    """Primitive gcd over Z computed with a rational Euclidean remainder chain."""
    a = [Fraction(c) for c in p.coefficients]
    b = [Fraction(c) for c in q.coefficients]
    while any(b):
        _, r = _frac_divmod(a, b)
        a, b = b, r
    if not any(a):
        return IntPolynomial([])
    den = math.lcm(*(c.denominator for c in a))
    return IntPolynomial([int(c * den) for c in a]).primitive()


def exact_div(p: IntPolynomial, d: IntPolynomial) -> IntPolynomial:
    """Exact quotient p / d; raises if the division leaves a remainder."""
    q, r = _frac_divmod([Fraction(c) for c in p.coefficients],
                        [Fraction(c) for c in d.coefficients])
    if any(r):
        raise DomainError("polynomial division is not exact")
    if any(c.denominator != 1 for c in q):
        den = math.lcm(*(c.denominator for c in q))
        return IntPolynomial([int(c * den) for c in q]).primitive()
    return IntPolynomial([int(c) for c in q])


def square_free_part(p: IntPolynomial) -> IntPolynomial:
    if p.is_zero():
        raise DomainError("square-free part of the zero polynomial")
    if p.degree == 0:
        return IntPolynomial([1])
    g = poly_gcd(p, p.derivative())
    if g.degree == 0:
        return p.primitive()
    return exact_div(p.primitive(), g)


def _sturm_chain(p: IntPolynomial) -> List[List[Fraction]]:
    chain = [[Fraction(c) for c in p.coefficients],
             [Fraction(c) for c in p.derivative().coefficients]]
    while any(chain[-1]):
        _, r = _frac_divmod(chain[-2], chain[-1])
        if not any(r):
            break
        chain.append([-c for c in r])
    return chain


def _eval_list(coeffs: List[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _sign_variations(chain, x: Fraction) -> int:
    signs = []
    for coeffs in chain:
        v = _eval_list(coeffs, x)
        if v:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


@dataclass(frozen=True)
class AlgebraicReal:
    """A real root of an integer polynomial, certified by an isolating interval.

    The polynomial is square-free and primitive; the interval contains exactly
    one real root.  When the root is rational the interval has width zero.
    """

    minimal_polynomial: IntPolynomial
    isolating: RealInterval

    def refine(self, target_width: Fraction) -> "AlgebraicReal":
        """Shrink the isolating interval below target_width by sign bisection."""
        lo, hi = self.isolating.lo, self.isolating.hi
        if hi - lo <= target_width:
            return self
        p = self.minimal_polynomial
        flo = p(lo)
        if flo == 0:
            return AlgebraicReal(p, RealInterval.point(lo))
        if p(hi) == 0:
            return AlgebraicReal(p, RealInterval.point(hi))
        while hi - lo > target_width:
            mid = (lo + hi) / 2
            fmid = p(mid)
            if fmid == 0:
                return AlgebraicReal(p, RealInterval.point(mid))
            if (flo > 0) != (fmid > 0):
                hi = mid
            else:
                lo, flo = mid, fmid
        return AlgebraicReal(p, RealInterval(lo, hi))

    def interval(self, target_width: Fraction = Fraction(1, 10**30)) -> RealInterval:
        return self.refine(target_width).isolating

    def __float__(self):
        return float(self.interval(Fraction(1, 10**20)).midpoint())


def refine(a: AlgebraicReal, target_width: Fraction) -> AlgebraicReal:
    return a.refine(target_width)


def isolate_real_roots(p: IntPolynomial, window: RealInterval) -> List[AlgebraicReal]:
    """All distinct real roots of p inside the open window, in increasing order.

    Square-free reduction first, then Sturm sign-variation bisection until each
    subinterval holds exactly one root.
    """
    if p.is_zero():
        raise DomainError("cannot isolate roots of the zero polynomial")
    sf = square_free_part(p)
    lo, hi = window.lo, window.hi
    # Roots sitting exactly on the (open) window boundary are excluded; divide
    # them out so Sturm endpoint evaluations are never zero.
    for endpoint in (lo, hi):
        if sf.degree >= 1 and sf(endpoint) == 0:
            sf = exact_div(sf, IntPolynomial([-endpoint.numerator, endpoint.denominator]))
    if sf.degree < 1:
        return []
    chain = _sturm_chain(sf)

    def roots_in(a: Fraction, b: Fraction) -> int:
        # count of roots in (a, b]; requires sf(a) != 0
        return _sign_variations(chain, a) - _sign_variations(chain, b)

    found: List[RealInterval] = []
    stack = [(lo, hi, roots_in(lo, hi))]
    while stack:
        a, b, count = stack.pop()
        if count == 0:
            continue
        if count == 1:
            found.append(RealInterval(a, b))
            continue
        mid = (a + b) / 2
        if sf(mid) == 0:
            # Rational root exactly at the midpoint: record it as a point and
            # carve out a root-free collar around it before recursing.
            d = (b - a) / 4
            while sf(mid - d) == 0 or sf(mid + d) == 0 or roots_in(mid - d, mid + d) != 1:
                d /= 3
            found.append(RealInterval.point(mid))
            stack.append((a, mid - d, roots_in(a, mid - d)))
            stack.append((mid + d, b, roots_in(mid + d, b)))
            continue
        left = roots_in(a, mid)
        if left:
            stack.append((a, mid, left))
        if count - left:
            stack.append((mid, b, count - left))
    found.sort(key=lambda iv: iv.lo)
    roots = []
    for iv in found:
        if iv.width() == 0:
            roots.append(AlgebraicReal(sf, iv))
        else:
            roots.append(AlgebraicReal(sf, iv).refine(iv.width() / 2))
    return roots


def sqrt_algebraic(k: int) -> AlgebraicReal:
    """sqrt(k) for a positive integer k as an AlgebraicReal."""
    if k < 0:
        raise DomainError("sqrt of a negative integer")
    r = exact_sqrt(Fraction(k))
    if r is not None:
        return AlgebraicReal(IntPolynomial([-int(r), 1]), RealInterval.point(r))
    s = math.isqrt(k)
    return AlgebraicReal(IntPolynomial([-k, 0, 1]),
                         RealInterval(Fraction(s), Fraction(s + 1)))
