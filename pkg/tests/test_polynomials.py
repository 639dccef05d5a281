"""Integer polynomials, Sturm isolation, algebraic real refinement."""

from fractions import Fraction

import pytest

from wirsing.errors import DomainError
from wirsing.intervals import RealInterval
from wirsing.polynomials import (AlgebraicReal, IntPolynomial, exact_div,
                                 isolate_real_roots, poly_gcd,
                                 square_free_part, sqrt_algebraic)

F = Fraction


def test_polynomial_basics():
    p = IntPolynomial([-2, 0, 1])  # x^2 - 2
    assert p.degree == 2
    assert p(F(2)) == 2
    assert p.derivative().coefficients == (0, 2)


def test_primitive_strips_content():
    p = IntPolynomial([6, -9, 3])
    assert p.primitive().coefficients == (2, -3, 1)


def test_multiplication():
    p = IntPolynomial([1, 1])       # 1 + x
    q = IntPolynomial([-1, 1])      # -1 + x
    assert (p * q).coefficients == (-1, 0, 1)


def test_poly_gcd_and_exact_div():
    p = IntPolynomial([-1, 0, 1])   # (x-1)(x+1)
    q = IntPolynomial([-1, 1])
    g = poly_gcd(p, q)
    assert g.primitive().coefficients == (-1, 1)
    assert exact_div(p, q).coefficients == (1, 1)


def test_square_free_part():
    # (x-1)^2 (x+2) -> (x-1)(x+2) up to sign/content
    p = IntPolynomial([1, -2, 1]) * IntPolynomial([2, 1])
    sf = square_free_part(p).primitive()
    assert sf.degree == 2
    assert sf(F(1)) == 0 and sf(F(-2)) == 0


def test_isolate_real_roots_counts_and_separates():
    # (x^2 - 2)(x - 1): roots -sqrt2, 1, sqrt2
    p = IntPolynomial([-2, 0, 1]) * IntPolynomial([-1, 1])
    roots = isolate_real_roots(p, RealInterval(F(-3), F(3)))
    assert len(roots) == 3
    vals = sorted(float(r) for r in roots)
    assert abs(vals[0] + 2 ** 0.5) < 1e-9
    assert abs(vals[1] - 1) < 1e-9
    assert abs(vals[2] - 2 ** 0.5) < 1e-9


def test_isolate_window_is_open():
    # roots exactly on the window boundary are excluded by design
    p = IntPolynomial([0, -1, 1])   # x(x-1)
    assert isolate_real_roots(p, RealInterval(F(0), F(1))) == []
    inner = isolate_real_roots(p, RealInterval(F(-1), F(2)))
    vals = sorted(float(r) for r in inner)
    assert len(vals) == 2
    assert abs(vals[0]) < 1e-9 and abs(vals[1] - 1) < 1e-9


def test_isolate_rational_root_at_midpoint():
    # the midpoint of the first bisection of (-2, 2) is the root 0
    p = IntPolynomial([0, -1, 1]) * IntPolynomial([-3, 2])
    roots = isolate_real_roots(p, RealInterval(F(-2), F(2)))
    vals = sorted(float(r) for r in roots)
    assert len(vals) == 3
    assert abs(vals[0]) < 1e-9 and abs(vals[1] - 1) < 1e-9
    assert abs(vals[2] - 1.5) < 1e-9


def test_refine_narrows_and_keeps_root():
    root = sqrt_algebraic(2)
    iv = root.interval(F(1, 10**40))
    assert iv.width() <= F(1, 10**40)
    assert iv.lo ** 2 < 2 < iv.hi ** 2


def test_rational_roots_refine_tightly():
    roots = isolate_real_roots(IntPolynomial([-4, 0, 1]),
                               RealInterval(F(-3), F(3)))
    tiny = F(1, 10**50)
    ivs = sorted((r.interval(tiny) for r in roots), key=lambda iv: iv.lo)
    assert ivs[0].lo <= -2 <= ivs[0].hi and ivs[1].lo <= 2 <= ivs[1].hi
    assert all(iv.width() <= tiny for iv in ivs)


def test_sqrt_algebraic_rejects_negative():
    with pytest.raises(DomainError):
        sqrt_algebraic(-1)
