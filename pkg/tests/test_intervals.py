"""Exact interval arithmetic: outward rounding, certified comparisons, logs."""

import math
from fractions import Fraction

import pytest

from wirsing.errors import DomainError
from wirsing.intervals import (RealInterval, display_digits, exact_sqrt,
                               interval_log, interval_sqrt, truncate_decimal)

F = Fraction


def test_point_and_width():
    iv = RealInterval.point(F(3, 7))
    assert iv.lo == iv.hi == F(3, 7)
    assert iv.width() == 0


def test_ordering_rejected():
    with pytest.raises(DomainError):
        RealInterval(F(1), F(0))


def test_arithmetic_contains_true_values():
    a = RealInterval(F(1, 3), F(1, 2))
    b = RealInterval(F(-2), F(5))
    for x in (F(1, 3), F(2, 5), F(1, 2)):
        for y in (F(-2), F(0), F(3), F(5)):
            assert (a + b).lo <= x + y <= (a + b).hi
            assert (a - b).lo <= x - y <= (a - b).hi
            assert (a * b).lo <= x * y <= (a * b).hi


def test_division_by_interval_containing_zero():
    a = RealInterval(F(1), F(2))
    with pytest.raises(DomainError):
        a / RealInterval(F(-1), F(1))


def test_power_encloses_values():
    base = RealInterval(F(-3), F(2))
    iv = base ** 2
    for x in (F(-3), F(-1), F(0), F(2)):
        assert iv.lo <= x * x <= iv.hi


def test_certain_comparisons():
    a = RealInterval(F(0), F(1))
    b = RealInterval(F(2), F(3))
    assert b.certainly_gt(a)
    assert a.certainly_lt(b)
    assert not a.certainly_lt(RealInterval(F(1, 2), F(2)))


def test_exact_sqrt():
    assert exact_sqrt(F(9, 4)) == F(3, 2)
    assert exact_sqrt(F(2)) is None


def test_interval_sqrt_encloses():
    width = F(1, 10**30)
    iv = interval_sqrt(RealInterval.point(2), width)
    assert iv.width() <= width
    assert iv.lo ** 2 <= 2 <= iv.hi ** 2


def test_interval_sqrt_rejects_negative():
    with pytest.raises(DomainError):
        interval_sqrt(RealInterval(F(-1), F(1)), F(1, 10))


def test_interval_log_matches_float():
    for v in (F(2), F(10), F(3, 2), F(1, 7)):
        iv = interval_log(RealInterval.point(v))
        assert iv.lo <= iv.hi
        assert abs(float(iv.lo) - math.log(v)) < 1e-10
        assert abs(float(iv.hi) - math.log(v)) < 1e-10


def test_interval_log_rejects_nonpositive():
    with pytest.raises(DomainError):
        interval_log(RealInterval(F(0), F(1)))


def test_truncate_decimal_toward_zero():
    assert truncate_decimal(F(19999, 10000), 3) == "1.999"
    assert truncate_decimal(F(-19999, 10000), 3) == "-1.999"
    assert truncate_decimal(F(2), 2) == "2.00"


def test_display_digits_requires_agreement():
    assert display_digits(RealInterval(F(14142, 10**4), F(141422, 10**5)), 3) == "1.414"
    assert display_digits(RealInterval(F(1999, 1000), F(2001, 1000)), 3) is None
