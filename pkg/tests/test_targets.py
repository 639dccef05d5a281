"""Target numbers: enclosures, exact powers, the spec mini-language."""

from fractions import Fraction

import pytest

from wirsing.errors import DomainError, PrecisionError
from wirsing.targets import (DecimalOracleTarget, LiouvilleTarget,
                             golden_ratio, parse_target, quadratic_target,
                             sqrt_target)

F = Fraction


def test_golden_enclosure_narrows():
    g = golden_ratio()
    iv = g.enclosure(F(1, 10**40))
    assert iv.width() <= F(1, 10**40)
    # golden ratio satisfies x^2 = x + 1
    assert iv.lo ** 2 < iv.hi + 1 and iv.hi ** 2 > iv.lo + 1


def test_quadratic_parts_reduce_powers():
    g = golden_ratio()
    # phi^3 = 1 + 2 phi
    assert g.quadratic_parts(3) == (1, 2)
    assert g.exact_power(3) is None
    s = sqrt_target(2)
    assert s.exact_power(2) == 2
    assert s.exact_power(4) == 4


def test_power_enclosure_contains_power():
    s = sqrt_target(3)
    iv = s.power_enclosure(3, F(1, 10**20))
    base = s.enclosure(F(1, 10**30))
    assert iv.lo <= base.lo ** 3 and base.hi ** 3 <= iv.hi


def test_sqrt_target_rejects_perfect_squares():
    with pytest.raises(DomainError):
        sqrt_target(9)


def test_quadratic_target_largest_root():
    t = quadratic_target(1, 0, -2)  # sqrt(2), not -sqrt(2)
    iv = t.enclosure(F(1, 10**10))
    assert iv.lo > 0
    with pytest.raises(DomainError):
        quadratic_target(1, -4, 4)  # rational double root


def test_liouville_partial_sums_and_tail():
    t = LiouvilleTarget(10)
    assert t.partial_sum(2) == F(11, 100)
    assert t.partial_sum(3) == F(110001, 10**6)
    iv = t.enclosure(F(1, 10**30))
    assert iv.width() <= F(1, 10**30)
    assert str(float(iv.lo)).startswith("0.110001")


def test_decimal_oracle_exhaustion():
    t = DecimalOracleTarget.from_string("314159", exponent=1, name="pi-ish")
    iv = t.enclosure(F(1, 100))
    assert iv.lo <= F(314159, 10**5) <= iv.hi + F(1, 100)
    with pytest.raises(PrecisionError):
        t.enclosure(F(1, 10**12))


def test_parse_target_mini_language():
    assert parse_target("golden").name == "golden"
    assert parse_target("sqrt:5").name == "sqrt:5"
    assert parse_target("sqrt2").name == "sqrt:2"
    assert parse_target("quad:1,-3,1").name == "quad:1,-3,1"
    assert parse_target("liouville:2").base == 2
    with pytest.raises(DomainError):
        parse_target("nonsense")
    with pytest.raises(DomainError):
        parse_target("quad:1,2")
