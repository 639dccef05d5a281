"""Minimal-point scans, Hankel duality, forms and approximants."""

import random
from fractions import Fraction

import pytest

from wirsing import minpoints
from wirsing.errors import DomainError
from wirsing.targets import LiouvilleTarget, golden_ratio, quadratic_target, sqrt_target

F = Fraction


def fib(k):
    a, b = 1, 1
    for _ in range(k):
        a, b = b, a + b
    return a


def test_golden_records_are_fibonacci():
    seq = minpoints.best_approx_sequence(golden_ratio(), 1, 1000)
    xs = [p.x for p in seq]
    assert xs == [1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233, 377, 610, 987]
    # each record pairs a Fibonacci number with its successor
    assert [p.coords[1] for p in seq] == xs[1:] + [1597]


def test_sqrt2_records_are_pell():
    seq = minpoints.best_approx_sequence(sqrt_target(2), 1, 1000)
    assert [p.x for p in seq] == [1, 2, 5, 12, 29, 70, 169, 408, 985]


def test_record_laws_hold():
    seq = minpoints.best_approx_sequence(golden_ratio(), 2, 500)
    minpoints.check_record_laws(seq)
    for a, b in zip(seq, seq[1:]):
        assert a.x < b.x
        assert b.error.hi < a.error.lo or b.error.lo < a.error.hi


def test_scan_equals_naive_oracle_bytes():
    for target, n, xmax in ((golden_ratio(), 2, 300),
                            (sqrt_target(3), 3, 200),
                            (LiouvilleTarget(10), 2, 300)):
        scan = minpoints.best_approx_sequence(target, n, xmax)
        oracle = minpoints.naive_best_approx_oracle(target, n, xmax)
        assert (minpoints.serialize_points(scan, target)
                == minpoints.serialize_points(oracle, target))


def test_prefiltered_scan_matches_exact_scan():
    target = quadratic_target(2, -4, -1)
    exact = minpoints.best_approx_sequence(target, 1, 15000)
    # force the numpy prefilter path by exceeding the exact-scan limit
    pre = minpoints._scan_prefiltered(target, 1, 15000)
    assert [p.coords for p in exact] == [p.coords for p in pre]


def test_convergents_match_scan_denominators():
    target = quadratic_target(3, 1, -5)
    conv = minpoints.convergents(target, 10**4)
    scan = minpoints.best_approx_sequence(target, 1, 10**4)
    assert [q for (_, q) in conv if q > 1] == [p.x for p in scan if p.x > 1]


def test_matrix_rank_exact():
    assert minpoints.matrix_rank_exact([[1, 2], [2, 4]]) == 1
    assert minpoints.matrix_rank_exact([[1, 0], [0, 1]]) == 2
    assert minpoints.matrix_rank_exact([[0, 0], [0, 0]]) == 0
    assert minpoints.matrix_rank_exact([[2, 4, 6], [1, 2, 3], [3, 6, 9]]) == 1


def test_hankel_defect_examples():
    # exactly geometric coordinates have defect 1
    assert minpoints.hankel_defect((1, 2, 4, 8, 16)) == 1
    # breaking the recurrence in the last coordinate raises the defect
    assert minpoints.hankel_defect((1, 2, 4, 8, 17)) == 2


def test_duality_random_points():
    rng = random.Random(7)
    for _ in range(300):
        n = rng.randint(2, 6)
        p = tuple(rng.randint(-9, 9) for _ in range(n + 1))
        defect = minpoints.hankel_defect(p)
        for m in range(1, (n + 1) // 2 + 1):
            assert minpoints.shifted_vectors_independent(p, m) == (defect > m)


def test_shifted_solutions_structure():
    seq = minpoints.best_approx_sequence(golden_ratio(), 3, 100)
    sol = minpoints.shifted_solutions(seq[-1], 1, golden_ratio())
    assert len(sol.vectors) == len(sol.errors) == 2
    assert isinstance(sol.independent, bool)


def test_forms_sqrt2_degree2_exact_zero():
    records = minpoints.best_linear_form_sequence(sqrt_target(2), 2, 10)
    assert records[-1].exact_zero
    assert records[-1].coeffs == (-2, 0, 1)


def test_forms_degree1_matches_point_scan():
    target = sqrt_target(2)
    forms = minpoints.best_linear_form_sequence(target, 1, 500)
    points = minpoints.best_approx_sequence(target, 1, 500)
    assert [f.height for f in forms] == [p.x for p in points]
    assert [f.coeffs for f in forms] == [(-p.coords[1], p.x) for p in points]


def test_approximants_exact_hit_for_algebraic_target():
    records = minpoints.algebraic_approximant_sequence(sqrt_target(2), 2, 10)
    assert any(a.exact_hit for a in records)
    hit = [a for a in records if a.exact_hit][-1]
    assert hit.alpha.minimal_polynomial.coefficients == (-2, 0, 1)


def test_approximants_records_improve():
    records = minpoints.algebraic_approximant_sequence(golden_ratio(), 1, 200)
    for a, b in zip(records, records[1:]):
        assert a.height <= b.height
        assert b.distance.hi < a.distance.lo


def test_liouville_convergent_points_bracket_error():
    t = LiouvilleTarget(10)
    pts = minpoints.liouville_convergent_points(t, 4)
    for p in pts:
        true = abs(t.enclosure(F(1, 10 ** 60)) * p.x - p.coords[1])
        assert p.error.lo <= true.hi and true.lo <= p.error.hi


def test_bad_arguments():
    with pytest.raises(DomainError):
        minpoints.best_approx_sequence(golden_ratio(), 0, 10)
    with pytest.raises(DomainError):
        minpoints.best_linear_form_sequence(golden_ratio(), 1, 0)
