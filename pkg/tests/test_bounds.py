"""Certified bound formulas: displays, equilibrium, gates, reciprocity."""

from fractions import Fraction

import pytest

from wirsing import bounds
from wirsing.errors import DomainError
from wirsing.intervals import RealInterval, interval_sqrt

F = Fraction


def test_phi_bound_n4_is_sqrt7():
    report = bounds.phi_bound(1, 4, digits=10)
    assert report.display == "2.6457513110"
    s7 = interval_sqrt(RealInterval.point(7), F(1, 10**30))
    assert report.value.lo <= s7.hi and s7.lo <= report.value.hi


def test_phi_bound_rejects_small_n():
    with pytest.raises(DomainError):
        bounds.phi_bound(1, 3)
    with pytest.raises(DomainError):
        bounds.phi_bound(2, 5)  # needs m < (n-1)/2


def test_best_m_matches_exhaustive_intervals():
    for n in (10, 25, 100):
        res = bounds.best_m(n, F(1, 10**30))
        for m, iv in res.all_candidates:
            assert res.bound.hi >= iv.lo


def test_bs_table_known_rows():
    rows = bounds.bs_table([4, 24, 1000])
    assert rows[0] == (4, "3.45", "2.64")
    assert rows[1] == (24, "14.46", "14.46")
    assert rows[2] == (1000, "502.98", "577.92")


def test_equilibrium_product_contains_one():
    for m, n in ((1, 4), (2, 10), (5, 30)):
        phi = bounds.phi_quotient_interval(m, n, F(1, 10**25))
        lam = bounds.equilibrium_lambda(m, n).interval(F(1, 10**25))
        prod = phi * lam
        assert prod.lo <= 1 <= prod.hi


def test_S_endpoint_values():
    assert bounds.eval_S(RealInterval.point(1)).lo == 1
    assert bounds.eval_S(RealInterval.point(2)).lo == 2
    with pytest.raises(DomainError):
        bounds.eval_S(RealInterval.point(F(5, 2)))


def test_G_c_reciprocity_samples():
    width = F(1, 10**30)
    for g in (F(1, 10), F(1, 4), F(2, 5), F(2345, 10**4)):
        gi = RealInterval.point(g)
        prod = bounds.eval_G(gi, width) * bounds.eval_c(gi, width)
        assert prod.lo <= 1 <= prod.hi


def test_rhs_gates_raise_outside_hypotheses():
    # lam_hat must exceed 1/(n-m)
    with pytest.raises(DomainError):
        bounds.rhs_h11(4, 1, RealInterval.point(F(1, 4)))
    # windag needs a strictly positive lam_hat
    with pytest.raises(DomainError):
        bounds.rhs_windag(RealInterval.point(0))
    # h21 needs lam_hat < 1/(m+1)
    with pytest.raises(DomainError):
        bounds.rhs_h21(4, 1, RealInterval.point(F(3, 4)),
                       RealInterval.point(F(3, 4)))


def test_transfer_rhs_gates():
    with pytest.raises(DomainError):
        bounds.transfer_rhs("NOPE", 3, w=RealInterval.point(3))
    with pytest.raises(DomainError):
        # DAVSCHM requires lam_hat in [1/n, 2/n]
        bounds.transfer_rhs("DAVSCHM", 3, lam_hat=RealInterval.point(F(9, 10)))
    iv = bounds.transfer_rhs("TOLLER_1", 3, w=RealInterval.point(3))
    assert iv.lo == iv.hi == 2  # (w+1)/2


def test_floor_n_alpha0_matches_float():
    import math
    for n in (4, 7, 100, 9999):
        assert bounds.floor_n_alpha0(n) == math.floor(n * (3 - math.sqrt(3)) / 6)


def test_theorem1B_positivity_small_n():
    for n in range(5, 40):
        _, _, positive = bounds.verify_theorem1B_positivity(n)
        assert positive


def test_phi_exceeds_beta_spot_checks():
    for n in (4, 10, 100):
        m = min(max(1, bounds.floor_n_alpha0(n)), (n - 2) // 2)
        assert bounds.phi_exceeds_beta(n, m)
