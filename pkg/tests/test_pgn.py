"""Parametric successive-minima exponents: searches, duality, transfers."""

from fractions import Fraction

import pytest

from wirsing import pgn
from wirsing.errors import DomainError, InputError
from wirsing.intervals import RealInterval
from wirsing.targets import golden_ratio, sqrt_target

F = Fraction

BOUND = 10**5


def _sample(xi, N, l, Q, side="primal"):
    fn = pgn.psi_empirical if side == "primal" else pgn.psi_star_empirical
    return fn(xi, N, l, Q, BOUND)


def test_dirichlet_pins_top_primal_minimum():
    # one solution always exists by the pigeonhole bound, so psi_{N,1} <= 0
    s = _sample(golden_ratio(), 1, 1, 100)
    assert s.value.lo <= 0
    assert s.side == pgn.PRIMAL and not s.truncated


def test_psi_monotone_in_l():
    xi = sqrt_target(2)
    samples = [_sample(xi, 2, l, 100) for l in (1, 2, 3)]
    pgn.check_l_monotonicity(samples)
    assert samples[0].value.lo <= samples[2].value.hi


def test_monotonicity_checker_rejects_decreases():
    good = RealInterval(F(0), F(1, 100))
    bad = RealInterval(F(-1), F(-1, 2))
    mk = lambda l, v: pgn.PsiSample(F(100), 2, l, v, pgn.PRIMAL, False)
    with pytest.raises(InputError):
        pgn.check_l_monotonicity([mk(1, good), mk(2, bad)])


def test_duality_pairs_within_tolerance():
    xi = sqrt_target(2)
    samples = []
    for Q in (F(100), F(1000)):
        for l in (1, 2):
            samples.append(_sample(xi, 1, l, Q))
            samples.append(_sample(xi, 1, l, Q, side="dual"))
    rows = pgn.check_duality(samples, tolerance=F(1, 4))
    assert len(rows) == 4
    for row in rows:
        assert row.within_tolerance


def test_duality_missing_mate_raises():
    d = _sample(sqrt_target(2), 2, 1, 100, side="dual")
    with pytest.raises(InputError):
        pgn.check_duality([d])


def test_sses_rows_on_grid():
    xi = sqrt_target(2)
    samples = [_sample(xi, 1, l, Q)
               for Q in (F(100), F(1000), F(10000)) for l in (1, 2)]
    rows = pgn.check_sses(samples)
    assert rows
    for row in rows:
        assert row.verdict in ("HOLDS", "VIOLATED", "UNDECIDED")
    assert any(r.relation == "interlacing" for r in rows)


def test_transfer_round_trip_is_exact():
    for kind in pgn.TRANSFER_PRIMAL + pgn.TRANSFER_DUAL:
        for N, l in ((1, 1), (2, 2), (5, 3)):
            for v in (F(1), F(3, 2), F(7, 3)):
                exponent = RealInterval.point(v)
                psi = pgn.psi_from_lambda(exponent, N, l, kind)
                back = pgn.lambda_from_psi(psi, N, l, kind)
                assert back.lo == back.hi == v


def test_dirichlet_exponent_maps_to_zero_psi():
    # lambda_hat = 1/N corresponds to psi_bar = 0 exactly
    for N in (1, 2, 3, 5):
        psi = pgn.psi_from_lambda(RealInterval.point(F(1, N)), N, N, "LAMBDA_HAT")
        assert psi.lo == psi.hi == 0


def test_transfer_gates():
    with pytest.raises(DomainError):
        pgn.lambda_from_psi(RealInterval.point(F(-2)), 2, 1, "LAMBDA")
    with pytest.raises(DomainError):
        pgn.psi_from_lambda(RealInterval.point(F(1)), 2, 5, "LAMBDA")
    with pytest.raises(DomainError):
        pgn.psi_from_lambda(RealInterval.point(F(1)), 2, 1, "NOPE")


def test_sample_argument_validation():
    with pytest.raises(DomainError):
        pgn.psi_empirical(golden_ratio(), 1, 3, F(100), BOUND)
    with pytest.raises(DomainError):
        pgn.psi_empirical(golden_ratio(), 1, 1, F(1, 2), BOUND)
