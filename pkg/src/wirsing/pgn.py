"""Empirical parametric geometry of numbers.

For a target xi, dimension N and index l, the primal function psi(Q) is the
least exponent mu at which the system

    1 <= |x| <= Q^(1+mu),   max_{1<=i<=N} |xi^i x - y_i| <= Q^(-1/N+mu)

admits l linearly independent integer solutions; the dual function uses the
coefficient box max_j |x_j| <= Q^(1/N+mu) with |x_0 + x_1 xi + ...| < Q^(-1+mu).
Both are located by bisection on mu (the system is monotone in mu) with every
membership test certified in exact arithmetic.  Checkers for the duality and
Schmidt-Summerer inequalities operate on finite Q-grids and are diagnostics,
not proofs of the asymptotic statements.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import DomainError, InputError, PrecisionError, SearchExhausted
from .intervals import RealInterval
from .minpoints import matrix_rank_exact
from .targets import TargetNumber

PRIMAL = "PRIMAL"
DUAL = "DUAL"

DEFAULT_TOLERANCE = Fraction(1, 1000)
_MU_CEILING = Fraction(3)
_BOX_CAP = 200_000


@dataclass(frozen=True)
class PsiSample:
    Q: Fraction
    N: int
    l: int
    value: RealInterval
    side: str
    truncated: bool = False


@dataclass(frozen=True)
class DualityRow:
    Q: Fraction
    N: int
    l: int
    discrepancy: RealInterval
    within_tolerance: bool


@dataclass(frozen=True)
class SsesRow:
    relation: str
    N: int
    l: int
    slack: RealInterval
    verdict: str


def _check_sample_args(N: int, l: int, Q: Fraction) -> Fraction:
    if N < 1:
        raise DomainError("N must be >= 1")
    if not 1 <= l <= N + 1:
        raise DomainError(f"l={l} outside 1..{N + 1}")
    Q = Fraction(Q)
    if Q <= 1:
        raise DomainError("Q must exceed 1")
    return Q


def _cmp_threshold(get_iv, Q: Fraction, expo: Fraction) -> int:
    """Certified sign of value - Q^expo for a non-negative value closure."""
    # float screen first; the exact big-integer path only runs on close calls
    iv = get_iv(Fraction(1, 10 ** 30))
    rhs_f = float(Q) ** float(expo)
    guard = 1e-9 * rhs_f + 1e-300
    if float(iv.hi) < rhs_f - guard:
        return -1
    if float(iv.lo) > rhs_f + guard:
        return 1
    p, qd = expo.numerator, expo.denominator
    rhs = Q ** p
    width = Fraction(1, 10 ** 30)
    for _ in range(8):
        iv = get_iv(width)
        ivq = iv ** qd
        if ivq.hi < rhs:
            return -1
        if ivq.lo > rhs:
            return 1
        if ivq.lo == ivq.hi:
            return 0  # exact rational value sitting on the threshold
        width = width ** 2
    raise PrecisionError("threshold comparison undecided; boundary tie suspected")


def _max_x(Q: Fraction, expo: Fraction, cap: int) -> int:
    """Largest integer x >= 0 with x <= Q^expo, capped."""
    p, qd = expo.numerator, expo.denominator
    rhs = Q ** p
    x = max(0, int(float(Q) ** float(expo)))
    while Fraction(x + 1) ** qd <= rhs:
        x += 1
    while x >= 1 and Fraction(x) ** qd > rhs:
        x -= 1
    return min(x, cap)


class _IndependentSet:
    """Collects integer vectors, tracking exact rank; stops growing at l."""

    def __init__(self, l: int):
        self.l = l
        self.vectors: List[Tuple[int, ...]] = []

    def add(self, v: Tuple[int, ...]) -> bool:
        if any(v) and matrix_rank_exact(self.vectors + [list(v)]) > len(self.vectors):
            self.vectors.append(v)
        return len(self.vectors) >= self.l


def _y_range(xi: TargetNumber, j: int, x: int, Q: Fraction, expo: Fraction):
    """All integers y with |x xi^j - y| <= Q^expo, by expanding from the center."""
    iv = xi.power_enclosure(j, Fraction(1, 10 ** 30)) * x
    thr = float(Q) ** float(expo)
    lo_guess = math.floor(float(iv.lo) - thr) - 1
    hi_guess = math.ceil(float(iv.hi) + thr) + 1

    def dist(y):
        e = xi.exact_power(j)
        if e is not None:
            return lambda w: RealInterval.point(abs(x * e - y))
        return lambda w: abs(xi.power_enclosure(j, w / (2 * x)) * x - y)

    ys = []
    for y in range(lo_guess, hi_guess + 1):
        if _cmp_threshold(dist(y), Q, expo) <= 0:
            ys.append(y)
    if not ys:
        return []
    # sanity: the guessed window must cover the admissible set
    assert ys[0] > lo_guess and ys[-1] < hi_guess
    return ys


def _primal_has_l(xi: TargetNumber, N: int, l: int, Q: Fraction, mu: Fraction,
                  search_bound: int) -> Tuple[bool, bool]:
    """(found, capped): l independent solutions at this mu; cap bound note."""
    x_limit = _max_x(Q, 1 + mu, search_bound)
    capped = x_limit == search_bound and _max_x(Q, 1 + mu, search_bound + 1) > search_bound
    expo = mu - Fraction(1, N)
    found = _IndependentSet(l)
    for x in range(1, x_limit + 1):
        ranges = []
        total = 1
        for j in range(1, N + 1):
            ys = _y_range(xi, j, x, Q, expo)
            if not ys:
                ranges = None
                break
            ranges.append(ys)
            total *= len(ys)
            if total > _BOX_CAP:
                raise SearchExhausted(
                    f"admissible box at x={x} exceeds {_BOX_CAP} vectors; "
                    "lower mu range or Q")
        if ranges is None:
            continue
        for combo in itertools.product(*ranges):
            if found.add((x, *combo)):
                return True, capped
    return False, capped


def _dual_has_l(xi: TargetNumber, N: int, l: int, Q: Fraction, mu: Fraction,
                search_bound: int) -> Tuple[bool, bool]:
    h_limit = _max_x(Q, Fraction(1, N) + mu, search_bound)
    capped = h_limit == search_bound and _max_x(Q, Fraction(1, N) + mu,
                                                search_bound + 1) > search_bound
    if (2 * h_limit + 1) ** N > _BOX_CAP:
        raise SearchExhausted(
            f"dual coefficient box (2*{h_limit}+1)^{N} exceeds {_BOX_CAP}; "
            "reduce Q or the mu range")
    expo = mu - 1
    found = _IndependentSet(l)
    for avec in itertools.product(range(-h_limit, h_limit + 1), repeat=N):
        if any(avec) and next(a for a in avec if a) < 0:
            continue

        def value(a0, avec=avec):
            def get(w):
                t = RealInterval.point(a0)
                for j, a in enumerate(avec, start=1):
                    if a:
                        e = xi.exact_power(j)
                        iv = (RealInterval.point(e) if e is not None
                              else xi.power_enclosure(j, w))
                        t = t + iv * a
                return abs(t)
            return get

        mid = sum(a * float(xi.enclosure(Fraction(1, 10 ** 20)).midpoint()) ** j
                  for j, a in enumerate(avec, start=1))
        lo_guess = math.floor(-mid - float(Q) ** float(expo)) - 1
        hi_guess = math.ceil(-mid + float(Q) ** float(expo)) + 1
        for a0 in range(max(lo_guess, -h_limit), min(hi_guess, h_limit) + 1):
            if not any((a0, *avec)):
                continue
            if _cmp_threshold(value(a0), Q, expo) < 0:
                if found.add((a0, *avec)):
                    return True, capped
    return False, capped


def _bisect_psi(has_l, N: int, tolerance: Fraction) -> Tuple[RealInterval, bool]:
    truncated = False

    def probe(mu):
        nonlocal truncated
        found, capped = has_l(mu)
        if capped and not found:
            truncated = True
        return found

    hi = Fraction(0)
    while not probe(hi):
        hi += Fraction(1, 4)
        if hi > _MU_CEILING:
            raise SearchExhausted(
                "no admissible mu found up to the ceiling; raise search_bound")
    lo = hi - Fraction(1, 4) if hi > 0 else Fraction(-1)
    # invariant: probe(hi) true; probe(lo) false (mu near -1 shrinks the
    # error box below any fixed positive distance)
    while lo > -1 and probe(lo):
        lo, hi = lo - Fraction(1, 2), lo
    while hi - lo > tolerance:
        mid = (lo + hi) / 2
        if probe(mid):
            hi = mid
        else:
            lo = mid
    return RealInterval(lo, hi), truncated


def psi_empirical(xi: TargetNumber, N: int, l: int, Q, search_bound: int,
                  tolerance: Fraction = DEFAULT_TOLERANCE) -> PsiSample:
    """Least mu (within tolerance) admitting l independent primal solutions."""
    Q = _check_sample_args(N, l, Q)
    if search_bound < 1:
        raise DomainError("search_bound must be >= 1")
    value, truncated = _bisect_psi(
        lambda mu: _primal_has_l(xi, N, l, Q, mu, search_bound), N, tolerance)
    return PsiSample(Q, N, l, value, PRIMAL, truncated)


def psi_star_empirical(xi: TargetNumber, N: int, l: int, Q, search_bound: int,
                       tolerance: Fraction = DEFAULT_TOLERANCE) -> PsiSample:
    """Least mu (within tolerance) admitting l independent dual solutions."""
    Q = _check_sample_args(N, l, Q)
    if search_bound < 1:
        raise DomainError("search_bound must be >= 1")
    value, truncated = _bisect_psi(
        lambda mu: _dual_has_l(xi, N, l, Q, mu, search_bound), N, tolerance)
    return PsiSample(Q, N, l, value, DUAL, truncated)


def check_l_monotonicity(samples: Sequence[PsiSample]) -> None:
    """Assert psi values are non-decreasing in l at every fixed (side, N, Q)."""
    groups: Dict[Tuple, List[PsiSample]] = {}
    for s in samples:
        groups.setdefault((s.side, s.N, s.Q), []).append(s)
    for key, batch in groups.items():
        batch.sort(key=lambda s: s.l)
        for a, b in zip(batch, batch[1:]):
            if b.value.hi < a.value.lo:
                raise InputError(
                    f"psi not monotone in l for {key}: l={b.l} below l={a.l}")


# ---------------------------------------------------------------------------
# transfer identities


TRANSFER_PRIMAL = ("LAMBDA", "LAMBDA_HAT")
TRANSFER_DUAL = ("W", "W_HAT")


def _check_transfer_args(N: int, l: int, kind: str) -> None:
    if N < 1:
        raise DomainError("N must be >= 1")
    if not 1 <= l <= N + 1:
        raise DomainError(f"l={l} outside 1..{N + 1}")
    if kind not in TRANSFER_PRIMAL + TRANSFER_DUAL:
        raise DomainError(f"unknown exponent kind {kind!r}")


def lambda_from_psi(psi: RealInterval, N: int, l: int, kind: str) -> RealInterval:
    """Exponent from psi via the exact identities.

    (1 + lambda)(1 + psi_under) = (N+1)/N, (1 + lambda_hat)(1 + psi_bar) = (N+1)/N
    for the primal kinds, and (1 + w)(psi* + 1/N) = (N+1)/N and its hatted
    twin for the dual kinds.
    """
    _check_transfer_args(N, l, kind)
    factor = (psi + 1) if kind in TRANSFER_PRIMAL else (psi + Fraction(1, N))
    if not factor.certainly_positive():
        raise DomainError("transfer identity needs a certainly positive factor")
    return RealInterval.point(Fraction(N + 1, N)) / factor - 1


def psi_from_lambda(exponent: RealInterval, N: int, l: int, kind: str) -> RealInterval:
    """Inverse of lambda_from_psi; exact interval algebra."""
    _check_transfer_args(N, l, kind)
    factor = exponent + 1
    if not factor.certainly_positive():
        raise DomainError("transfer identity needs a certainly positive factor")
    psi = RealInterval.point(Fraction(N + 1, N)) / factor
    return psi - 1 if kind in TRANSFER_PRIMAL else psi - Fraction(1, N)


# ---------------------------------------------------------------------------
# duality and Schmidt-Summerer checkers


def check_duality(samples: Sequence[PsiSample],
                  tolerance: Fraction = Fraction(1, 5)) -> List[DualityRow]:
    """Finite-Q duality report: psi*_{N,l}(Q) + psi_{N,N+2-l}(Q) per pair.

    The asymptotic statement is an equality of lim inf/lim sup pairs; at
    finite Q the sum is only O(1/log Q) small, so rows report magnitude
    against the given tolerance instead of asserting exactness.
    """
    primal = {(s.N, s.l, s.Q): s for s in samples if s.side == PRIMAL}
    duals = [s for s in samples if s.side == DUAL]
    if not duals:
        raise InputError("check_duality needs at least one DUAL sample")
    rows = []
    for d in duals:
        mate = primal.get((d.N, d.N + 2 - d.l, d.Q))
        if mate is None:
            raise InputError(
                f"no PRIMAL sample (N={d.N}, l={d.N + 2 - d.l}, Q={d.Q}) "
                f"to pair with the DUAL l={d.l} sample")
        disc = d.value + mate.value
        rows.append(DualityRow(d.Q, d.N, d.l, disc,
                               abs(disc).hi <= tolerance))
    return rows


def _grid_hull(batch: List[PsiSample], want_max: bool) -> RealInterval:
    lo = max(s.value.lo for s in batch) if want_max else min(s.value.lo for s in batch)
    hi = max(s.value.hi for s in batch) if want_max else min(s.value.hi for s in batch)
    return RealInterval(lo, hi)


def _verdict(slack: RealInterval) -> str:
    if slack.lo >= 0:
        return "HOLDS"
    if slack.hi < 0:
        return "VIOLATED"
    return "UNDECIDED"


def check_sses(samples: Sequence[PsiSample]) -> List[SsesRow]:
    """Grid surrogates for the Schmidt-Summerer inequalities.

    Max/min over the shared Q-grid stand in for lim sup/lim inf; verdicts are
    diagnostics of the finite data, not of the limit statements.
    """
    primal = [s for s in samples if s.side == PRIMAL]
    if not primal:
        raise InputError("check_sses needs PRIMAL samples")
    N = primal[0].N
    if any(s.N != N for s in primal):
        raise InputError("check_sses needs a single N per batch")
    by_l: Dict[int, List[PsiSample]] = {}
    for s in primal:
        by_l.setdefault(s.l, []).append(s)
    grid = {s.Q for s in primal}
    for l in range(1, N + 2):
        if l not in by_l or {s.Q for s in by_l[l]} != grid:
            raise InputError(
                f"check_sses needs samples for every l in 1..{N + 1} "
                f"on a shared Q-grid (missing or partial l={l})")
    rows = []
    top = _grid_hull(by_l[N + 1], want_max=True)
    bottom = _grid_hull(by_l[N + 1], want_max=False)
    for l in range(1, N + 2):
        bar_l = _grid_hull(by_l[l], want_max=True)
        under_l = _grid_hull(by_l[l], want_max=False)
        slack_a = bar_l * l + bottom * (N + 1 - l)
        slack_b = under_l * l + top * (N + 1 - l)
        rows.append(SsesRow("minima-sum-upper", N, l, slack_a, _verdict(slack_a)))
        rows.append(SsesRow("minima-sum-lower", N, l, slack_b, _verdict(slack_b)))
    for l in range(1, N + 1):
        slack = _grid_hull(by_l[l], True) - _grid_hull(by_l[l + 1], False)
        rows.append(SsesRow("interlacing", N, l, slack, _verdict(slack)))
    return rows


def serialize_samples(samples: Sequence[PsiSample]) -> str:
    """Columnar text: Q N l side lo hi truncated."""
    lines = ["Q\tN\tl\tside\tlo\thi\ttruncated"]
    for s in samples:
        lines.append(f"{s.Q}\t{s.N}\t{s.l}\t{s.side}\t"
                     f"{float(s.value.lo):.6f}\t{float(s.value.hi):.6f}\t"
                     f"{int(s.truncated)}")
    return "\n".join(lines) + "\n"
