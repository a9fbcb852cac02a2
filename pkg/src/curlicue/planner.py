"""Feasibility algebra for displacement and bandwidth selection.

One window at displacement x addresses targets n with trial factors
1..sqrt(n) inside the covered ratio interval; the bandwidth ratio
beta = lambda_max/lambda_min caps the single-window reach at beta**2.
Larger targets need a schedule of runs at geometrically shrinking x, either
for one number (ratio beta) or for a whole range of numbers (ratio gamma).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .errors import DegenerateBandwidth, InsufficientBandwidth
from .interferometer import SpectralWindow

# Order of magnitude of the observable universe, in meters.
UNIVERSE_SIZE_EXPONENT_M = 27


@dataclass(frozen=True)
class BandwidthSummary:
    """Bandwidth ratio of a window and the single-window target ceiling beta**2."""

    beta: float
    single_window_n_max: float


@dataclass(frozen=True)
class PlanRun:
    """One measurement: displacement x_nm covering ratios xi in [xi_lo, xi_hi]."""

    x_nm: float
    xi_lo: float
    xi_hi: float


@dataclass(frozen=True)
class MeasurementPlan:
    """Ordered runs at geometrically decreasing x with contiguous coverage."""

    scheme: str  # "single-number" or "number-range"
    ratio: float
    runs: tuple[PlanRun, ...]

    @property
    def n_runs(self) -> int:
        return len(self.runs)


@dataclass(frozen=True)
class DisplacementEstimate:
    """Required displacement for a digit-count target, mantissa * 10**exponent meters."""

    mantissa: float
    exponent: int

    @property
    def exceeds_universe_size(self) -> bool:
        return self.exponent > UNIVERSE_SIZE_EXPONENT_M or (
            self.exponent == UNIVERSE_SIZE_EXPONENT_M and self.mantissa >= 1.0
        )


def _checked_x(x_nm: float) -> float:
    if not (isinstance(x_nm, (int, float)) and math.isfinite(x_nm) and x_nm > 0):
        raise ValueError(f"x_nm must be a positive finite number, got {x_nm!r}")
    return float(x_nm)


def factorable_range(x_nm: float, window: SpectralWindow) -> Optional[tuple[float, float]]:
    """Interval (n_min, n_max) of targets addressable by one run at displacement x.

    n_min = (x/lambda_max)**2 comes from needing trial factors down to
    sqrt(n); n_max = x/lambda_min from the largest reachable ratio.  Returns
    None when the interval is empty (x too large for the bandwidth).
    """
    _checked_x(x_nm)
    n_min = (x_nm / window.lambda_max_nm) ** 2
    n_max = x_nm / window.lambda_min_nm
    # the tolerance keeps the exact collapse point x = lambda_max**2/lambda_min
    # feasible in the face of rounding
    if n_min > n_max * (1.0 + 1e-12):
        return None
    return n_min, n_max


def max_displacement(window: SpectralWindow) -> float:
    """Largest displacement (nm) for which factorable_range is still nonempty."""
    return window.lambda_max_nm**2 / window.lambda_min_nm


def bandwidth_summary(window: SpectralWindow) -> BandwidthSummary:
    """Bandwidth ratio beta and the single-window ceiling beta**2."""
    beta = window.lambda_max_nm / window.lambda_min_nm
    return BandwidthSummary(beta=beta, single_window_n_max=beta * beta)


def _run_count(n_top: int, ratio: float) -> int:
    # ceil(log_ratio sqrt(n_top)), nudged so exact powers do not round up,
    # then bumped if float error left sqrt(n_top) uncovered.
    count = max(1, math.ceil(0.5 * math.log(n_top) / math.log(ratio) - 1e-12))
    while ratio**count < math.sqrt(n_top) * (1.0 - 1e-12):
        count += 1
    return count


def plan_single_number(n: int, window: SpectralWindow) -> MeasurementPlan:
    """Schedule covering every trial factor in [1, sqrt(n)] for one target.

    Run i uses x_i = n*lambda_min / beta**i, so run i covers the ratio
    interval [beta**i, beta**(i+1)] and consecutive runs tile [1, sqrt(n)]
    with no gaps (the last run may overshoot by up to one beta factor).
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 4:
        raise ValueError(f"n must be an integer >= 4, got {n!r}")
    beta = window.lambda_max_nm / window.lambda_min_nm
    if beta <= 1.0 + 1e-9:
        raise DegenerateBandwidth(f"bandwidth ratio beta={beta!r} is too close to 1 to schedule runs")
    runs = []
    x = n * window.lambda_min_nm
    for _ in range(_run_count(n, beta)):
        runs.append(PlanRun(x_nm=x, xi_lo=n * window.lambda_min_nm / x, xi_hi=n * window.lambda_max_nm / x))
        x /= beta
    return MeasurementPlan(scheme="single-number", ratio=beta, runs=tuple(runs))


def plan_number_range(n_min: int, n_max: int, window: SpectralWindow) -> MeasurementPlan:
    """Schedule covering trial factors for every target in [n_min, n_max].

    The per-run shrink ratio gamma = beta * n_min/n_max is what every target
    in the range is guaranteed to advance by per run; gamma must exceed 1,
    otherwise the window cannot serve the whole range and the error reports
    the minimum bandwidth that would.
    """
    for label, value in (("n_min", n_min), ("n_max", n_max)):
        if not isinstance(value, int) or isinstance(value, bool):
            raise ValueError(f"{label} must be an integer, got {value!r}")
    if not 4 <= n_min < n_max:
        raise ValueError(f"need 4 <= n_min < n_max, got ({n_min}, {n_max})")
    beta = window.lambda_max_nm / window.lambda_min_nm
    gamma = beta * n_min / n_max
    if gamma <= 1.0:
        raise InsufficientBandwidth(gamma=gamma, min_beta=n_max / n_min)
    runs = []
    x = n_max * window.lambda_min_nm
    for _ in range(_run_count(n_max, gamma)):
        runs.append(
            PlanRun(
                x_nm=x,
                xi_lo=n_max * window.lambda_min_nm / x,
                xi_hi=n_min * window.lambda_max_nm / x,
            )
        )
        x /= gamma
    return MeasurementPlan(scheme="number-range", ratio=gamma, runs=tuple(runs))


def displacement_estimate(digits: int, lambda_min_nm: float) -> DisplacementEstimate:
    """Displacement x = 10**digits * lambda_min needed to reach a digit-count
    target in one window, reported in meters as mantissa * 10**exponent.

    Exponent arithmetic is exact in the digit count, so arbitrarily large
    targets are representable.  Check exceeds_universe_size before taking
    the number seriously as an experiment.
    """
    if not isinstance(digits, int) or isinstance(digits, bool) or digits < 1:
        raise ValueError(f"digits must be an integer >= 1, got {digits!r}")
    if not (math.isfinite(lambda_min_nm) and lambda_min_nm > 0):
        raise ValueError(f"lambda_min_nm must be positive and finite, got {lambda_min_nm!r}")
    lam_log10 = math.log10(lambda_min_nm)
    lam_exp = math.floor(lam_log10)
    mantissa = 10.0 ** (lam_log10 - lam_exp)
    exponent = digits + lam_exp - 9  # nm -> m
    if mantissa >= 10.0:
        mantissa /= 10.0
        exponent += 1
    return DisplacementEstimate(mantissa=mantissa, exponent=exponent)
