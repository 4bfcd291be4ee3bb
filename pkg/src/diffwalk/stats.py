"""Small statistics kit with pinned estimator definitions.

Downstream results (saturation summaries, skewness fractions, hub
correlations) are sensitive to estimator conventions, so each one is fixed
here rather than delegated:

* ``ols_fit``: ordinary least squares via centered sums; ``r_squared`` is
  ``1 - SS_res / SS_tot``, defined as 0 when ``SS_tot == 0``.
* ``skewness``: the biased moment estimator ``g1 = m3 / m2**1.5`` with
  n-divisor central moments, no small-sample correction.
* ``percentile``: linear interpolation between closest ranks, rank position
  ``q / 100 * (n - 1)`` on the sorted sample.
* ``pearson``: sample correlation coefficient from centered sums.
"""

from dataclasses import dataclass

import numpy as np

__all__ = [
    "DegenerateInputError",
    "RegressionFit",
    "SampleSummary",
    "ols_fit",
    "skewness",
    "percentile",
    "pearson",
    "summarize",
]


class DegenerateInputError(ValueError):
    """Estimator input has no usable variation (constant xs, zero variance, ...)."""


@dataclass(frozen=True)
class RegressionFit:
    slope: float
    intercept: float
    r_squared: float


@dataclass(frozen=True)
class SampleSummary:
    """Median / 5th / 95th percentile / skewness of a sample.

    ``skewness`` is None when undefined (fewer than 3 values or zero
    variance); the percentiles are always defined for count >= 1.
    """

    median: float
    p05: float
    p95: float
    skewness: float | None
    count: int


def _as_float_array(values, name: str) -> np.ndarray:
    arr = np.asarray(values, dtype=np.float64)
    if arr.ndim != 1:
        raise ValueError(f"{name} must be one-dimensional")
    return arr


def ols_fit(xs, ys) -> RegressionFit:
    """Least-squares line of ys against xs.

    Raises DegenerateInputError when fewer than 2 points or all xs equal
    (vertical data has no OLS line); callers fall back to the regular-graph
    criterion in that case.
    """
    x = _as_float_array(xs, "xs")
    y = _as_float_array(ys, "ys")
    if x.shape != y.shape:
        raise ValueError("xs and ys must have equal length")
    if x.size < 2:
        raise DegenerateInputError("need at least 2 points")
    dx = x - x.mean()
    dy = y - y.mean()
    sxx = float(dx @ dx)
    if sxx == 0.0:
        raise DegenerateInputError("xs are all equal")
    sxy = float(dx @ dy)
    syy = float(dy @ dy)
    slope = sxy / sxx
    intercept = float(y.mean() - slope * x.mean())
    if syy == 0.0:
        r_squared = 0.0
    else:
        # SS_res = Syy - Sxy^2 / Sxx, so R^2 = Sxy^2 / (Sxx * Syy).
        r_squared = min(1.0, max(0.0, (sxy * sxy) / (sxx * syy)))
    return RegressionFit(slope=slope, intercept=intercept, r_squared=r_squared)


def skewness(samples) -> float:
    """Biased moment skewness g1 = m3 / m2**1.5 (central moments, n divisor)."""
    x = _as_float_array(samples, "samples")
    if x.size < 3:
        raise DegenerateInputError("need at least 3 samples")
    d = x - x.mean()
    m2 = float(d @ d) / x.size
    if m2 == 0.0:
        raise DegenerateInputError("zero variance")
    m3 = float((d * d) @ d) / x.size
    return m3 / m2**1.5


def percentile(samples, q: float) -> float:
    """q-th percentile, linear interpolation between closest ranks."""
    x = _as_float_array(samples, "samples")
    if x.size < 1:
        raise ValueError("need at least 1 sample")
    if not 0.0 <= q <= 100.0:
        raise ValueError("q must be in [0, 100]")
    xs = np.sort(x)
    pos = q / 100.0 * (xs.size - 1)
    lo = int(np.floor(pos))
    hi = int(np.ceil(pos))
    frac = pos - lo
    lo_val, hi_val = float(xs[lo]), float(xs[hi])
    # two-sided lerp keeps the endpoints exact; the clamp guards the
    # remaining half-ulp cases so results never leave [lo_val, hi_val]
    gap = hi_val - lo_val
    if frac <= 0.5:
        value = lo_val + frac * gap
    else:
        value = hi_val - (1.0 - frac) * gap
    return min(max(value, lo_val), hi_val)


def pearson(xs, ys) -> float:
    """Sample Pearson correlation coefficient."""
    x = _as_float_array(xs, "xs")
    y = _as_float_array(ys, "ys")
    if x.shape != y.shape:
        raise ValueError("xs and ys must have equal length")
    if x.size < 2:
        raise DegenerateInputError("need at least 2 points")
    dx = x - x.mean()
    dy = y - y.mean()
    sxx = float(dx @ dx)
    syy = float(dy @ dy)
    if sxx == 0.0 or syy == 0.0:
        raise DegenerateInputError("zero variance input")
    r = float(dx @ dy) / np.sqrt(sxx * syy)
    return min(1.0, max(-1.0, r))


def summarize(samples) -> SampleSummary:
    """Median/p05/p95/skewness summary; skewness is None where undefined."""
    x = _as_float_array(samples, "samples")
    try:
        skew = skewness(x)
    except DegenerateInputError:
        skew = None
    return SampleSummary(
        median=percentile(x, 50.0),
        p05=percentile(x, 5.0),
        p95=percentile(x, 95.0),
        skewness=skew,
        count=int(x.size),
    )
