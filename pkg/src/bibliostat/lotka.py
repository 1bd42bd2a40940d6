"""Lotka's law: log-log least squares fit, zeta-based constant and K-S check.

The fitted law is ``y(x) = C / x**alpha``: the share of authors with ``x``
papers. ``alpha`` comes from an ordinary least-squares line through the
base-10 log points ``(log x, log y)``; ``C`` makes the proportions sum to
one over x = 1..inf, i.e. ``C = 1 / zeta(alpha)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .corpus import ProductivityHistogram
from .errors import DegenerateFit, DivergentSeries, MismatchedSupport
from .variant import Variant

ZETA_TERMS = 100_000
KS_COEFFICIENTS = {0.01: 1.63, 0.05: 1.36}


@dataclass(frozen=True)
class LoglogRegression:
    sum_x: float
    sum_y: float
    sum_xy: float
    sum_x2: float
    n_points: int
    slope: float
    intercept: float

    @property
    def exponent(self) -> float:
        return -self.slope


@dataclass(frozen=True)
class LotkaFit:
    regression: LoglogRegression
    constant: float
    histogram: ProductivityHistogram

    @property
    def exponent(self) -> float:
        return self.regression.exponent

    def predicted(self) -> np.ndarray:
        """Expected author counts over the histogram support."""
        return expected_distribution(self.exponent, self.constant, self.histogram.x) * self.histogram.total


@dataclass(frozen=True)
class KsRow:
    x: int
    y: int
    observed: float
    observed_cumulative: float
    expected: float
    expected_cumulative: float
    difference: float


@dataclass(frozen=True)
class KsResult:
    exponent: float
    constant: float
    rows: tuple[KsRow, ...]
    d_max: float
    d_max_at_x: int
    critical_value: float
    significance_level: float
    variant: Variant
    single_author_share: float

    @property
    def verdict(self) -> str:
        return "fits" if self.d_max <= self.critical_value else "rejected"


def loglog_least_squares(hist: ProductivityHistogram) -> LoglogRegression:
    """Least-squares line through ``(log10 x, log10 y)``; zero-count buckets are dropped."""
    return loglog_fit_points(hist.x, hist.y)


def loglog_fit_points(x: Sequence[float], y: Sequence[float]) -> LoglogRegression:
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.shape != y.shape:
        raise MismatchedSupport("x and y differ in length")
    keep = y > 0
    if keep.sum() < 2:
        raise DegenerateFit("need at least two non-empty productivity buckets")
    lx, ly = np.log10(x[keep]), np.log10(y[keep])
    n = int(keep.sum())
    sx, sy = math.fsum(lx), math.fsum(ly)
    sxy, sx2 = math.fsum(lx * ly), math.fsum(lx * lx)
    if np.ptp(lx) == 0:
        raise DegenerateFit("all productivity values identical; slope undefined")
    # centered form of (n*Sxy - Sx*Sy) / (n*Sxx - Sx**2); avoids cancellation
    dx, dy = lx - sx / n, ly - sy / n
    slope = math.fsum(dx * dy) / math.fsum(dx * dx)
    intercept = (sy - slope * sx) / n
    return LoglogRegression(sx, sy, sxy, sx2, n, slope, intercept)


def riemann_zeta(s: float, terms: int = ZETA_TERMS) -> float:
    """zeta(s) for real s > 1 by direct summation plus an Euler-Maclaurin tail.

    ``sum_{x<=M} x**-s + M**(1-s)/(s-1) - M**-s/2``; truncation error is of
    order ``s * M**(-s-1) / 12``.
    """
    if s <= 1:
        raise DivergentSeries(f"zeta({s}) diverges; exponent must exceed 1")
    m = int(terms)
    head = math.fsum(np.arange(m, 0, -1, dtype=float) ** -s)
    return head + m ** (1.0 - s) / (s - 1.0) - 0.5 * m ** -s


def lotka_constant(exponent: float) -> float:
    return 1.0 / riemann_zeta(exponent)


def fit_lotka(hist: ProductivityHistogram) -> LotkaFit:
    reg = loglog_least_squares(hist)
    return LotkaFit(reg, lotka_constant(reg.exponent), hist)


def expected_distribution(exponent: float, constant: float, x_values: Sequence[int]) -> np.ndarray:
    """``C / x**alpha`` per x, not renormalized over the truncated support."""
    if exponent <= 1:
        raise DivergentSeries(f"exponent {exponent} must exceed 1")
    if not 0 < constant <= 1:
        raise ValueError(f"Lotka constant must lie in (0, 1], got {constant}")
    return constant / np.asarray(x_values, dtype=float) ** exponent


def max_deviation(a: Sequence[float], b: Sequence[float], cumulative: bool = True) -> tuple[float, int]:
    """Largest absolute gap between two distributions and its index."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape != b.shape:
        raise MismatchedSupport(f"distributions have {a.size} and {b.size} points")
    if cumulative:
        a, b = np.cumsum(a), np.cumsum(b)
    gap = np.abs(a - b)
    i = int(np.argmax(gap))
    return float(gap[i]), i


def ks_dmax(hist: ProductivityHistogram, expected: Sequence[float],
            variant: Variant | str = Variant.STANDARD) -> tuple[tuple[KsRow, ...], float, int]:
    """Observed vs expected rows, D-max and the x where it occurs.

    standard compares cumulative distributions (the textbook K-S statistic).
    paper takes the largest gap between the per-x proportions instead.
    """
    variant = Variant.coerce(variant)
    expected = np.asarray(expected, dtype=float)
    if expected.size != len(hist):
        raise MismatchedSupport(f"{expected.size} expected proportions for {len(hist)} histogram buckets")
    n = hist.total
    if n <= 0:
        raise ValueError("histogram has no authors")
    observed = np.asarray(hist.y, dtype=float) / n
    obs_cum, exp_cum = np.cumsum(observed), np.cumsum(expected)
    diff = obs_cum - exp_cum if variant is Variant.STANDARD else observed - expected
    d_max, i = max_deviation(observed, expected, cumulative=variant is Variant.STANDARD)
    rows = tuple(
        KsRow(x, y, float(o), float(oc), float(e), float(ec), float(d))
        for x, y, o, oc, e, ec, d in zip(hist.x, hist.y, observed, obs_cum, expected, exp_cum, diff)
    )
    return rows, d_max, hist.x[i]


def ks_critical_value(n: int, level: float = 0.01, variant: Variant | str = Variant.STANDARD,
                      exponent: float | None = None) -> float:
    """Critical D at the given significance level for ``n`` authors.

    standard: ``1.63/sqrt(n)`` at 0.01, ``1.36/sqrt(n)`` at 0.05.
    paper: ``exponent/sqrt(n)`` irrespective of the level.
    """
    variant = Variant.coerce(variant)
    if n <= 0:
        raise ValueError("author count must be positive")
    if variant is Variant.PAPER:
        if exponent is None:
            raise ValueError("paper-variant critical value needs the fitted exponent")
        return exponent / math.sqrt(n)
    try:
        coeff = KS_COEFFICIENTS[float(level)]
    except KeyError:
        raise ValueError(f"unsupported significance level {level}; use 0.01 or 0.05") from None
    return coeff / math.sqrt(n)


def lotka_verdict(fit: LotkaFit, hist: ProductivityHistogram | None = None, level: float = 0.01,
                  variant: Variant | str = Variant.STANDARD, alpha: float | None = None) -> KsResult:
    """K-S comparison of the histogram against Lotka's law.

    ``alpha`` overrides the tested exponent (e.g. 2.0 for the inverse-square
    law); the paper-variant critical value always uses the fitted exponent so
    both runs share one threshold.
    """
    variant = Variant.coerce(variant)
    hist = fit.histogram if hist is None else hist
    if alpha is None:
        exponent, constant = fit.exponent, fit.constant
    else:
        exponent, constant = float(alpha), lotka_constant(alpha)
    expected = expected_distribution(exponent, constant, hist.x)
    rows, d_max, at_x = ks_dmax(hist, expected, variant)
    critical = ks_critical_value(hist.total, level, variant, fit.exponent)
    single = hist.y[hist.x.index(1)] / hist.total if 1 in hist.x else 0.0
    return KsResult(exponent, constant, rows, d_max, at_x, critical, float(level), variant, single)
