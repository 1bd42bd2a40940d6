"""Year-wise output statistics: growth rate, cumulative shares, RGR and doubling time."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import DivisionByZero, EmptyPeriod, InvalidPeriods, NonPositiveOutput, UndefinedDoublingTime
from .variant import Variant

DOUBLING_CONSTANT = 0.693
# |rgr| below this prints as 0.000 and is treated as the identity first-year row
ZERO_RGR = 5e-4


@dataclass(frozen=True)
class GrowthRow:
    year: int
    output: int
    share: float
    cumulative: int
    cumulative_share: float
    growth_rate: float | None


@dataclass(frozen=True)
class GrowthTable:
    rows: tuple[GrowthRow, ...]
    mean_growth_rate: float | None

    @property
    def total(self) -> int:
        return self.rows[-1].cumulative if self.rows else 0


@dataclass(frozen=True)
class RgrRow:
    year: int
    output: int
    cumulative: int
    w1: float
    w2: float
    rgr: float | None
    doubling_time: float | None


@dataclass(frozen=True)
class PeriodMean:
    start: int
    end: int
    mean_rgr: float
    mean_doubling_time: float | None


def annual_growth_rate(prev_output: int, curr_output: int) -> float:
    """Ratio of the previous year's output to the current year's.

    Values below 1 mean output grew.
    """
    if curr_output == 0:
        raise DivisionByZero("growth rate undefined for a year with zero output")
    return prev_output / curr_output


def growth_table(series: Mapping[int, int]) -> GrowthTable:
    if not series:
        raise ValueError("growth_table needs at least one year")
    years = sorted(series)
    total = sum(series[y] for y in years)
    rows, rates = [], []
    cum = 0
    prev = None
    for year in years:
        out = series[year]
        cum += out
        rate = None if prev is None else annual_growth_rate(prev, out)
        if rate is not None:
            rates.append(rate)
        rows.append(GrowthRow(year, out, out / total if total else 0.0, cum,
                              cum / total if total else 0.0, rate))
        prev = out
    mean = sum(rates) / len(rates) if rates else None
    return GrowthTable(tuple(rows), mean)


def doubling_time(rgr: float) -> float:
    if rgr == 0:
        raise UndefinedDoublingTime("doubling time undefined for zero growth")
    return DOUBLING_CONSTANT / rgr


def relative_growth_rate(series: Mapping[int, int], variant: Variant | str = Variant.STANDARD) -> list[RgrRow]:
    """Relative growth rate per year with natural logs.

    standard: ``ln(cum[t]) - ln(cum[t-1])``, undefined for the first year.
    paper: ``ln(cum[t]) - ln(output[t])``; the first year is identically
    zero.
    """
    variant = Variant.coerce(variant)
    rows = []
    cum = 0
    prev_w2 = None
    for year in sorted(series):
        out = series[year]
        if out <= 0:
            raise NonPositiveOutput(f"{year}: output {out} must be positive for log growth rates")
        cum += out
        w1, w2 = math.log(out), math.log(cum)
        if variant is Variant.PAPER:
            rgr = w2 - w1
        else:
            rgr = None if prev_w2 is None else w2 - prev_w2
        dt = doubling_time(rgr) if rgr else None
        rows.append(RgrRow(year, out, cum, w1, w2, rgr, dt))
        prev_w2 = w2
    return rows


def split_periods(years: Sequence[int], n: int = 2) -> list[tuple[int, int]]:
    """Split sorted years into ``n`` contiguous blocks of near-equal length."""
    years = sorted(years)
    if not years:
        return []
    n = max(1, min(n, len(years)))
    size, extra = divmod(len(years), n)
    out, i = [], 0
    for k in range(n):
        step = size + (1 if k < extra else 0)
        out.append((years[i], years[i + step - 1]))
        i += step
    return out


def period_means(rows: Sequence[RgrRow], periods: Sequence[tuple[int, int]],
                 variant: Variant | str = Variant.STANDARD) -> tuple[list[PeriodMean], float | None]:
    """Mean RGR (and, for the paper variant, mean doubling time) per year block.

    Returns the per-period means and the grand mean doubling time, which is
    the mean of the period means. The paper-variant doubling-time mean
    averages ``|Dt|`` and skips rows whose RGR is zero at print precision.
    """
    variant = Variant.coerce(variant)
    by_year = {r.year: r for r in rows}
    covered: list[int] = []
    result = []
    for start, end in periods:
        if start > end:
            raise InvalidPeriods(f"period {start}-{end} is reversed")
        block = [by_year[y] for y in sorted(by_year) if start <= y <= end]
        if not block:
            raise EmptyPeriod(f"period {start}-{end} contains no rows")
        covered.extend(r.year for r in block)
        rgrs = [r.rgr for r in block if r.rgr is not None]
        if not rgrs:
            raise EmptyPeriod(f"period {start}-{end} has no defined growth rates")
        mean_dt = None
        if variant is Variant.PAPER:
            dts = [abs(DOUBLING_CONSTANT / r) for r in rgrs if abs(r) >= ZERO_RGR]
            mean_dt = sum(dts) / len(dts) if dts else None
        result.append(PeriodMean(start, end, sum(rgrs) / len(rgrs), mean_dt))
    if sorted(covered) != sorted(by_year) or len(set(covered)) != len(covered):
        raise InvalidPeriods("periods must partition the row years")
    grand = None
    if variant is Variant.PAPER and all(p.mean_doubling_time is not None for p in result):
        grand = sum(p.mean_doubling_time for p in result) / len(result)
    return result, grand
