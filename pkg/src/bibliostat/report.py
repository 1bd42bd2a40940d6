"""Assemble and render the six result tables.

Each table is a :class:`Table` with named columns, plain rows and a summary
mapping. JSON output keeps full precision; markdown and CSV use the
per-column display formats.
"""
from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Iterable, Mapping, Sequence

from . import collaboration as co
from . import growth as gr
from . import lotka as lk
from .corpus import (
    MAX_AUTHORS,
    AuthorshipMatrix,
    ProductivityHistogram,
    PublicationRecord,
    build_authorship_matrix,
    build_productivity_histogram,
    yearly_output_series,
)
from .errors import BibliostatError
from .ingest import AggregateFixture, Diagnostic
from .variant import Variant

TABLE_NAMES = ("growth", "authorship-matrix", "collaboration", "lotka-fit", "ks", "rgr-dt")


@dataclass
class Table:
    name: str
    title: str
    columns: list[str]
    rows: list[list[Any]]
    summary: dict[str, Any] = field(default_factory=dict)
    formats: dict[str, str] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"title": self.title, "columns": list(self.columns), "rows": [list(r) for r in self.rows],
                "summary": self.summary, "formats": dict(self.formats)}

    @classmethod
    def from_dict(cls, name: str, data: Mapping) -> "Table":
        return cls(name, data["title"], list(data["columns"]), [list(r) for r in data["rows"]],
                   dict(data.get("summary", {})), dict(data.get("formats", {})))

    def column(self, name: str) -> list[Any]:
        i = self.columns.index(name)
        return [r[i] for r in self.rows]

    def row_for(self, key: Any) -> dict[str, Any]:
        for r in self.rows:
            if r[0] == key:
                return dict(zip(self.columns, r))
        raise KeyError(key)


@dataclass
class Report:
    variant: Variant
    level: float
    tables: dict[str, Table]

    def to_dict(self) -> dict:
        return {"variant": self.variant.value, "level": self.level,
                "tables": {name: t.to_dict() for name, t in self.tables.items()}}

    @classmethod
    def from_dict(cls, data: Mapping) -> "Report":
        return cls(Variant.coerce(data["variant"]), data["level"],
                   {name: Table.from_dict(name, t) for name, t in data["tables"].items()})


@dataclass(frozen=True)
class Dataset:
    """Everything the metrics need, from either raw records or a fixture."""

    series: dict[int, int]
    matrix: AuthorshipMatrix
    histogram: ProductivityHistogram
    diagnostics: tuple[Diagnostic, ...] = ()

    @classmethod
    def from_fixture(cls, fixture: AggregateFixture) -> "Dataset":
        return cls(fixture.yearly_output(), fixture.authorship_matrix(), fixture.productivity)

    @classmethod
    def from_records(cls, records: Sequence[PublicationRecord], diagnostics: Iterable[Diagnostic] = (),
                     top_bucket: int = MAX_AUTHORS, fold: bool = True) -> "Dataset":
        return cls(yearly_output_series(records), build_authorship_matrix(records),
                   build_productivity_histogram(records, top_bucket, fold), tuple(diagnostics))


# -- table builders ---------------------------------------------------------

def growth_report(series: Mapping[int, int]) -> Table:
    table = gr.growth_table(series)
    rows = [[r.year, r.output, r.share, r.cumulative, r.cumulative_share, r.growth_rate] for r in table.rows]
    return Table(
        "growth", "Year-wise distribution and growth rate of publications",
        ["year", "output", "share", "cumulative", "cumulative_share", "growth_rate"], rows,
        {"total": table.total, "mean_growth_rate": table.mean_growth_rate},
        {"share": "pct2", "cumulative_share": "pct2", "growth_rate": ".3f"},
    )


def authorship_report(matrix: AuthorshipMatrix) -> Table:
    bucket_cols = [f"a{j}" for j in range(1, MAX_AUTHORS + 1)]
    total = matrix.total_papers
    rows = []
    for year, buckets in matrix.rows.items():
        papers = sum(buckets)
        rows.append([year, *buckets, papers, papers / total if total else 0.0,
                     matrix.total_authors[year], matrix.over10[year]])
    col_totals = list(matrix.column_totals())
    summary = {
        "column_totals": col_totals,
        "column_shares": [c / total for c in col_totals] if total else [],
        "total_papers": total,
        "total_authors": matrix.grand_total_authors,
        "over10": sum(matrix.over10.values()),
        "aapp": co.average_authors_per_paper(matrix),
    }
    return Table("authorship-matrix", "Authorship pattern (papers by number of authors)",
                 ["year", *bucket_cols, "total", "share", "total_authors", "over10"], rows, summary,
                 {"share": "pct2"})


def collaboration_report(matrix: AuthorshipMatrix, variant: Variant) -> Table:
    table = co.collaboration_table(matrix, variant)

    def cells(r):
        return [r.ci, r.dc, r.cai, r.cc, r.mcc, r.delta_mcc_cc]

    cols = ["ci", "dc", "cai", "cc", "mcc", "mcc_minus_cc"]
    return Table(
        "collaboration", "Collaboration indicators",
        ["year", *cols], [[r.year, *cells(r)] for r in table.rows],
        {"mean": dict(zip(cols, cells(table.summary))), "variant": variant.value},
        {"ci": ".2f", "dc": ".2f", "cai": ".2f", "cc": ".4f", "mcc": ".4f", "mcc_minus_cc": ".4f"},
    )


def lotka_fit_report(fit: lk.LotkaFit) -> Table:
    rows = []
    for x, y in zip(fit.histogram.x, fit.histogram.y):
        if y <= 0:
            continue
        lx, ly = math.log10(x), math.log10(y)
        rows.append([x, y, lx, ly, lx * ly, lx * lx])
    reg = fit.regression
    summary = {"sum_x": reg.sum_x, "sum_y": reg.sum_y, "sum_xy": reg.sum_xy, "sum_x2": reg.sum_x2,
               "n_points": reg.n_points, "slope": reg.slope, "intercept": reg.intercept,
               "exponent": fit.exponent, "constant": fit.constant, "authors": fit.histogram.total,
               "top_bucket_inclusive": fit.histogram.top_bucket_inclusive}
    fmt = {c: ".9f" for c in ("log_x", "log_y", "xy", "x2")}
    return Table("lotka-fit", "Lotka exponent by log-log least squares",
                 ["x", "y", "log_x", "log_y", "xy", "x2"], rows, summary, fmt)


def ks_runs(fit: lk.LotkaFit, level: float, variant: Variant, alpha: float | None = None) -> list[tuple[str, lk.KsResult]]:
    """The tested run first (fitted exponent or override), then the inverse-square run."""
    label = "fitted" if alpha is None else "override"
    runs = [(label, lk.lotka_verdict(fit, level=level, variant=variant, alpha=alpha))]
    if alpha is None or float(alpha) != 2.0:
        runs.append(("inverse_square", lk.lotka_verdict(fit, level=level, variant=variant, alpha=2.0)))
    return runs


def ks_summary(result: lk.KsResult) -> dict:
    return {"alpha": result.exponent, "constant": result.constant, "d_max": result.d_max,
            "d_max_at_x": result.d_max_at_x, "critical_value": result.critical_value,
            "level": result.significance_level, "verdict": result.verdict}


def ks_report(fit: lk.LotkaFit, level: float, variant: Variant, alpha: float | None = None) -> Table:
    runs = ks_runs(fit, level, variant, alpha)
    first = runs[0][1]
    cols = ["x", "y", "observed", "observed_cum"]
    for label, _ in runs:
        cols += [f"expected_{label}", f"expected_cum_{label}", f"diff_{label}"]
    rows = []
    for i, base in enumerate(first.rows):
        row = [base.x, base.y, base.observed, base.observed_cumulative]
        for _, res in runs:
            r = res.rows[i]
            row += [r.expected, r.expected_cumulative, r.difference]
        rows.append(row)
    summary = {"variant": variant.value, "authors": fit.histogram.total,
               "single_author_share": first.single_author_share,
               "runs": {label: ks_summary(res) for label, res in runs}}
    fmt = {c: ".4f" for c in cols[2:]}
    return Table("ks", "K-S test of observed and expected author distribution", cols, rows, summary, fmt)


def rgr_report(series: Mapping[int, int], variant: Variant,
               periods: Sequence[tuple[int, int]] | None = None) -> Table:
    rows = gr.relative_growth_rate(series, variant)
    if periods is None:
        periods = gr.split_periods([r.year for r in rows], 2)
    means, grand = gr.period_means(rows, periods, variant)
    summary = {
        "variant": variant.value,
        "periods": [{"start": p.start, "end": p.end, "mean_rgr": p.mean_rgr,
                     "mean_doubling_time": p.mean_doubling_time} for p in means],
        "grand_mean_doubling_time": grand,
    }
    return Table("rgr-dt", "Relative growth rate and doubling time",
                 ["year", "output", "cumulative", "w1", "w2", "rgr", "doubling_time"],
                 [[r.year, r.output, r.cumulative, r.w1, r.w2, r.rgr, r.doubling_time] for r in rows],
                 summary, {"w1": ".4f", "w2": ".3f", "rgr": ".4f", "doubling_time": ".4f"})


def build_report(data: Dataset, variant: Variant | str = Variant.STANDARD, level: float = 0.01,
                 alpha: float | None = None, periods: Sequence[tuple[int, int]] | None = None,
                 only: Sequence[str] = TABLE_NAMES) -> Report:
    variant = Variant.coerce(variant)
    tables: dict[str, Table] = {}
    fit = None

    def lotka():
        nonlocal fit
        if fit is None:
            fit = lk.fit_lotka(data.histogram)
        return fit

    builders = {
        "growth": lambda: growth_report(data.series),
        "authorship-matrix": lambda: authorship_report(data.matrix),
        "collaboration": lambda: collaboration_report(data.matrix, variant),
        "lotka-fit": lambda: lotka_fit_report(lotka()),
        "ks": lambda: ks_report(lotka(), level, variant, alpha),
        "rgr-dt": lambda: rgr_report(data.series, variant, periods),
    }
    for name in TABLE_NAMES:
        if name not in only:
            continue
        try:
            tables[name] = builders[name]()
        except BibliostatError as exc:
            raise type(exc)(f"[{name}] {exc}") from exc
    return Report(variant, float(level), tables)


# -- rendering --------------------------------------------------------------

def _fmt(value: Any, spec: str | None) -> str:
    if value is None:
        return ""
    if isinstance(value, (bool, int, str)) and not isinstance(value, float):
        return str(value)
    if spec == "pct2":
        return f"{value * 100:.2f}"
    if spec:
        return format(value, spec)
    return f"{value:.4f}" if isinstance(value, float) else str(value)


def _fmt_summary(value: Any) -> str:
    if isinstance(value, float):
        return f"{value:.6g}"
    if isinstance(value, dict):
        return ", ".join(f"{k}={_fmt_summary(v)}" for k, v in value.items())
    if isinstance(value, list):
        return "[" + ", ".join(_fmt_summary(v) for v in value) + "]"
    return "" if value is None else str(value)


def render_json(report: Report) -> str:
    return json.dumps(report.to_dict(), indent=2, allow_nan=False) + "\n"


def render_markdown_table(table: Table) -> str:
    out = [f"## {table.title} ({table.name})", ""]
    out.append("| " + " | ".join(table.columns) + " |")
    out.append("|" + "|".join("---:" for _ in table.columns) + "|")
    for row in table.rows:
        out.append("| " + " | ".join(_fmt(v, table.formats.get(c)) for c, v in zip(table.columns, row)) + " |")
    if table.summary:
        out.append("")
        for key, value in table.summary.items():
            if key == "runs":
                for label, run in value.items():
                    out.append(f"- {label}: {_fmt_summary(run)}")
            elif key == "periods":
                for p in value:
                    out.append(f"- period {p['start']}-{p['end']}: mean_rgr={_fmt_summary(p['mean_rgr'])}, "
                               f"mean_doubling_time={_fmt_summary(p['mean_doubling_time'])}")
            else:
                out.append(f"- {key}: {_fmt_summary(value)}")
    return "\n".join(out) + "\n"


def render_markdown(report: Report) -> str:
    head = f"# Scientometric report (variant: {report.variant.value}, K-S level: {report.level})\n\n"
    return head + "\n".join(render_markdown_table(t) for t in report.tables.values())


def render_csv_table(table: Table) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(table.columns)
    for row in table.rows:
        writer.writerow(_fmt(v, table.formats.get(c)) for c, v in zip(table.columns, row))
    return buf.getvalue()


def _flatten(prefix: str, value: Any):
    if isinstance(value, dict):
        for k, v in value.items():
            yield from _flatten(f"{prefix}.{k}" if prefix else str(k), v)
    elif isinstance(value, list):
        for i, v in enumerate(value):
            yield from _flatten(f"{prefix}[{i}]", v)
    else:
        yield prefix, value


def render_csv_summary(report: Report) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["table", "key", "value"])
    for table in report.tables.values():
        for key, value in _flatten("", table.summary):
            writer.writerow([table.name, key, "" if value is None else (repr(value) if isinstance(value, float) else value)])
    return buf.getvalue()


def render_csv(report: Report) -> str:
    parts = [f"# {t.name}\n{render_csv_table(t)}" for t in report.tables.values()]
    parts.append(f"# summary\n{render_csv_summary(report)}")
    return "\n".join(parts)


RENDERERS = {"json": render_json, "markdown": render_markdown, "csv": render_csv}
EXTENSIONS = {"json": "json", "markdown": "md", "csv": "csv"}


def render(report: Report, fmt: str) -> str:
    return RENDERERS[fmt](report)


def write_report(report: Report, fmt: str, out_dir) -> list:
    """Write one file per table (plus a summary file for CSV); returns the paths."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    ext = EXTENSIONS[fmt]
    paths = []
    for name, table in report.tables.items():
        single = Report(report.variant, report.level, {name: table})
        if fmt == "csv":
            text = render_csv_table(table)
        elif fmt == "markdown":
            text = render_markdown_table(table)
        else:
            text = render_json(single)
        path = out / f"{name}.{ext}"
        path.write_text(text, encoding="utf-8")
        paths.append(path)
    if fmt == "csv":
        path = out / "summary.csv"
        path.write_text(render_csv_summary(report), encoding="utf-8")
        paths.append(path)
    if fmt == "json":
        path = out / "report.json"
        path.write_text(render_json(report), encoding="utf-8")
        paths.append(path)
    return paths
