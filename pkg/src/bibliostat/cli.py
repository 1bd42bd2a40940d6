"""Command-line interface.

    bibliostat report --fixture paper_tables.json --variant paper --format markdown
    bibliostat lotka --wos savedrecs.txt --alpha 2.0
    bibliostat ingest --csv data.csv --map-authors Authors --map-year Year --out fixture.json

Exit codes: 0 success, 1 input error, 2 computation error.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .corpus import DEFAULT_YEAR_WINDOW, MAX_AUTHORS
from .errors import BibliostatError, InputError
from .ingest import (
    BUNDLED_FIXTURE,
    CsvMapping,
    bundled_fixture_text,
    dump_aggregate_fixture,
    fixture_from_records,
    load_aggregate_fixture,
    parse_csv_records,
    parse_wos_export,
)
from . import lotka as lk
from .report import Dataset, build_report, ks_runs, ks_summary, render, write_report
from .variant import Variant

MAX_SHOWN_DIAGNOSTICS = 10


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _year_range(text: str) -> tuple[int, int]:
    try:
        lo, hi = (int(p) for p in text.split("-", 1))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected START-END, got {text!r}") from None
    if lo > hi:
        raise argparse.ArgumentTypeError(f"range {text!r} is reversed")
    return lo, hi


def _periods(text: str) -> list[tuple[int, int]]:
    return [_year_range(p.strip()) for p in text.split(",") if p.strip()]


def _level(text: str) -> float:
    value = float(text)
    if value not in (0.01, 0.05):
        raise argparse.ArgumentTypeError("level must be 0.01 or 0.05")
    return value


def _input_options() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--fixture", metavar="PATH", help=f"aggregate fixture JSON ({BUNDLED_FIXTURE} resolves to the bundled copy)")
    src.add_argument("--wos", metavar="PATH", help="Web of Science tab-delimited export")
    src.add_argument("--csv", metavar="PATH", help="CSV file with a header row")
    p.add_argument("--map-authors", default="Authors", help="CSV author column (default: Authors)")
    p.add_argument("--map-year", default="Year", help="CSV year column (default: Year)")
    p.add_argument("--map-source", default=None, help="CSV source/journal column")
    p.add_argument("--map-sep", default=";", help="CSV author separator (default: ';')")
    p.add_argument("--years", type=_year_range, default=DEFAULT_YEAR_WINDOW, metavar="START-END",
                   help="accepted publication years (default: 1900-2100)")
    p.add_argument("--top-bucket", type=int, default=MAX_AUTHORS,
                   help="largest papers-per-author bucket of the productivity histogram")
    p.add_argument("--no-fold", action="store_true", help="do not fold prolific authors into the top bucket")
    return p


def _metric_options() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--variant", choices=[v.value for v in Variant], default=Variant.STANDARD.value,
                   help="textbook formulas or the reference-table definitions (default: standard)")
    p.add_argument("--level", type=_level, default=0.01, help="K-S significance level, 0.01 or 0.05")
    p.add_argument("--format", choices=["csv", "markdown", "json"], default="markdown")
    p.add_argument("--out", metavar="DIR", help="write one file per table into DIR instead of stdout")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="bibliostat", description="Scientometric growth, collaboration and Lotka analysis.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    inp, met = _input_options(), _metric_options()

    p = sub.add_parser("ingest", parents=[inp], help="parse input and optionally write an aggregate fixture")
    p.add_argument("--out", metavar="PATH", help="write the aggregate fixture JSON here")

    p = sub.add_parser("report", parents=[inp, met], help="all six tables")
    p.add_argument("--alpha", type=float, help="exponent to test in the K-S table instead of the fitted one")
    p.add_argument("--periods", type=_periods, metavar="A-B,C-D", help="year blocks for mean RGR / doubling time")

    p = sub.add_parser("growth", parents=[inp, met], help="growth and RGR/doubling-time tables")
    p.add_argument("--periods", type=_periods, metavar="A-B,C-D", help="year blocks for mean RGR / doubling time")

    sub.add_parser("collab", parents=[inp, met], help="authorship-pattern and collaboration tables")

    p = sub.add_parser("lotka", parents=[inp, met], help="Lotka fit and K-S summary")
    p.add_argument("--alpha", type=float, help="exponent to test instead of the fitted one")
    return parser


def _resolve_fixture(path: str) -> str:
    p = Path(path)
    if not p.exists() and p.name == BUNDLED_FIXTURE and len(p.parts) == 1:
        return bundled_fixture_text()
    return p.read_text(encoding="utf-8")


def _parse_raw(args):
    if args.wos:
        parsed = parse_wos_export(Path(args.wos).read_text(encoding="utf-8"), args.years)
    else:
        mapping = CsvMapping(args.map_authors, args.map_year, args.map_source, args.map_sep)
        parsed = parse_csv_records(Path(args.csv).read_text(encoding="utf-8"), mapping, args.years)
    _report_diagnostics(parsed.diagnostics)
    return parsed


def load_dataset(args) -> Dataset:
    if args.fixture:
        return Dataset.from_fixture(load_aggregate_fixture(_resolve_fixture(args.fixture)))
    parsed = _parse_raw(args)
    if not parsed.records:
        raise InputError("no usable records in input")
    return Dataset.from_records(parsed.records, parsed.diagnostics, args.top_bucket, not args.no_fold)


def _report_diagnostics(diags) -> None:
    if not diags:
        return
    print(f"skipped {len(diags)} malformed row(s):", file=sys.stderr)
    for d in diags[:MAX_SHOWN_DIAGNOSTICS]:
        print(f"  {d}", file=sys.stderr)
    if len(diags) > MAX_SHOWN_DIAGNOSTICS:
        print(f"  ... {len(diags) - MAX_SHOWN_DIAGNOSTICS} more", file=sys.stderr)


def _emit(report, args) -> None:
    if args.out:
        for path in write_report(report, args.format, args.out):
            print(path, file=sys.stderr)
    else:
        sys.stdout.write(render(report, args.format))


def cmd_ingest(args) -> int:
    if args.fixture:
        fixture = load_aggregate_fixture(_resolve_fixture(args.fixture))
    else:
        parsed = _parse_raw(args)
        print(f"{len(parsed.records)} record(s) parsed", file=sys.stderr)
        fixture = fixture_from_records(parsed.records, args.top_bucket, not args.no_fold)
    text = dump_aggregate_fixture(fixture)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


def cmd_report(args) -> int:
    data = load_dataset(args)
    _emit(build_report(data, args.variant, args.level, args.alpha, args.periods), args)
    return 0


def cmd_growth(args) -> int:
    data = load_dataset(args)
    _emit(build_report(data, args.variant, args.level, periods=args.periods, only=("growth", "rgr-dt")), args)
    return 0


def cmd_collab(args) -> int:
    data = load_dataset(args)
    _emit(build_report(data, args.variant, args.level, only=("authorship-matrix", "collaboration")), args)
    return 0


def lotka_summary(data: Dataset, variant, level: float, alpha: float | None = None) -> dict:
    variant = Variant.coerce(variant)
    fit = lk.fit_lotka(data.histogram)
    runs = ks_runs(fit, level, variant, alpha)
    main_run = runs[0][1]
    reg = fit.regression
    return {
        "exponent": main_run.exponent,
        "constant": main_run.constant,
        "dmax": main_run.d_max,
        "dmax_at_x": main_run.d_max_at_x,
        "critical_value": main_run.critical_value,
        "verdict": main_run.verdict,
        "level": level,
        "variant": variant.value,
        "fitted_exponent": fit.exponent,
        "fitted_constant": fit.constant,
        "authors": data.histogram.total,
        "single_author_share": main_run.single_author_share,
        "sums": {"sum_x": reg.sum_x, "sum_y": reg.sum_y, "sum_xy": reg.sum_xy, "sum_x2": reg.sum_x2,
                 "n_points": reg.n_points},
        "runs": {label: ks_summary(res) for label, res in runs},
    }


def cmd_lotka(args) -> int:
    data = load_dataset(args)
    summary = lotka_summary(data, args.variant, args.level, args.alpha)
    if args.format == "json":
        text = json.dumps(summary, indent=2) + "\n"
    else:
        lines = [f"fitted exponent  {summary['fitted_exponent']:.4f}",
                 f"fitted constant  {summary['fitted_constant']:.4f}",
                 f"authors          {summary['authors']}",
                 f"single-paper share {summary['single_author_share']:.4f}"]
        for label, run in summary["runs"].items():
            lines.append(f"[{label}] alpha={run['alpha']:.4f} C={run['constant']:.4f} "
                         f"D-max={run['d_max']:.4f} at x={run['d_max_at_x']} "
                         f"critical={run['critical_value']:.4f} -> {run['verdict']}")
        text = "\n".join(lines) + "\n"
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        (out / ("lotka.json" if args.format == "json" else "lotka.txt")).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


COMMANDS = {"ingest": cmd_ingest, "report": cmd_report, "growth": cmd_growth,
            "collab": cmd_collab, "lotka": cmd_lotka}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except BibliostatError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
