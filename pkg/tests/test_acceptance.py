"""Acceptance criteria 1-9, run from the bundled fixture.

Checks 1-7 read a report dict (the JSON shape), so criterion 9 reuses them
verbatim on the CLI output. Each test records exactly one PASS/FAIL line.
"""
import contextlib
import io
import json
import math

from bibliostat.cli import main
from bibliostat.lotka import fit_lotka, lotka_constant, lotka_verdict
from bibliostat.report import build_report

import reference as ref
from conftest import within


def _near(failures, label, value, target, tol):
    if not within(value, target, tol):
        failures.append(f"{label}={value!r} want {target}±{tol}")


def _by_year(table):
    cols = table["columns"]
    return {row[0]: dict(zip(cols, row)) for row in table["rows"]}


def check_growth(rep):
    f = []
    t = rep["tables"]["growth"]
    rows = _by_year(t)
    for year, rate, pct in zip(ref.YEARS, ref.GROWTH_RATE, ref.CUMULATIVE_PCT):
        if rate is not None:
            _near(f, f"growth_rate[{year}]", rows[year]["growth_rate"], rate, 0.001)
        _near(f, f"cumulative%[{year}]", 100 * rows[year]["cumulative_share"], pct, 0.01)
    _near(f, "mean_growth_rate", t["summary"]["mean_growth_rate"], ref.MEAN_GROWTH_RATE, 0.001)
    return f


def check_authorship(rep, fixture):
    f = []
    t = rep["tables"]["authorship-matrix"]
    rows = _by_year(t)
    _near(f, "aapp", t["summary"]["aapp"], ref.AAPP, 0.005)
    for y in fixture.years:
        row = rows[y.year]
        if row["total"] != y.bucketed or row["total_authors"] != y.total_authors:
            f.append(f"{y.year}: totals {row['total']}/{row['total_authors']} vs fixture")
        if [row[f"a{j}"] for j in range(1, 11)] != list(y.bucket_counts):
            f.append(f"{y.year}: bucket counts differ from fixture")
    if [rows[y]["total"] for y in ref.YEARS] != ref.BUCKETED_PAPERS:
        f.append("bucketed totals differ from print")
    if [rows[y]["total_authors"] for y in ref.YEARS] != ref.TOTAL_AUTHORS:
        f.append("author totals differ from print")
    return f


def check_collaboration(rep):
    f = []
    t = rep["tables"]["collaboration"]
    rows = _by_year(t)
    printed = {"ci": (ref.CI, 0.005), "dc": (ref.DC, 0.005), "cai": (ref.CAI, 0.005),
               "cc": (ref.CC, 0.0005), "mcc": (ref.MCC, 0.0005), "mcc_minus_cc": (ref.MCC_MINUS_CC, 0.0001)}
    for key, (values, tol) in printed.items():
        for year, v in zip(ref.YEARS, values):
            _near(f, f"{key}[{year}]", rows[year][key], v, tol)
    mean = t["summary"]["mean"]
    for key, v in ref.COLLAB_MEANS.items():
        _near(f, f"mean {key}", mean[key], v, printed[key][1])
    return f


def check_regression(rep):
    f = []
    s = rep["tables"]["lotka-fit"]["summary"]
    for key, v in ref.SUMS.items():
        _near(f, key, s[key], v, 0.001)
    _near(f, "exponent", s["exponent"], ref.EXPONENT, 0.005)
    return f


def check_constants(rep):
    f = []
    runs = rep["tables"]["ks"]["summary"]["runs"]
    _near(f, "C(fitted)", runs["fitted"]["constant"], ref.CONSTANT_FITTED, 0.0005)
    _near(f, "C(2.0)", runs["inverse_square"]["constant"], ref.CONSTANT_SQUARE, 0.0005)
    if abs(runs["inverse_square"]["constant"] - 6 / math.pi**2) >= 1e-8:
        f.append("C(2.0) differs from 6/pi^2")
    return f


def check_ks(rep):
    f = []
    runs = rep["tables"]["ks"]["summary"]["runs"]
    for label, d, at, verdict in (("fitted", ref.DMAX_FITTED, ref.DMAX_FITTED_AT, "fits"),
                                  ("inverse_square", ref.DMAX_SQUARE, ref.DMAX_SQUARE_AT, "rejected")):
        run = runs[label]
        _near(f, f"dmax[{label}]", run["d_max"], d, 0.001)
        _near(f, f"critical[{label}]", run["critical_value"], ref.CRITICAL, 0.0005)
        if run["d_max_at_x"] != at or run["verdict"] != verdict:
            f.append(f"{label}: at x={run['d_max_at_x']} {run['verdict']}, want x={at} {verdict}")
    return f


def check_rgr(rep):
    f = []
    t = rep["tables"]["rgr-dt"]
    rows = _by_year(t)
    for year, r in zip(ref.YEARS, ref.RGR):
        if year not in ref.RGR_EXEMPT:
            _near(f, f"rgr[{year}]", rows[year]["rgr"], r, 0.002)
    for year, dt in ref.DT_PRINTED.items():
        _near(f, f"dt[{year}]", rows[year]["doubling_time"], dt, 0.002)
    periods = {(p["start"], p["end"]): p for p in t["summary"]["periods"]}
    for span, v in ref.PERIOD_MEAN_RGR.items():
        _near(f, f"mean_rgr{span}", periods[span]["mean_rgr"], v, 0.001)
    for span, v in ref.PERIOD_MEAN_DT.items():
        _near(f, f"mean_dt{span}", periods[span]["mean_doubling_time"], v, 0.001)
    _near(f, "grand_mean_dt", t["summary"]["grand_mean_doubling_time"], ref.GRAND_MEAN_DT, 0.001)
    return f


def paper_report(dataset):
    return build_report(dataset, "paper").to_dict()


def _verdict(criterion, label, failures):
    criterion(label, not failures, "; ".join(failures[:6]))
    assert not failures, failures


def test_c1_growth_table(dataset, criterion):
    _verdict(criterion, "C1 growth table", check_growth(paper_report(dataset)))


def test_c2_authorship_and_aapp(dataset, fixture, criterion):
    _verdict(criterion, "C2 authorship totals and AAPP", check_authorship(paper_report(dataset), fixture))


def test_c3_collaboration_paper_variant(dataset, criterion):
    _verdict(criterion, "C3 collaboration indices (paper variant)", check_collaboration(paper_report(dataset)))


def test_c4_regression_sums(dataset, criterion):
    _verdict(criterion, "C4 log-log regression sums and exponent", check_regression(paper_report(dataset)))


def test_c5_lotka_constants(dataset, criterion):
    f = check_constants(paper_report(dataset))
    _near(f, "lotka_constant(2.84)", lotka_constant(2.84), ref.CONSTANT_FITTED, 0.0005)
    _near(f, "lotka_constant(2.0)", lotka_constant(2.0), ref.CONSTANT_SQUARE, 0.0005)
    if abs(lotka_constant(2.0) - 6 / math.pi**2) >= 1e-8:
        f.append("lotka_constant(2.0) differs from 6/pi^2")
    _verdict(criterion, "C5 Lotka constants", f)


def test_c6_ks_table(dataset, criterion):
    f = check_ks(paper_report(dataset))
    # the rounded exponent itself, not only the fitted 2.837
    res = lotka_verdict(fit_lotka(dataset.histogram), variant="paper", alpha=ref.EXPONENT)
    _near(f, "dmax(alpha=2.84)", res.d_max, ref.DMAX_FITTED, 0.001)
    if res.d_max_at_x != ref.DMAX_FITTED_AT or res.verdict != "fits":
        f.append(f"alpha=2.84: at x={res.d_max_at_x} {res.verdict}")
    _verdict(criterion, "C6 K-S D-max, critical value, verdicts", f)


def test_c7_rgr_doubling_time(dataset, criterion):
    _verdict(criterion, "C7 RGR and doubling time (paper variant)", check_rgr(paper_report(dataset)))


def test_c8_property_suite(criterion):
    """Runs the property tests named by this criterion in a nested session."""
    import pytest

    selected = [
        "tests/test_lotka.py::test_exponent_recovery",
        "tests/test_collaboration.py::test_cai_output_weighted_mean_is_100",
        "tests/test_collaboration.py::test_cc_bounds_and_mcc_identity",
        "tests/test_lotka.py::test_dmax_self_distance_zero",
        "tests/test_corpus.py::test_matrix_conservation_and_order_independence",
        "tests/test_ingest.py::test_fixture_round_trip",
        "tests/test_ingest.py::test_fixture_from_records_round_trip",
    ]
    import pathlib
    root = pathlib.Path(__file__).resolve().parent.parent
    code = pytest.main(["-q", "-p", "no:cacheprovider", "--rootdir", str(root),
                        *[str(root / s.split("::")[0]) + "::" + s.split("::")[1] for s in selected]])
    criterion("C8 property suite", code == 0, f"nested pytest exit {int(code)}")
    assert code == 0


def run_cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue(), err.getvalue()


def test_c9_end_to_end(fixture, criterion):
    argv = ("report", "--fixture", "paper_tables.json", "--variant", "paper", "--format", "json")
    code, first, err = run_cli(*argv)
    _, second, _ = run_cli(*argv)
    f = [] if code == 0 else [f"exit {code}: {err.strip()}"]
    if first != second:
        f.append("output differs between runs")
    if not f:
        rep = json.loads(first)
        for name, failures in (("C1", check_growth(rep)), ("C2", check_authorship(rep, fixture)),
                               ("C3", check_collaboration(rep)), ("C4", check_regression(rep)),
                               ("C5", check_constants(rep)), ("C6", check_ks(rep)), ("C7", check_rgr(rep))):
            f += [f"{name} {msg}" for msg in failures]
    _verdict(criterion, "C9 end-to-end report JSON", f)
