"""Readers for raw bibliographic exports and for pre-aggregated fixtures.

Raw readers never abort on a bad data row. Rows with no authors or an
unusable year are skipped and reported as :class:`Diagnostic` entries next
to the parsed records.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from importlib import resources
from typing import Iterable, NamedTuple, TextIO

from .corpus import (
    DEFAULT_YEAR_WINDOW,
    MAX_AUTHORS,
    AuthorshipMatrix,
    ProductivityHistogram,
    PublicationRecord,
    build_authorship_matrix,
    build_productivity_histogram,
    yearly_output_series,
)
from .errors import ConsistencyError, MissingColumn, SchemaError

BUNDLED_FIXTURE = "paper_tables.json"


@dataclass(frozen=True)
class Diagnostic:
    line: int
    message: str

    def __str__(self):
        return f"line {self.line}: {self.message}"


class ParsedRecords(NamedTuple):
    records: list[PublicationRecord]
    diagnostics: list[Diagnostic]


@dataclass(frozen=True)
class CsvMapping:
    authors: str = "Authors"
    year: str = "Year"
    source: str | None = None
    separator: str = ";"


def _read(stream) -> str:
    text = stream if isinstance(stream, str) else stream.read()
    return text.lstrip("﻿")


def _make_record(line, authors_raw, year_raw, source, separator, window, diags):
    authors = tuple(a.strip() for a in (authors_raw or "").split(separator) if a.strip())
    if not authors:
        diags.append(Diagnostic(line, "no authors"))
        return None
    year_raw = (year_raw or "").strip()
    try:
        year = int(year_raw)
    except ValueError:
        diags.append(Diagnostic(line, f"unparseable year {year_raw!r}"))
        return None
    lo, hi = window
    if not lo <= year <= hi:
        diags.append(Diagnostic(line, f"year {year} outside window {lo}..{hi}"))
        return None
    return PublicationRecord(year, authors, (source or "").strip())


def parse_wos_export(stream: TextIO | str, window: tuple[int, int] = DEFAULT_YEAR_WINDOW) -> ParsedRecords:
    """Parse a Web of Science tab-delimited export.

    The first line holds field tags; ``AU`` (authors, ``"; "``-separated) and
    ``PY`` (year) are required, ``SO`` (source title) is optional.
    """
    lines = _read(stream).splitlines()
    records: list[PublicationRecord] = []
    diags: list[Diagnostic] = []
    if not lines:
        return ParsedRecords(records, diags)
    header = [h.strip() for h in lines[0].split("\t")]
    missing = [tag for tag in ("AU", "PY") if tag not in header]
    if missing:
        raise MissingColumn(f"WoS header lacks required tag(s): {', '.join(missing)}")
    i_au, i_py = header.index("AU"), header.index("PY")
    i_so = header.index("SO") if "SO" in header else None
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        cells = line.split("\t")
        cells += [""] * (len(header) - len(cells))
        rec = _make_record(lineno, cells[i_au], cells[i_py],
                           cells[i_so] if i_so is not None else "", ";", window, diags)
        if rec is not None:
            records.append(rec)
    return ParsedRecords(records, diags)


def parse_csv_records(stream: TextIO | str, mapping: CsvMapping = CsvMapping(),
                      window: tuple[int, int] = DEFAULT_YEAR_WINDOW) -> ParsedRecords:
    reader = csv.reader(io.StringIO(_read(stream), newline=""))
    records: list[PublicationRecord] = []
    diags: list[Diagnostic] = []
    header = next(reader, None)
    if header is None:
        return ParsedRecords(records, diags)
    header = [h.strip() for h in header]
    wanted = [mapping.authors, mapping.year] + ([mapping.source] if mapping.source else [])
    missing = [c for c in wanted if c not in header]
    if missing:
        raise MissingColumn(f"CSV header lacks column(s): {', '.join(missing)}")
    i_au, i_py = header.index(mapping.authors), header.index(mapping.year)
    i_so = header.index(mapping.source) if mapping.source else None
    for row in reader:
        if not any(cell.strip() for cell in row):
            continue
        row += [""] * (len(header) - len(row))
        rec = _make_record(reader.line_num, row[i_au], row[i_py],
                           row[i_so] if i_so is not None else "", mapping.separator, window, diags)
        if rec is not None:
            records.append(rec)
    return ParsedRecords(records, diags)


# -- aggregate fixtures -----------------------------------------------------

@dataclass(frozen=True)
class YearAggregate:
    year: int
    bucket_counts: tuple[int, ...]
    over10: int
    total_papers: int
    total_authors: int | None = None

    @property
    def bucketed(self) -> int:
        return sum(self.bucket_counts)


@dataclass(frozen=True)
class AggregateFixture:
    years: tuple[YearAggregate, ...]
    productivity: ProductivityHistogram

    @property
    def top_bucket_inclusive(self) -> bool:
        return self.productivity.top_bucket_inclusive

    def yearly_output(self) -> dict[int, int]:
        return {y.year: y.total_papers for y in self.years}

    def authorship_matrix(self) -> AuthorshipMatrix:
        authors = {}
        if all(y.total_authors is not None for y in self.years):
            authors = {y.year: y.total_authors for y in self.years}
        return AuthorshipMatrix(
            rows={y.year: y.bucket_counts for y in self.years},
            over10={y.year: y.over10 for y in self.years},
            total_authors=authors,
        )

    def to_dict(self) -> dict:
        years = []
        for y in self.years:
            entry = {"year": y.year, "bucket_counts": list(y.bucket_counts),
                     "over10": y.over10, "total_papers": y.total_papers}
            if y.total_authors is not None:
                entry["total_authors"] = y.total_authors
            years.append(entry)
        return {
            "years": years,
            "productivity": [{"x": x, "y": n} for x, n in zip(self.productivity.x, self.productivity.y)],
            "top_bucket_inclusive": self.top_bucket_inclusive,
        }


def _require_int(obj, key, where):
    if key not in obj:
        raise SchemaError(f"{where}: missing field {key!r}")
    value = obj[key]
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise SchemaError(f"{where}: field {key!r} must be a non-negative integer, got {value!r}")
    return value


def fixture_from_dict(data: dict) -> AggregateFixture:
    if not isinstance(data, dict):
        raise SchemaError("fixture must be a JSON object")
    for key in ("years", "productivity", "top_bucket_inclusive"):
        if key not in data:
            raise SchemaError(f"fixture: missing field {key!r}")
    if not isinstance(data["top_bucket_inclusive"], bool):
        raise SchemaError("fixture: 'top_bucket_inclusive' must be a boolean")

    years = []
    seen = set()
    for i, entry in enumerate(data["years"]):
        where = f"years[{i}]"
        if not isinstance(entry, dict):
            raise SchemaError(f"{where}: expected an object")
        year = _require_int(entry, "year", where)
        where = f"year {year}"
        if year in seen:
            raise SchemaError(f"{where}: duplicate year")
        seen.add(year)
        buckets = entry.get("bucket_counts")
        if buckets is None:
            raise SchemaError(f"{where}: missing field 'bucket_counts'")
        if not isinstance(buckets, list) or len(buckets) != MAX_AUTHORS:
            raise SchemaError(f"{where}: 'bucket_counts' must list exactly {MAX_AUTHORS} integers")
        buckets = tuple(_require_int({"b": b}, "b", f"{where} bucket {j}") for j, b in enumerate(buckets, 1))
        over10 = _require_int(entry, "over10", where)
        total = _require_int(entry, "total_papers", where)
        if sum(buckets) + over10 != total:
            raise ConsistencyError(
                f"{where}: bucket counts sum to {sum(buckets)} plus over10 {over10}"
                f" = {sum(buckets) + over10}, but total_papers is {total}")
        authors = None
        if "total_authors" in entry:
            authors = _require_int(entry, "total_authors", where)
            if authors < sum(buckets):
                raise ConsistencyError(f"{where}: total_authors {authors} is below the {sum(buckets)} bucketed papers")
        years.append(YearAggregate(year, buckets, over10, total, authors))
    years.sort(key=lambda y: y.year)

    xs, ys = [], []
    for i, entry in enumerate(data["productivity"]):
        where = f"productivity[{i}]"
        if not isinstance(entry, dict):
            raise SchemaError(f"{where}: expected an object")
        xs.append(_require_int(entry, "x", where))
        ys.append(_require_int(entry, "y", where))
    if len(set(xs)) != len(xs):
        raise SchemaError("productivity: duplicate x values")
    if xs != sorted(xs) or (xs and xs[0] < 1):
        raise SchemaError("productivity: x values must be >= 1 and ascending")
    hist = ProductivityHistogram(tuple(xs), tuple(ys), data["top_bucket_inclusive"])
    return AggregateFixture(tuple(years), hist)


def load_aggregate_fixture(stream: TextIO | str) -> AggregateFixture:
    try:
        data = json.loads(_read(stream))
    except json.JSONDecodeError as exc:
        raise SchemaError(f"fixture is not valid JSON: {exc}") from None
    return fixture_from_dict(data)


def dump_aggregate_fixture(fixture: AggregateFixture) -> str:
    return json.dumps(fixture.to_dict(), indent=2) + "\n"


def bundled_fixture_text(name: str = BUNDLED_FIXTURE) -> str:
    return resources.files("bibliostat").joinpath("data", name).read_text(encoding="utf-8")


def load_bundled_fixture(name: str = BUNDLED_FIXTURE) -> AggregateFixture:
    return load_aggregate_fixture(bundled_fixture_text(name))


def fixture_from_records(records: Iterable[PublicationRecord], top_bucket: int = MAX_AUTHORS,
                         fold: bool = True) -> AggregateFixture:
    """Aggregate raw records into the fixture shape (per-year buckets + productivity)."""
    records = list(records)
    matrix = build_authorship_matrix(records)
    output = yearly_output_series(records)
    years = []
    for year, total in output.items():
        buckets = matrix.rows.get(year, (0,) * MAX_AUTHORS)
        years.append(YearAggregate(year, buckets, matrix.over10.get(year, 0), total,
                                   matrix.total_authors.get(year, 0)))
    return AggregateFixture(tuple(years), build_productivity_histogram(records, top_bucket, fold))
