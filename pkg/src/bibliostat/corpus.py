"""Core record types and the aggregation step from records to distributions.

Two aggregate shapes are produced from a list of :class:`PublicationRecord`:

* :class:`AuthorshipMatrix` - per-year counts of papers with exactly j
  authors (j = 1..10), with papers above ten authors kept aside.
* :class:`ProductivityHistogram` - number of authors who wrote x papers,
  using full counting (every co-author gets one credit per paper).
"""
from __future__ import annotations

import re
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import EmptyName

MAX_AUTHORS = 10
DEFAULT_YEAR_WINDOW = (1900, 2100)

_WS = re.compile(r"\s+")


@dataclass(frozen=True)
class PublicationRecord:
    year: int
    authors: tuple[str, ...]
    source: str = ""

    def __post_init__(self):
        authors = tuple(self.authors)
        if not authors:
            raise ValueError("a publication record needs at least one author")
        object.__setattr__(self, "authors", authors)
        object.__setattr__(self, "year", int(self.year))

    @property
    def n_authors(self) -> int:
        return len(self.authors)


def normalize_author_name(raw: str) -> str:
    """Canonical author key: trimmed, whitespace collapsed, case-folded.

    No initials merging is attempted; ``"okafor, n."`` and ``"okafor, nadia"``
    stay distinct authors.
    """
    key = _WS.sub(" ", raw).strip().casefold()
    if not key:
        raise EmptyName(f"author name {raw!r} is empty after normalization")
    return key


@dataclass(frozen=True)
class AuthorshipMatrix:
    """Year-wise authorship pattern.

    ``rows[year][j - 1]`` is the number of papers in ``year`` with exactly
    ``j`` authors. ``total_authors[year]`` is the author total used for the
    collaborative index; when built from records it sums the author counts of
    the bucketed papers only.
    """

    rows: Mapping[int, tuple[int, ...]]
    over10: Mapping[int, int] = field(default_factory=dict)
    total_authors: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        rows = {int(y): tuple(int(c) for c in v) for y, v in sorted(self.rows.items())}
        for year, counts in rows.items():
            if len(counts) != MAX_AUTHORS:
                raise ValueError(f"{year}: expected {MAX_AUTHORS} bucket counts, got {len(counts)}")
            if min(counts) < 0:
                raise ValueError(f"{year}: negative bucket count")
        over10 = {y: int(self.over10.get(y, 0)) for y in rows}
        if self.total_authors:
            authors = {y: int(self.total_authors[y]) for y in rows}
        else:
            authors = {y: _weighted_author_count(c) for y, c in rows.items()}
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "over10", over10)
        object.__setattr__(self, "total_authors", authors)

    @property
    def years(self) -> list[int]:
        return list(self.rows)

    def counts(self) -> np.ndarray:
        """Bucket counts as a ``(n_years, 10)`` integer array in year order."""
        if not self.rows:
            return np.zeros((0, MAX_AUTHORS), dtype=np.int64)
        return np.array(list(self.rows.values()), dtype=np.int64)

    def papers(self, year: int) -> int:
        return sum(self.rows[year])

    def single(self, year: int) -> int:
        return self.rows[year][0]

    def multi(self, year: int) -> int:
        return self.papers(year) - self.single(year)

    @property
    def total_papers(self) -> int:
        return sum(self.papers(y) for y in self.rows)

    @property
    def grand_total_authors(self) -> int:
        return sum(self.total_authors.values())

    def column_totals(self) -> tuple[int, ...]:
        return tuple(int(v) for v in self.counts().sum(axis=0))


def _weighted_author_count(counts: Sequence[int]) -> int:
    return sum(j * c for j, c in enumerate(counts, start=1))


@dataclass(frozen=True)
class ProductivityHistogram:
    """Number of authors ``y`` who contributed ``x`` papers."""

    x: tuple[int, ...]
    y: tuple[int, ...]
    top_bucket_inclusive: bool = True

    def __post_init__(self):
        x = tuple(int(v) for v in self.x)
        y = tuple(int(v) for v in self.y)
        if len(x) != len(y):
            raise ValueError("x and y must have the same length")
        if any(v < 1 for v in x):
            raise ValueError("x values must be >= 1")
        if any(b <= a for a, b in zip(x, x[1:])):
            raise ValueError("x values must be strictly increasing")
        if any(v < 0 for v in y):
            raise ValueError("author counts must be non-negative")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]], top_bucket_inclusive: bool = True):
        pairs = list(pairs)
        return cls(tuple(p[0] for p in pairs), tuple(p[1] for p in pairs), top_bucket_inclusive)

    @property
    def total(self) -> int:
        return sum(self.y)

    def __len__(self):
        return len(self.x)


def build_authorship_matrix(records: Iterable[PublicationRecord]) -> AuthorshipMatrix:
    rows: dict[int, list[int]] = defaultdict(lambda: [0] * MAX_AUTHORS)
    over10: dict[int, int] = defaultdict(int)
    authors: dict[int, int] = defaultdict(int)
    for rec in records:
        n = rec.n_authors
        if n > MAX_AUTHORS:
            over10[rec.year] += 1
            rows[rec.year]  # year still appears, with possibly empty buckets
            continue
        rows[rec.year][n - 1] += 1
        authors[rec.year] += n
    return AuthorshipMatrix(
        rows={y: tuple(v) for y, v in rows.items()},
        over10=dict(over10),
        total_authors={y: authors.get(y, 0) for y in rows},
    )


def author_paper_counts(records: Iterable[PublicationRecord]) -> Counter:
    """Papers per normalized author (full counting, one credit per paper)."""
    counts: Counter = Counter()
    for rec in records:
        counts.update({normalize_author_name(a) for a in rec.authors})
    return counts


def build_productivity_histogram(records: Iterable[PublicationRecord], top_bucket: int = MAX_AUTHORS,
                                 fold: bool = True) -> ProductivityHistogram:
    """Histogram of authors by number of papers.

    With ``fold`` the support is ``1..top_bucket`` and every author above the
    top bucket is counted in it. Without folding the support runs from 1 to
    the largest observed paper count.
    """
    if top_bucket < 1:
        raise ValueError("top_bucket must be >= 1")
    per_author = author_paper_counts(records)
    freq = Counter(per_author.values())
    if fold:
        ys = [freq.get(x, 0) for x in range(1, top_bucket + 1)]
        ys[-1] += sum(c for x, c in freq.items() if x > top_bucket)
        return ProductivityHistogram(tuple(range(1, top_bucket + 1)), tuple(ys), True)
    hi = max(freq, default=0)
    return ProductivityHistogram(tuple(range(1, hi + 1)), tuple(freq.get(x, 0) for x in range(1, hi + 1)), False)


def yearly_output_series(records: Iterable[PublicationRecord]) -> dict[int, int]:
    """Papers per year, zero-filled between the first and last observed year."""
    counts = Counter(rec.year for rec in records)
    if not counts:
        return {}
    return {y: counts.get(y, 0) for y in range(min(counts), max(counts) + 1)}
