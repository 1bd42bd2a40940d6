"""Collaboration indicators over an :class:`AuthorshipMatrix`.

CI (authors per paper), DC (share of multi-authored papers), CAI
(co-authorship index), CC and MCC (collaboration coefficients) and AAPP.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .corpus import AuthorshipMatrix
from .errors import DegenerateScaling, DivisionByZero, EmptyClass, InvalidCounts
from .variant import Variant

# author-count buckets (1-based j) making up each co-authorship class
CAI_CLASSES = {
    "single": (1,),
    "two": (2,),
    "three_or_four": (3, 4),
    "gte_five": (5, 6, 7, 8, 9, 10),
    "multi": (2, 3, 4, 5, 6, 7, 8, 9, 10),
}


@dataclass(frozen=True)
class CollabRow:
    year: int | None
    ci: float
    dc: float
    cai: float
    cc: float
    mcc: float

    @property
    def delta_mcc_cc(self) -> float:
        return self.mcc - self.cc


@dataclass(frozen=True)
class CollabTable:
    rows: tuple[CollabRow, ...]
    summary: CollabRow
    variant: Variant


def collaborative_index(total_authors: int, total_papers: int) -> float:
    if total_papers <= 0:
        raise DivisionByZero("collaborative index undefined without papers")
    return total_authors / total_papers


def degree_of_collaboration(single_papers: int, total_papers: int) -> float:
    if total_papers <= 0:
        raise DivisionByZero("degree of collaboration undefined without papers")
    if single_papers > total_papers or single_papers < 0:
        raise InvalidCounts(f"{single_papers} single-authored papers out of {total_papers}")
    return (total_papers - single_papers) / total_papers


def co_authorship_index(matrix: AuthorshipMatrix, j_class: str = "multi") -> dict[int, float]:
    """CAI per year for one author-count class; 100 means the corpus average."""
    try:
        cols = [j - 1 for j in CAI_CLASSES[j_class]]
    except KeyError:
        raise ValueError(f"unknown CAI class {j_class!r}; expected one of {sorted(CAI_CLASSES)}") from None
    counts = matrix.counts()
    n_io = counts.sum(axis=1)
    n_ij = counts[:, cols].sum(axis=1)
    n_oo, n_oj = n_io.sum(), n_ij.sum()
    if n_oj == 0:
        raise EmptyClass(f"no papers in CAI class {j_class!r}")
    out = {}
    for year, nij, nio in zip(matrix.years, n_ij, n_io):
        if nio == 0:
            raise DivisionByZero(f"{year}: no bucketed papers for CAI")
        out[year] = 100.0 * (nij / nio) / (n_oj / n_oo)
    return out


def _cc_parts(bucket_counts: Sequence[int], variant: Variant):
    f = np.asarray(bucket_counts, dtype=float)
    if f.ndim != 1 or f.size == 0:
        raise ValueError("bucket counts must be a non-empty vector")
    if np.any(f < 0):
        raise InvalidCounts("negative bucket count")
    j = np.arange(1, f.size + 1)
    weighted = float(np.sum(f / j))
    n = float(f.sum()) if variant is Variant.STANDARD else float(f[1:].sum())
    return weighted, n


def collaboration_coefficient(bucket_counts: Sequence[int], mode: Variant | str = Variant.STANDARD) -> float:
    """``1 - sum_j f_j / j / N``.

    ``N`` is the total paper count in standard mode and the multi-authored
    paper count in paper mode.
    """
    mode = Variant.coerce(mode)
    weighted, n = _cc_parts(bucket_counts, mode)
    if n == 0:
        what = "papers" if mode is Variant.STANDARD else "multi-authored papers"
        raise DivisionByZero(f"collaboration coefficient undefined with no {what}")
    return 1.0 - weighted / n


def mcc_scaling_population(bucket_counts: Sequence[int], mode: Variant | str = Variant.STANDARD) -> int:
    mode = Variant.coerce(mode)
    f = list(bucket_counts)
    return int(sum(f) if mode is Variant.STANDARD else sum(f[1:]))


def modified_collaboration_coefficient(bucket_counts: Sequence[int], mode: Variant | str = Variant.STANDARD) -> float:
    a = mcc_scaling_population(bucket_counts, mode)
    if a <= 1:
        raise DegenerateScaling(f"MCC needs a scaling population above 1, got {a}")
    return a / (a - 1) * collaboration_coefficient(bucket_counts, mode)


def average_authors_per_paper(matrix: AuthorshipMatrix) -> float:
    papers = matrix.total_papers
    if papers == 0:
        raise DivisionByZero("AAPP undefined without bucketed papers")
    return matrix.grand_total_authors / papers


def collaboration_table(matrix: AuthorshipMatrix, mode: Variant | str = Variant.STANDARD) -> CollabTable:
    mode = Variant.coerce(mode)
    if not matrix.rows:
        raise ValueError("collaboration table needs a non-empty matrix")
    cai = co_authorship_index(matrix, "multi")
    rows = []
    for year, buckets in matrix.rows.items():
        papers = matrix.papers(year)
        rows.append(CollabRow(
            year=year,
            ci=collaborative_index(matrix.total_authors[year], papers),
            dc=degree_of_collaboration(matrix.single(year), papers),
            cai=cai[year],
            cc=collaboration_coefficient(buckets, mode),
            mcc=modified_collaboration_coefficient(buckets, mode),
        ))
    arr = np.array([[r.ci, r.dc, r.cai, r.cc, r.mcc] for r in rows])
    summary = CollabRow(None, *(float(v) for v in arr.mean(axis=0)))
    return CollabTable(tuple(rows), summary, mode)
