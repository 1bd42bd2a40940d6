"""Scientometric indicators for bibliographic corpora.

Growth (annual growth rate, relative growth rate, doubling time),
collaboration (CI, DC, CAI, CC, MCC, AAPP) and author productivity
(Lotka's law fitted by log-log least squares, checked with a K-S test).
"""

__version__ = "0.1.0"

from .corpus import (
    AuthorshipMatrix,
    ProductivityHistogram,
    PublicationRecord,
    build_authorship_matrix,
    build_productivity_histogram,
    normalize_author_name,
    yearly_output_series,
)
from .variant import Variant

__all__ = [
    "AuthorshipMatrix",
    "ProductivityHistogram",
    "PublicationRecord",
    "Variant",
    "build_authorship_matrix",
    "build_productivity_histogram",
    "normalize_author_name",
    "yearly_output_series",
]
