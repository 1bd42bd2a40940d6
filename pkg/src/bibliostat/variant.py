from enum import Enum


class Variant(str, Enum):
    """Formula family used by the metrics that have two readings.

    ``STANDARD`` is the textbook definition. ``PAPER`` switches on the
    alternative definitions behind the reference tables (CC/MCC
    denominators, cumulative-over-annual RGR, per-x K-S deviation and the
    exponent-based critical value).
    """

    STANDARD = "standard"
    PAPER = "paper"

    @classmethod
    def coerce(cls, value):
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ValueError(f"unknown variant {value!r}; expected 'standard' or 'paper'") from None
