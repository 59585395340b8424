"""Exact rational helpers.

All lengths, positions, speeds and durations in this package are
``fractions.Fraction`` values.  Segment-boundary tests and chop-split
searches compare coordinates for exact equality, which floating point
cannot provide.
"""

from __future__ import annotations

from fractions import Fraction


def rat(value) -> Fraction:
    """Coerce a number from a scenario file into an exact rational.

    Accepts ints, Fractions and strings such as ``"7/2"`` or ``"0.25"``.
    Floats are converted through their decimal representation, so a JSON
    ``0.1`` becomes exactly 1/10 rather than the nearest binary float.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not numbers")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(str(value))
    raise TypeError(f"cannot interpret {value!r} as a rational")


def rat_json(value: Fraction):
    """Canonical JSON form: bare int when integral, else an ``"n/d"`` string."""
    if value.denominator == 1:
        return int(value)
    return f"{value.numerator}/{value.denominator}"
