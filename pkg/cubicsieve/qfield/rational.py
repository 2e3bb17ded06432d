from __future__ import annotations

import re
from fractions import Fraction
from typing import Union

# Fraction keeps numerator/denominator reduced with a positive denominator on every operation.
Rat = Fraction
RatLike = Union[int, Fraction, str]

_RAT_PATTERN = re.compile(r"^(-?\d+)(?:/(\d+))?$")


def to_rat(value: RatLike) -> Fraction:
    """Coerce an int, Fraction or canonical string into a Fraction."""

    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rat(value)
    raise TypeError(f"Cannot interpret {type(value).__name__} as an exact rational")


def format_rat(value: Fraction) -> str:
    """Canonical text form: "p/q", or "p" when q = 1."""

    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rat(text: str) -> Fraction:
    """Parse "p/q" or "p"; decimals and exponents are rejected."""

    match = _RAT_PATTERN.match(text.strip())
    if not match:
        raise ValueError(f"Not an exact rational literal: {text!r}")
    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) is not None else 1
    if denominator == 0:
        raise ValueError(f"Zero denominator in rational literal: {text!r}")
    return Fraction(numerator, denominator)


def rat_sign(value: Fraction) -> int:
    return (value > 0) - (value < 0)
