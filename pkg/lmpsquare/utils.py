"""
lmpsquare.utils - Shared utility functions.

Rational parsing/formatting, conversion to and from exact sympy matrices, and
small enumeration helpers used across the model, the extension engine and
the CLI.
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Iterator, Sequence
from fractions import Fraction
from itertools import chain, combinations
from typing import Any, TypeVar

from sympy import Matrix, Rational

T = TypeVar("T")

ZERO = Fraction(0)
ONE = Fraction(1)

_RATIONAL_RE = re.compile(r"^\s*(-?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" or an integer string into an exact rational.

    Floats are rejected on purpose: every number in a model file is exact.

    Args:
        text: Rational as a string

    Returns:
        The reduced Fraction

    Raises:
        ValueError: If the text is not "p/q" or an integer, or q is zero
    """
    if not isinstance(text, str):
        raise ValueError(f"Rational must be a string, got {type(text).__name__}")
    match = _RATIONAL_RE.match(text)
    if not match:
        raise ValueError(f"Not a rational 'p/q' or integer string: {text!r}")
    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) is not None else 1
    if denominator == 0:
        raise ValueError(f"Zero denominator in {text!r}")
    return Fraction(numerator, denominator)


def format_rational(value: Fraction | int) -> str:
    """Format a rational as reduced "p/q" (q > 0), or "p" when q = 1."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def rsum(values: Iterable[Fraction]) -> Fraction:
    """Exact sum starting from Fraction(0) (never a float or int)."""
    return sum(values, ZERO)


def subsets(items: Sequence[T]) -> Iterator[tuple[T, ...]]:
    """All subsets of items, smallest first, in a fixed order."""
    return chain.from_iterable(combinations(items, k) for k in range(len(items) + 1))


def rational_matrix(rows: Sequence[Sequence[Fraction]]) -> Matrix:
    """sympy Matrix with exact Rational entries, one row per input row."""
    return Matrix(
        [[Rational(v.numerator, v.denominator) for v in map(Fraction, row)] for row in rows]
    )


def as_fraction(value: Any) -> Fraction:
    """Fraction from an exact sympy number (Rational or Integer)."""
    return Fraction(int(value.p), int(value.q))
