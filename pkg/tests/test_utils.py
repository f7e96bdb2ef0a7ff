"""Tests for lmpsquare.utils module."""

from __future__ import annotations

from fractions import Fraction as F

import pytest
from sympy import Integer, Rational

from lmpsquare.utils import (
    as_fraction,
    format_rational,
    parse_rational,
    rational_matrix,
    rsum,
    subsets,
)


class TestParseRational:
    def test_fraction(self) -> None:
        assert parse_rational("2/4") == F(1, 2)

    def test_integer(self) -> None:
        assert parse_rational("3") == F(3)

    def test_negative_and_spaces(self) -> None:
        assert parse_rational(" -1 / 3 ") == F(-1, 3)

    def test_float_rejected(self) -> None:
        with pytest.raises(ValueError, match="Not a rational"):
            parse_rational("0.5")

    def test_zero_denominator(self) -> None:
        with pytest.raises(ValueError, match="Zero denominator"):
            parse_rational("1/0")

    def test_non_string(self) -> None:
        with pytest.raises(ValueError, match="must be a string"):
            parse_rational(0.5)  # type: ignore[arg-type]


class TestFormatRational:
    def test_reduced(self) -> None:
        assert format_rational(F(6, 8)) == "3/4"

    def test_integer(self) -> None:
        assert format_rational(F(4, 2)) == "2"
        assert format_rational(0) == "0"

    def test_negative(self) -> None:
        assert format_rational(F(1, -3)) == "-1/3"


class TestHelpers:
    def test_rsum_is_exact(self) -> None:
        total = rsum([F(1, 3)] * 3)
        assert total == 1
        assert isinstance(total, F)

    def test_rsum_empty(self) -> None:
        assert rsum([]) == F(0)

    def test_subsets_order(self) -> None:
        assert list(subsets(["a", "b"])) == [(), ("a",), ("b",), ("a", "b")]

    def test_subsets_count(self) -> None:
        assert len(list(subsets(range(5)))) == 32


class TestSympyConversion:
    def test_rational_matrix_is_exact(self) -> None:
        matrix = rational_matrix([[F(1, 3), F(2)], [F(0), F(-1, 2)]])
        assert matrix.shape == (2, 2)
        assert matrix[0, 0] == Rational(1, 3)
        assert matrix[1, 1] == Rational(-1, 2)

    def test_as_fraction(self) -> None:
        assert as_fraction(Rational(6, 4)) == F(3, 2)
        assert as_fraction(Integer(-2)) == F(-2)

    def test_round_trip_through_inverse(self) -> None:
        inverse = rational_matrix([[F(2), F(1)], [F(1), F(1)]]).inv()
        assert [as_fraction(v) for v in inverse] == [F(1), F(-1), F(-1), F(2)]
