"""
lmpsquare.measure - Finite set algebras, finitely additive measures and
simple functions.
"""

from __future__ import annotations

from lmpsquare.measure.algebra import SetAlgebra, generated_algebra, join, preimage_algebra
from lmpsquare.measure.finadd import FinAddMeasure, eval_measure, integral, restrict_measure
from lmpsquare.measure.functions import PositiveFunctional, SimpleFunction, linear_combination

__all__ = [
    "FinAddMeasure",
    "PositiveFunctional",
    "SetAlgebra",
    "SimpleFunction",
    "eval_measure",
    "generated_algebra",
    "integral",
    "join",
    "linear_combination",
    "preimage_algebra",
    "restrict_measure",
]
