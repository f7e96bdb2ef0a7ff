"""
lmpsquare.exceptions - Custom exception classes.

All lmpsquare-specific exceptions inherit from SquareError.
"""

from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from lmpsquare.model.morphisms import CounterexampleWitness


class SquareError(Exception):
    """Base exception for all lmpsquare errors."""

    pass


class ConfigError(SquareError):
    """Configuration loading or validation error."""

    pass


class ModelError(SquareError):
    """Malformed in-memory model object (duplicate states, ragged rows, ...)."""

    pass


class SchemaError(SquareError):
    """Model file could not be parsed or references do not resolve."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.message = message
        self.line = line
        self.column = column
        location = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(f"{message}{location}")


class SpaceMismatch(SquareError):
    """Two objects that must share a space do not."""

    pass


class LabelMismatch(SquareError):
    """Two LMPs do not share their label set."""

    pass


class NotSurjective(SquareError):
    """A morphism required to be surjective misses part of its codomain."""

    pass


class NotInAlgebra(SquareError):
    """A subset splits an atom of the algebra it is evaluated in."""

    pass


class NotMeasurable(SquareError):
    """A simple function is not constant on some atom."""

    pass


class NotSubalgebra(SquareError):
    """An algebra is not contained in the ambient algebra."""

    pass


class NotInSpan(SquareError):
    """A function lies outside the span of a functional's basis."""

    pass


class NotMeasurePreserving(SquareError):
    """A map does not carry one measure row onto the other."""

    pass


class Infeasible(SquareError):
    """A linear feasibility problem has no solution."""

    pass


class Unbounded(SquareError):
    """A linear program is unbounded in the direction of optimization."""

    pass


class NotPositive(SquareError):
    """A functional takes a negative value on a nonnegative function."""

    pass


class NotNormalized(SquareError):
    """A functional or measure does not give total mass one."""

    pass


class ConstantsMissing(SquareError):
    """The constant functions are not in the functional's domain."""

    pass


class ReservedIdCollision(SquareError):
    """The dead-state id of the one-point completion already names a state."""

    pass


class PipelineInfeasible(SquareError):
    """A semipullback construction step failed on a valid-looking cospan."""

    def __init__(self, message: str, x: str | None = None, label: str | None = None):
        self.detail = message
        self.x = x
        self.label = label
        where = []
        if label is not None:
            where.append(f"label {label!r}")
        if x is not None:
            where.append(f"x = {x!r}")
        suffix = f" at {', '.join(where)}" if where else ""
        super().__init__(f"{message}{suffix}")


class ParamError(SquareError):
    """Invalid parameter for a symbolic construction."""

    pass


class MorphismError(SquareError):
    """A map fails the kernel-morphism or zigzag condition."""

    def __init__(self, message: str, witness: CounterexampleWitness | None = None):
        self.witness = witness
        detail = f": {witness.describe()}" if witness is not None else ""
        super().__init__(f"{message}{detail}")
