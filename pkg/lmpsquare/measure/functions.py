"""
lmpsquare.measure.functions - Simple functions and functionals on their spans.

A SimpleFunction is a rational value per ground state. A PositiveFunctional
is a linear functional on span(basis), given by its values on the basis;
construction rejects values that disagree on a linear relation among the
basis elements, so evaluation never depends on the representation chosen.
Span membership and linear relations are computed on exact sympy matrices.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction

from lmpsquare.exceptions import ModelError, NotInSpan, SpaceMismatch
from lmpsquare.measure.algebra import SetAlgebra
from lmpsquare.model.spaces import FinSpace, StateId
from lmpsquare.utils import ONE, ZERO, as_fraction, format_rational, rational_matrix, rsum


@dataclass(frozen=True)
class SimpleFunction:
    """Rational-valued function on a finite ground set (values in ground order)."""

    ground: FinSpace
    values: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        values = tuple(Fraction(v) for v in self.values)
        if len(values) != len(self.ground):
            raise ModelError(f"Expected {len(self.ground)} values, got {len(values)}")
        object.__setattr__(self, "values", values)

    @classmethod
    def constant(cls, ground: FinSpace, c: Fraction | int = 1) -> SimpleFunction:
        return cls(ground, tuple(Fraction(c) for _ in ground))

    @classmethod
    def indicator(cls, ground: FinSpace, subset: Iterable[StateId]) -> SimpleFunction:
        members = set(ground.ordered(subset))
        return cls(ground, tuple(ONE if s in members else ZERO for s in ground))

    @classmethod
    def from_mapping(cls, ground: FinSpace, values: Mapping[StateId, Fraction]) -> SimpleFunction:
        return cls(ground, tuple(Fraction(values.get(s, 0)) for s in ground))

    def __call__(self, state: StateId) -> Fraction:
        return self.values[self.ground.index(state)]

    def _same_ground(self, other: SimpleFunction) -> None:
        if other.ground != self.ground:
            raise SpaceMismatch("Simple functions live on different ground sets")

    def __add__(self, other: SimpleFunction) -> SimpleFunction:
        self._same_ground(other)
        return SimpleFunction(self.ground, tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other: SimpleFunction) -> SimpleFunction:
        self._same_ground(other)
        return SimpleFunction(self.ground, tuple(a - b for a, b in zip(self.values, other.values)))

    def __mul__(self, scalar: Fraction | int) -> SimpleFunction:
        c = Fraction(scalar)
        return SimpleFunction(self.ground, tuple(c * v for v in self.values))

    __rmul__ = __mul__

    def __neg__(self) -> SimpleFunction:
        return self * -1

    def dominates(self, other: SimpleFunction) -> bool:
        """self >= other pointwise."""
        self._same_ground(other)
        return all(a >= b for a, b in zip(self.values, other.values))

    def is_nonnegative(self) -> bool:
        return all(v >= 0 for v in self.values)

    def is_measurable(self, algebra: SetAlgebra) -> bool:
        """Constant on every atom of algebra."""
        if algebra.ground != self.ground:
            return False
        return all(len({self(s) for s in atom}) == 1 for atom in algebra.atoms)

    def __str__(self) -> str:
        return "(" + ", ".join(format_rational(v) for v in self.values) + ")"


def linear_combination(
    coefficients: Sequence[Fraction], functions: Sequence[SimpleFunction], ground: FinSpace
) -> SimpleFunction:
    total = SimpleFunction.constant(ground, 0)
    for c, f in zip(coefficients, functions):
        total = total + f * c
    return total


def span_coordinates(
    vectors: Sequence[Sequence[Fraction]], target: Sequence[Fraction]
) -> list[Fraction] | None:
    """Coefficients c with Σ c_i·vectors[i] = target, or None outside the span.

    Free coefficients are set to zero, so the answer is deterministic.
    """
    if not vectors:
        return [] if all(v == 0 for v in target) else None
    try:
        solution, params = rational_matrix(vectors).T.gauss_jordan_solve(
            rational_matrix([target]).T
        )
    except ValueError:
        return None
    solution = solution.subs({p: 0 for p in params})
    return [as_fraction(c) for c in solution]


def independent_indices(vectors: Sequence[Sequence[Fraction]]) -> list[int]:
    """Indices of a maximal linearly independent subsequence, greedy in order."""
    if not vectors:
        return []
    _, pivots = rational_matrix(vectors).T.rref()
    return list(pivots)


def linear_relations(vectors: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    """Basis of the coefficient vectors c with Σ c_i·vectors[i] = 0."""
    if not vectors:
        return []
    return [[as_fraction(c) for c in v] for v in rational_matrix(vectors).T.nullspace()]


@dataclass(frozen=True)
class PositiveFunctional:
    """Linear functional on W = span(basis), given by its values on the basis.

    The basis may be linearly dependent; the values must then vanish on every
    linear relation. Positivity and normalization are checked by the
    extension engine, not assumed here.
    """

    ground: FinSpace
    basis: tuple[SimpleFunction, ...]
    values: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        basis = tuple(self.basis)
        values = tuple(Fraction(v) for v in self.values)
        if len(basis) != len(values):
            raise ModelError("Functional needs exactly one value per basis element")
        for f in basis:
            if f.ground != self.ground:
                raise SpaceMismatch("Basis function on a different ground set")
        vectors = [f.values for f in basis]
        for relation in linear_relations(vectors):
            if rsum(c * v for c, v in zip(relation, values)) != 0:
                raise ModelError("Functional values are inconsistent on a linear relation")
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "values", values)

    @property
    def dimension(self) -> int:
        return len(independent_indices([f.values for f in self.basis]))

    def coordinates(self, f: SimpleFunction) -> list[Fraction] | None:
        """Coefficients expressing f over the basis, or None outside the span."""
        if f.ground != self.ground:
            raise SpaceMismatch("Function on a different ground set")
        return span_coordinates([b.values for b in self.basis], f.values)

    def contains(self, f: SimpleFunction) -> bool:
        return self.coordinates(f) is not None

    def __call__(self, f: SimpleFunction) -> Fraction:
        coefficients = self.coordinates(f)
        if coefficients is None:
            raise NotInSpan(f"Function {f} is outside the functional's domain")
        return rsum(c * v for c, v in zip(coefficients, self.values))

    def independent(self) -> PositiveFunctional:
        """Same functional on a linearly independent sub-basis."""
        keep = independent_indices([f.values for f in self.basis])
        return PositiveFunctional(
            self.ground,
            tuple(self.basis[i] for i in keep),
            tuple(self.values[i] for i in keep),
        )

    def to_dict(self) -> dict:
        return {
            "basis": [[format_rational(v) for v in f.values] for f in self.basis],
            "values": [format_rational(v) for v in self.values],
        }
