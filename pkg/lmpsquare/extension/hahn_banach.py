"""
lmpsquare.extension.hahn_banach - Positive extension of a functional, one dimension at a time.

Starting from Ψ on W (constants included, Ψ(1) = 1, Ψ ≥ 0 on W⁺), each new
direction f₀ gets the value inf{Φ(h) : h ∈ U, h ≥ f₀} over the span U built
so far. The infimum is an exact LP, so the extension is a fixed function of
the input data and basis order.
"""

from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction

from lmpsquare.config import SquareConfig
from lmpsquare.exceptions import (
    ConstantsMissing,
    NotInSpan,
    NotNormalized,
    NotPositive,
    SpaceMismatch,
    Unbounded,
)
from lmpsquare.extension.simplex import LinearFeasibilityProblem, Sense, require_optimal
from lmpsquare.logging import logger
from lmpsquare.measure.functions import (
    PositiveFunctional,
    SimpleFunction,
    linear_combination,
    span_coordinates,
)
from lmpsquare.utils import ONE, format_rational


def _coefficient_problem(psi: PositiveFunctional) -> LinearFeasibilityProblem:
    problem = LinearFeasibilityProblem([f"c[{i}]" for i in range(len(psi.basis))])
    problem.mark_free(*range(len(psi.basis)))
    problem.set_objective(dict(enumerate(psi.values)))
    return problem


def negative_witness(psi: PositiveFunctional) -> SimpleFunction | None:
    """A nonnegative f in W with Ψ(f) < 0, or None if Ψ is positive on W⁺.

    Minimizes Ψ(f) over f ∈ W, f ≥ 0, Σ f ≤ 1 (the bound keeps the LP finite).
    """
    psi = psi.independent()
    problem = _coefficient_problem(psi)
    for k, s in enumerate(psi.ground):
        problem.add_constraint(
            {i: f.values[k] for i, f in enumerate(psi.basis)}, Sense.GE, 0, f"f({s}) >= 0"
        )
    problem.add_constraint(
        {i: sum(f.values, Fraction(0)) for i, f in enumerate(psi.basis)}, Sense.LE, 1, "sum f <= 1"
    )
    result = require_optimal(problem, "positivity check")
    assert result.solution is not None and result.objective_value is not None
    if result.objective_value >= 0:
        return None
    return linear_combination(result.solution, psi.basis, psi.ground)


def minimal_majorant_value(psi: PositiveFunctional, f0: SimpleFunction) -> Fraction:
    """inf{Ψ(h) : h ∈ span(basis), h ≥ f₀ pointwise}.

    Raises:
        NotPositive: If the infimum is -∞ (Ψ is not positive)
    """
    psi = psi.independent()
    problem = _coefficient_problem(psi)
    for k, s in enumerate(psi.ground):
        problem.add_constraint(
            {i: f.values[k] for i, f in enumerate(psi.basis)},
            Sense.GE,
            f0.values[k],
            f"h({s}) >= f0({s})",
        )
    try:
        result = require_optimal(problem, "majorant bound")
    except Unbounded:
        raise NotPositive("Majorant bound is unbounded below: functional is not positive") from None
    assert result.objective_value is not None
    return result.objective_value


def _validate_input(psi: PositiveFunctional, v_basis: Sequence[SimpleFunction]) -> None:
    one = SimpleFunction.constant(psi.ground, 1)
    if not psi.contains(one):
        raise ConstantsMissing("The constant function 1 is not in the functional's domain")
    if psi(one) != ONE:
        raise NotNormalized(f"Ψ(1) = {format_rational(psi(one))}, expected 1")
    witness = negative_witness(psi)
    if witness is not None:
        raise NotPositive(f"Ψ({witness}) = {format_rational(psi(witness))} < 0")
    for f in v_basis:
        if f.ground != psi.ground:
            raise SpaceMismatch("Extension basis lives on a different ground set")
    vectors = [f.values for f in v_basis]
    for f in psi.basis:
        if span_coordinates(vectors, f.values) is None:
            raise NotInSpan(f"Domain element {f} is not in the span of the extension basis")


def hahn_banach_extend(
    psi: PositiveFunctional,
    v_basis: Sequence[SimpleFunction],
    config: SquareConfig | None = None,
) -> PositiveFunctional:
    """Extend Ψ from W to V = span(v_basis), keeping it positive and normalized.

    Basis elements already in the current span are skipped; each new one is
    assigned its minimal majorant value, in the given order.

    Raises:
        ConstantsMissing: If 1 ∉ W
        NotNormalized: If Ψ(1) ≠ 1
        NotPositive: If Ψ is negative somewhere on W⁺
        NotInSpan: If W is not contained in V
    """
    config = config or SquareConfig()
    _validate_input(psi, v_basis)

    current = psi.independent()
    basis = list(current.basis)
    values = list(current.values)
    for f0 in v_basis:
        if span_coordinates([f.values for f in basis], f0.values) is not None:
            continue
        value = minimal_majorant_value(
            PositiveFunctional(psi.ground, tuple(basis), tuple(values)), f0
        )
        logger.debug("Extended functional by %s ↦ %s", f0, format_rational(value))
        basis.append(f0)
        values.append(value)

    phi = PositiveFunctional(psi.ground, tuple(basis), tuple(values))
    if config.recheck_positivity:
        for s in psi.ground:
            indicator = SimpleFunction.indicator(psi.ground, (s,))
            if phi.contains(indicator) and phi(indicator) < 0:
                raise NotPositive(f"Extension is negative on the indicator of {s!r}")
        witness = negative_witness(phi)
        if witness is not None:
            raise NotPositive(f"Extension is negative on {witness}")
    return phi
