"""
lmpsquare.extension.strassen - Common extension of two finitely additive measures.

Two probability measures on subalgebras 𝔄1, 𝔄2 of 𝔄 have a common
extension to 𝔄 iff ν1(A1) + ν2(A2) ≤ 1 for all disjoint A1 ∈ 𝔄1, A2 ∈ 𝔄2.
The extension itself is picked by an exact LP over the 𝔄-atom masses with a
fixed objective, which replaces an arbitrary choice by a deterministic one.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from lmpsquare.config import SquareConfig
from lmpsquare.exceptions import Infeasible, NotNormalized, NotSubalgebra
from lmpsquare.extension.simplex import LinearFeasibilityProblem, Sense, require_optimal
from lmpsquare.logging import logger
from lmpsquare.measure.algebra import SetAlgebra
from lmpsquare.measure.finadd import FinAddMeasure
from lmpsquare.model.spaces import StateId
from lmpsquare.utils import ONE, format_rational


@dataclass(frozen=True)
class ViolatingPair:
    first: frozenset[StateId]
    second: frozenset[StateId]
    total: Fraction

    def to_dict(self) -> dict:
        return {
            "first": sorted(self.first),
            "second": sorted(self.second),
            "total": format_rational(self.total),
        }


@dataclass(frozen=True)
class StrassenCheck:
    holds: bool
    violation: ViolatingPair | None = None
    method: str = "optimized"

    def __bool__(self) -> bool:
        return self.holds

    def to_dict(self) -> dict:
        data: dict = {"holds": self.holds, "method": self.method}
        if self.violation is not None:
            data["violation"] = self.violation.to_dict()
        return data


def _check_inputs(nu1: FinAddMeasure, nu2: FinAddMeasure, ambient: SetAlgebra) -> None:
    for name, nu in (("first", nu1), ("second", nu2)):
        if not nu.algebra.is_subalgebra_of(ambient):
            raise NotSubalgebra(f"Algebra of the {name} measure is not a subalgebra of the ambient")
        if nu.total != ONE:
            raise NotNormalized(
                f"The {name} measure has total mass {format_rational(nu.total)}, expected 1"
            )


def _optimized(nu1: FinAddMeasure, nu2: FinAddMeasure) -> StrassenCheck:
    """For each A1 only the largest disjoint A2 matters: the 𝔄2-atoms missing A1."""
    for a1 in nu1.algebra.elements():
        disjoint = [i for i, atom in enumerate(nu2.algebra.atoms) if a1.isdisjoint(atom)]
        a2 = nu2.algebra.union(disjoint)
        total = nu1(a1) + nu2(a2)
        if total > ONE:
            return StrassenCheck(False, ViolatingPair(a1, a2, total), "optimized")
    return StrassenCheck(True, method="optimized")


def _brute_force(nu1: FinAddMeasure, nu2: FinAddMeasure) -> StrassenCheck:
    second = list(nu2.algebra.elements())
    for a1 in nu1.algebra.elements():
        m1 = nu1(a1)
        for a2 in second:
            if a1.isdisjoint(a2):
                total = m1 + nu2(a2)
                if total > ONE:
                    return StrassenCheck(False, ViolatingPair(a1, a2, total), "brute-force")
    return StrassenCheck(True, method="brute-force")


def strassen_condition(
    nu1: FinAddMeasure,
    nu2: FinAddMeasure,
    ambient: SetAlgebra,
    config: SquareConfig | None = None,
) -> StrassenCheck:
    """Check ν1(A1) + ν2(A2) ≤ 1 for all disjoint A1 ∈ 𝔄1, A2 ∈ 𝔄2.

    Enumerates all pairs when the two algebras together have at most
    config.enumeration_limit atoms, otherwise uses the optimized form.

    Raises:
        NotSubalgebra: If 𝔄1 or 𝔄2 is not contained in the ambient algebra
        NotNormalized: If ν1 or ν2 does not have total mass 1
    """
    config = config or SquareConfig()
    _check_inputs(nu1, nu2, ambient)
    if len(nu1.algebra) + len(nu2.algebra) <= config.enumeration_limit:
        return _brute_force(nu1, nu2)
    return _optimized(nu1, nu2)


def extension_problem(
    nu1: FinAddMeasure, nu2: FinAddMeasure, ambient: SetAlgebra
) -> LinearFeasibilityProblem:
    """LP over ambient atom masses: agree with ν1 and ν2 on their atoms.

    The objective Σ i·mass_i pushes mass onto least-index atoms.
    """
    problem = LinearFeasibilityProblem([f"atom[{i}]" for i in range(len(ambient))])
    for name, nu in (("first", nu1), ("second", nu2)):
        for k, (atom, mass) in enumerate(zip(nu.algebra.atoms, nu.atom_mass)):
            problem.add_constraint(
                {i: 1 for i in ambient.atoms_in(atom)}, Sense.EQ, mass, f"{name}[{k}]"
            )
    problem.add_constraint({i: 1 for i in range(len(ambient))}, Sense.EQ, 1, "total")
    problem.set_objective({i: i for i in range(len(ambient))})
    return problem


def common_extension(
    nu1: FinAddMeasure,
    nu2: FinAddMeasure,
    ambient: SetAlgebra,
) -> FinAddMeasure:
    """Probability measure on the ambient algebra restricting to ν1 and to ν2.

    Raises:
        Infeasible: Exactly when the Strassen condition fails
        NotSubalgebra: If 𝔄1 or 𝔄2 is not contained in the ambient algebra
        NotNormalized: If ν1 or ν2 does not have total mass 1
    """
    _check_inputs(nu1, nu2, ambient)
    problem = extension_problem(nu1, nu2, ambient)
    try:
        result = require_optimal(problem, "common extension")
    except Infeasible:
        raise Infeasible(
            "No common extension: the two measures violate the disjoint-sum bound"
        ) from None
    assert result.solution is not None
    logger.debug("Common extension found after %d pivots", result.pivots)
    return FinAddMeasure(ambient, result.solution, probability=True)
