"""
lmpsquare.extension - Extension engine for finitely additive measures.

Strassen-condition check and common extension, positive one-step
functional extension, promotion to kernel rows, and the exact LP solver
they run on.
"""

from __future__ import annotations

from lmpsquare.extension.hahn_banach import (
    hahn_banach_extend,
    minimal_majorant_value,
    negative_witness,
)
from lmpsquare.extension.sigma import promote_to_sigma_additive
from lmpsquare.extension.simplex import (
    LinearConstraint,
    LinearFeasibilityProblem,
    LPResult,
    LPStatus,
    Sense,
    require_optimal,
    solve,
    vertex_enumeration_optimum,
)
from lmpsquare.extension.strassen import (
    StrassenCheck,
    ViolatingPair,
    common_extension,
    extension_problem,
    strassen_condition,
)

__all__ = [
    "LPResult",
    "LPStatus",
    "LinearConstraint",
    "LinearFeasibilityProblem",
    "Sense",
    "StrassenCheck",
    "ViolatingPair",
    "common_extension",
    "extension_problem",
    "hahn_banach_extend",
    "minimal_majorant_value",
    "negative_witness",
    "promote_to_sigma_additive",
    "require_optimal",
    "solve",
    "strassen_condition",
    "vertex_enumeration_optimum",
]
