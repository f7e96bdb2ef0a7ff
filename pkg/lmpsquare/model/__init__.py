"""
lmpsquare.model - Finite measurable spaces, kernels, LMPs and their morphisms.
"""

from __future__ import annotations

from lmpsquare.model.kernels import (
    LMP,
    Kernel,
    KernelKind,
    ValidationReport,
    Violation,
    validate_kernel,
    validate_lmp,
)
from lmpsquare.model.morphisms import (
    CounterexampleWitness,
    MorphismCheck,
    check_kernel_morphism,
    check_zigzag,
    is_kernel_morphism,
    is_kernel_morphism_bruteforce,
    is_zigzag,
)
from lmpsquare.model.spaces import FinSpace, Morphism, StateId, compose, identity

__all__ = [
    "LMP",
    "CounterexampleWitness",
    "FinSpace",
    "Kernel",
    "KernelKind",
    "Morphism",
    "MorphismCheck",
    "StateId",
    "ValidationReport",
    "Violation",
    "check_kernel_morphism",
    "check_zigzag",
    "compose",
    "identity",
    "is_kernel_morphism",
    "is_kernel_morphism_bruteforce",
    "is_zigzag",
    "validate_kernel",
    "validate_lmp",
]
