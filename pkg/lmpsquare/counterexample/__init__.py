"""
lmpsquare.counterexample - Countable-cocountable measures and a cospan of LMPs
that no commutative square completes.
"""

from __future__ import annotations

from lmpsquare.counterexample.coco import (
    CocoSet,
    ExampleMeasure,
    Mode,
    Point,
    SigmaVSet,
    check_parameter,
    mu0,
    mu_i,
)
from lmpsquare.counterexample.obstruction import (
    AdditivityReport,
    DerivationStep,
    ExampleLMP,
    ObstructionReport,
    demonstrate_obstruction,
    identity_zigzag_failures,
    symbolic_family,
    verify_finite_additivity,
)

__all__ = [
    "AdditivityReport",
    "CocoSet",
    "DerivationStep",
    "ExampleLMP",
    "ExampleMeasure",
    "Mode",
    "ObstructionReport",
    "Point",
    "SigmaVSet",
    "check_parameter",
    "demonstrate_obstruction",
    "identity_zigzag_failures",
    "mu0",
    "mu_i",
    "symbolic_family",
    "verify_finite_additivity",
]
