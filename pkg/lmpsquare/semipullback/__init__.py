"""
lmpsquare.semipullback - Semipullbacks of kernel and LMP cospans.
"""

from __future__ import annotations

from lmpsquare.semipullback.completion import complete_space, dead_state_id, one_point_completion
from lmpsquare.semipullback.coupling import independent_coupling
from lmpsquare.semipullback.cospans import Cospan, KernelCospan, LMPCospan
from lmpsquare.semipullback.kernels import semipullback_prob_kernels, semipullback_subprob_kernels
from lmpsquare.semipullback.lmp import label_cospan, semipullback_lmp
from lmpsquare.semipullback.minorant import (
    image_minorant,
    is_measure_preserving,
    strassen_via_minorants,
)
from lmpsquare.semipullback.pullback import (
    ComplementCheck,
    SetPullback,
    check_complement_null,
    complement_rectangles,
    pair_state,
    set_pullback,
)
from lmpsquare.semipullback.result import ExtensionCertificate, SemipullbackResult, SquareCheck

__all__ = [
    "ComplementCheck",
    "Cospan",
    "ExtensionCertificate",
    "KernelCospan",
    "LMPCospan",
    "SemipullbackResult",
    "SetPullback",
    "SquareCheck",
    "check_complement_null",
    "complement_rectangles",
    "complete_space",
    "dead_state_id",
    "image_minorant",
    "independent_coupling",
    "is_measure_preserving",
    "label_cospan",
    "one_point_completion",
    "pair_state",
    "semipullback_lmp",
    "semipullback_prob_kernels",
    "semipullback_subprob_kernels",
    "set_pullback",
    "strassen_via_minorants",
]
