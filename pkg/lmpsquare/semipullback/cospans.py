"""
lmpsquare.semipullback.cospans - Cospans of kernels and of LMPs.

A cospan is two morphisms h1: S1 → S0 ← S2: h2 together with the objects at
their ends; validate() raises with a witness if a leg is not a morphism.
"""

from __future__ import annotations

from dataclasses import dataclass

from lmpsquare.exceptions import LabelMismatch, SpaceMismatch
from lmpsquare.model.kernels import LMP, Kernel
from lmpsquare.model.morphisms import check_kernel_morphism, check_zigzag
from lmpsquare.model.spaces import FinSpace, Morphism


@dataclass(frozen=True)
class KernelCospan:
    """μ1 →h1 μ0 ←h2 μ2, all three kernels indexed by the same space X."""

    apex: Kernel
    left: Kernel
    right: Kernel
    h1: Morphism
    h2: Morphism

    mode = "kernel"

    @property
    def index_space(self) -> FinSpace:
        return self.apex.source

    def validate(self) -> None:
        """Raise SpaceMismatch or MorphismError unless both legs are kernel morphisms."""
        if not (self.apex.source == self.left.source == self.right.source):
            raise SpaceMismatch("Kernels of the cospan are not indexed by the same space")
        check_kernel_morphism(self.h1, self.left, self.apex, "first leg")
        check_kernel_morphism(self.h2, self.right, self.apex, "second leg")


@dataclass(frozen=True)
class LMPCospan:
    """S1 →h1 S0 ←h2 S2 with zigzag legs."""

    apex: LMP
    left: LMP
    right: LMP
    h1: Morphism
    h2: Morphism

    mode = "lmp"

    @property
    def labels(self) -> tuple[str, ...]:
        return self.apex.labels

    def validate(self) -> None:
        """Raise LabelMismatch or MorphismError unless both legs are zigzags."""
        for side in (self.left, self.right):
            if set(side.labels) != set(self.apex.labels):
                raise LabelMismatch(
                    f"LMP {side.name!r} has labels {sorted(side.labels)}, "
                    f"apex has {sorted(self.apex.labels)}"
                )
        check_zigzag(self.h1, self.left, self.apex, "first leg")
        check_zigzag(self.h2, self.right, self.apex, "second leg")


Cospan = KernelCospan | LMPCospan
