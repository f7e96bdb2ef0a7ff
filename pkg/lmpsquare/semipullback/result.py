"""
lmpsquare.semipullback.result - Semipullback results and their certificates.

Every intermediate object of the construction is kept per index state x (and
per label for LMPs) so each step can be audited after the fact.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from lmpsquare.extension.strassen import StrassenCheck
from lmpsquare.measure.finadd import FinAddMeasure
from lmpsquare.measure.functions import PositiveFunctional
from lmpsquare.model.kernels import LMP, Kernel
from lmpsquare.model.morphisms import is_kernel_morphism, is_zigzag
from lmpsquare.model.spaces import Morphism, StateId, compose
from lmpsquare.semipullback.cospans import Cospan, KernelCospan
from lmpsquare.semipullback.pullback import ComplementCheck, StatePair, pair_state
from lmpsquare.utils import format_rational


@dataclass(frozen=True)
class ExtensionCertificate:
    """Intermediate objects of the construction at one index state."""

    x: StateId
    nu1: FinAddMeasure
    nu2: FinAddMeasure
    common: FinAddMeasure
    functional: PositiveFunctional
    nu3: FinAddMeasure
    strassen: StrassenCheck | None = None
    minorant: StrassenCheck | None = None
    complement: ComplementCheck | None = None
    label: str | None = None

    def to_dict(self) -> dict:
        data: dict = {
            "x": self.x,
            "nu1": self.nu1.to_dict(),
            "nu2": self.nu2.to_dict(),
            "common_extension": self.common.to_dict(),
            "functional": self.functional.to_dict(),
            "nu3": self.nu3.to_dict(),
        }
        if self.label is not None:
            data["label"] = self.label
        if self.strassen is not None:
            data["strassen"] = self.strassen.to_dict()
        if self.minorant is not None:
            data["image_minorant"] = self.minorant.to_dict()
        if self.complement is not None:
            data["complement"] = self.complement.to_dict()
        return data


@dataclass(frozen=True)
class SquareCheck:
    failures: tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return not self.failures

    def __bool__(self) -> bool:
        return self.passed


@dataclass(frozen=True)
class SemipullbackResult:
    """Vertex μ3 (or S3) of a commutative square over a cospan."""

    cospan: Cospan
    vertex: Kernel | LMP
    k1: Morphism
    k2: Morphism
    pullback_states: tuple[StatePair, ...]
    certificates: tuple[ExtensionCertificate, ...] = field(default=())

    def check(self) -> SquareCheck:
        """Re-verify commutativity, the pullback set, marginals and totals."""
        c = self.cospan
        failures: list[str] = []

        if not compose(self.k1, c.h1).same_map(compose(self.k2, c.h2)):
            failures.append("square does not commute: h1∘k1 ≠ h2∘k2")

        expected = tuple(
            (s1, s2) for s1 in c.h1.domain for s2 in c.h2.domain if c.h1(s1) == c.h2(s2)
        )
        if self.pullback_states != expected:
            failures.append("pullback states differ from {(s1, s2) : h1(s1) = h2(s2)}")
        for s1, s2 in self.pullback_states:
            p = pair_state(s1, s2)
            if p not in self.k1.domain or self.k1(p) != s1 or self.k2(p) != s2:
                failures.append(f"projections are not coordinate maps at {p}")
                break

        if isinstance(c, KernelCospan):
            assert isinstance(self.vertex, Kernel)
            for name, k, side in (("k1", self.k1, c.left), ("k2", self.k2, c.right)):
                result = is_kernel_morphism(k, self.vertex, side)
                if not result:
                    assert result.witness is not None
                    failures.append(f"{name} is not a kernel morphism: {result.witness.describe()}")
            for x in c.index_space:
                if self.vertex.total(x) != c.apex.total(x):
                    failures.append(
                        f"total mass at {x}: {format_rational(self.vertex.total(x))} "
                        f"≠ {format_rational(c.apex.total(x))}"
                    )
        else:
            assert isinstance(self.vertex, LMP)
            for name, k, side in (("k1", self.k1, c.left), ("k2", self.k2, c.right)):
                result = is_zigzag(k, self.vertex, side)
                if not result:
                    assert result.witness is not None
                    failures.append(f"{name} is not a zigzag: {result.witness.describe()}")
        return SquareCheck(tuple(failures))

    def to_dict(self) -> dict:
        return {
            "mode": self.cospan.mode,
            "pullback_states": [list(pair) for pair in self.pullback_states],
            "certificates": [cert.to_dict() for cert in self.certificates],
        }
