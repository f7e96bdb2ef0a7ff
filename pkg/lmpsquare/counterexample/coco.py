"""
lmpsquare.counterexample.coco - Countable-cocountable sets on an uncountable ground.

"Countable" is modelled as "finite witness": a small set is its witness, a
cosmall set is the complement of its witness. Sets of Σ_V = σ(Σ ∪ {V}) are
pairs of traces, one on V and one on its complement; both halves of V are
uncountable, so Q lies in Σ exactly when its two traces have the same mode.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import NamedTuple

from lmpsquare.exceptions import NotInAlgebra, ParamError
from lmpsquare.utils import ONE, ZERO, format_rational


class Point(NamedTuple):
    name: str
    in_v: bool


class Mode(str, Enum):
    SMALL = "small"
    COSMALL = "cosmall"


@dataclass(frozen=True)
class CocoSet:
    mode: Mode
    witness: frozenset[str] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        object.__setattr__(self, "mode", Mode(self.mode))
        object.__setattr__(self, "witness", frozenset(self.witness))

    @classmethod
    def small(cls, points: Iterable[str] = ()) -> CocoSet:
        return cls(Mode.SMALL, frozenset(points))

    @classmethod
    def cosmall(cls, points: Iterable[str] = ()) -> CocoSet:
        return cls(Mode.COSMALL, frozenset(points))

    @classmethod
    def empty(cls) -> CocoSet:
        return cls.small()

    @classmethod
    def full(cls) -> CocoSet:
        return cls.cosmall()

    @property
    def is_small(self) -> bool:
        return self.mode is Mode.SMALL

    def contains(self, point: str) -> bool:
        return (point in self.witness) == self.is_small

    def complement(self) -> CocoSet:
        flipped = Mode.COSMALL if self.is_small else Mode.SMALL
        return CocoSet(flipped, self.witness)

    def __invert__(self) -> CocoSet:
        return self.complement()

    def __and__(self, other: CocoSet) -> CocoSet:
        if self.is_small and other.is_small:
            return CocoSet.small(self.witness & other.witness)
        if not self.is_small and not other.is_small:
            return CocoSet.cosmall(self.witness | other.witness)
        small, large = (self, other) if self.is_small else (other, self)
        return CocoSet.small(small.witness - large.witness)

    def __or__(self, other: CocoSet) -> CocoSet:
        return ~(~self & ~other)

    def __sub__(self, other: CocoSet) -> CocoSet:
        return self & ~other

    def is_empty(self) -> bool:
        return self.is_small and not self.witness

    def issubset(self, other: CocoSet) -> bool:
        return (self - other).is_empty()

    def __str__(self) -> str:
        points = ", ".join(sorted(self.witness))
        return f"{self.mode.value}{{{points}}}"


@dataclass(frozen=True)
class SigmaVSet:
    """(inside ∩ V) ∪ (outside ∩ Vᶜ)."""

    inside: CocoSet
    outside: CocoSet

    @classmethod
    def V(cls) -> SigmaVSet:
        return cls(CocoSet.full(), CocoSet.empty())

    @classmethod
    def empty(cls) -> SigmaVSet:
        return cls(CocoSet.empty(), CocoSet.empty())

    @classmethod
    def full(cls) -> SigmaVSet:
        return cls(CocoSet.full(), CocoSet.full())

    @classmethod
    def from_sigma(
        cls, mode: Mode, inside: Iterable[str] = (), outside: Iterable[str] = ()
    ) -> SigmaVSet:
        """A set of Σ, given by its mode and the witness points on each side of V."""
        return cls(CocoSet(mode, frozenset(inside)), CocoSet(mode, frozenset(outside)))

    @property
    def in_sigma(self) -> bool:
        return self.inside.mode == self.outside.mode

    def as_coco(self) -> CocoSet:
        """The same set as a member of Σ, witnesses tagged by side.

        Raises:
            NotInAlgebra: If the set is not in Σ
        """
        if not self.in_sigma:
            raise NotInAlgebra(f"{self} is not countable or cocountable")
        witness = {f"V:{p}" for p in self.inside.witness}
        witness |= {f"Vc:{p}" for p in self.outside.witness}
        return CocoSet(self.inside.mode, frozenset(witness))

    def contains(self, point: Point) -> bool:
        side = self.inside if point.in_v else self.outside
        return side.contains(point.name)

    def complement(self) -> SigmaVSet:
        return SigmaVSet(~self.inside, ~self.outside)

    def __invert__(self) -> SigmaVSet:
        return self.complement()

    def __and__(self, other: SigmaVSet) -> SigmaVSet:
        return SigmaVSet(self.inside & other.inside, self.outside & other.outside)

    def __or__(self, other: SigmaVSet) -> SigmaVSet:
        return SigmaVSet(self.inside | other.inside, self.outside | other.outside)

    def __sub__(self, other: SigmaVSet) -> SigmaVSet:
        return SigmaVSet(self.inside - other.inside, self.outside - other.outside)

    def is_empty(self) -> bool:
        return self.inside.is_empty() and self.outside.is_empty()

    def isdisjoint(self, other: SigmaVSet) -> bool:
        return (self & other).is_empty()

    def issubset(self, other: SigmaVSet) -> bool:
        return (self - other).is_empty()

    def __str__(self) -> str:
        return f"V∩{self.inside} ∪ Vᶜ∩{self.outside}"


def mu0(q: CocoSet) -> Fraction:
    """1 on cocountable sets, 0 on countable ones."""
    return ZERO if q.is_small else ONE


def check_parameter(r: Fraction) -> Fraction:
    r = Fraction(r)
    if not ZERO < r < ONE:
        raise ParamError(f"Parameter must lie strictly between 0 and 1, got {format_rational(r)}")
    return r


def mu_i(q: SigmaVSet, r: Fraction) -> Fraction:
    """Extension of μ0 to Σ_V that gives V mass r."""
    r = check_parameter(r)
    if q.in_sigma:
        return mu0(q.as_coco())
    if q.outside.is_small:
        return r
    return ONE - r


@dataclass(frozen=True)
class ExampleMeasure:
    r: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "r", check_parameter(self.r))

    def __call__(self, q: SigmaVSet) -> Fraction:
        return mu_i(q, self.r)
