"""
lmpsquare.model.kernels - (Sub)probability kernels and labelled Markov processes.

A Kernel is an X-indexed family of rational row vectors over a target space.
Construction only checks shapes; range and row-sum constraints are reported
by validate_kernel so that invalid input files can be diagnosed.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from types import MappingProxyType

from lmpsquare.exceptions import ModelError, SpaceMismatch
from lmpsquare.model.spaces import FinSpace, Morphism, StateId
from lmpsquare.utils import ONE, ZERO, format_rational, rsum

Row = tuple[Fraction, ...]


class KernelKind(str, Enum):
    PROBABILITY = "probability"
    SUBPROBABILITY = "subprobability"


@dataclass(frozen=True)
class Kernel:
    """Family of measures μˣ on target, one row per state x of source."""

    source: FinSpace
    target: FinSpace
    rows: Mapping[StateId, Row]
    kind: KernelKind = KernelKind.SUBPROBABILITY

    def __post_init__(self) -> None:
        rows = dict(self.rows)
        missing = [x for x in self.source if x not in rows]
        if missing:
            raise ModelError(f"Kernel has no row for {missing}")
        extra = [x for x in rows if x not in self.source]
        if extra:
            raise ModelError(f"Kernel has rows for states outside its source: {extra}")
        ordered: dict[StateId, Row] = {}
        for x in self.source:
            row = tuple(Fraction(v) for v in rows[x])
            if len(row) != len(self.target):
                raise ModelError(
                    f"Row {x!r} has {len(row)} entries, target has {len(self.target)} states"
                )
            ordered[x] = row
        object.__setattr__(self, "rows", MappingProxyType(ordered))
        object.__setattr__(self, "kind", KernelKind(self.kind))

    @classmethod
    def from_matrix(
        cls,
        source: FinSpace,
        target: FinSpace,
        matrix: Sequence[Sequence[Fraction]],
        kind: KernelKind = KernelKind.SUBPROBABILITY,
    ) -> Kernel:
        """Build a kernel from row-major rows in source order."""
        if len(matrix) != len(source):
            raise ModelError(f"Expected {len(source)} rows, got {len(matrix)}")
        return cls(source, target, dict(zip(source.states, matrix)), kind)

    def row(self, x: StateId) -> Row:
        return self.rows[x]

    def mass(self, x: StateId, subset: Iterable[StateId]) -> Fraction:
        row = self.rows[x]
        return rsum(row[self.target.index(s)] for s in set(subset))

    def total(self, x: StateId) -> Fraction:
        return rsum(self.rows[x])

    def matrix(self) -> list[Row]:
        return [self.rows[x] for x in self.source]

    def push_forward(self, h: Morphism) -> Kernel:
        """Image kernel h_*μ on h.codomain."""
        if h.domain != self.target:
            raise SpaceMismatch("push_forward: map domain is not the kernel target")
        fibers = h.fibers()
        rows = {x: tuple(self.mass(x, fibers[t]) for t in h.codomain) for x in self.source}
        return Kernel(self.source, h.codomain, rows, self.kind)

    def with_kind(self, kind: KernelKind) -> Kernel:
        return Kernel(self.source, self.target, self.rows, kind)


@dataclass(frozen=True)
class LMP:
    """Labelled Markov process: one subprobability kernel τ_a per label."""

    space: FinSpace
    labels: tuple[str, ...]
    kernels: Mapping[str, Kernel]
    name: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        labels = tuple(self.labels)
        object.__setattr__(self, "labels", labels)
        if len(set(labels)) != len(labels):
            raise ModelError(f"LMP {self.name!r} has duplicate labels")
        kernels = dict(self.kernels)
        if set(kernels) != set(labels):
            raise ModelError(f"LMP {self.name!r}: kernels must be given for exactly its labels")
        for label in labels:
            k = kernels[label]
            if k.source != self.space or k.target != self.space:
                raise SpaceMismatch(f"LMP {self.name!r}: kernel {label!r} is not on the LMP space")
        ordered = {label: kernels[label] for label in labels}
        object.__setattr__(self, "kernels", MappingProxyType(ordered))

    @classmethod
    def from_matrices(
        cls,
        space: FinSpace,
        matrices: Mapping[str, Sequence[Sequence[Fraction]]],
        name: str = "",
    ) -> LMP:
        kernels = {label: Kernel.from_matrix(space, space, m) for label, m in matrices.items()}
        return cls(space, tuple(matrices), kernels, name=name)

    def kernel(self, label: str) -> Kernel:
        return self.kernels[label]

    def tau(self, label: str, s: StateId, subset: Iterable[StateId]) -> Fraction:
        return self.kernels[label].mass(s, subset)


@dataclass(frozen=True)
class Violation:
    location: str
    message: str

    def __str__(self) -> str:
        return f"{self.location}: {self.message}"


@dataclass
class ValidationReport:
    """Outcome of a validator; empty violations iff valid."""

    subject: str
    violations: list[Violation] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.violations

    def extend(self, other: ValidationReport) -> None:
        self.violations.extend(other.violations)

    def to_dict(self) -> dict:
        return {
            "subject": self.subject,
            "valid": self.valid,
            "violations": [str(v) for v in self.violations],
        }


def validate_kernel(k: Kernel, subject: str = "kernel") -> ValidationReport:
    """Report every entry outside [0,1] and every row sum violating the kind.

    Never raises; the same kernel always yields the same report.
    """
    report = ValidationReport(subject)
    for x in k.source:
        row = k.row(x)
        for s, value in zip(k.target, row):
            if value < ZERO or value > ONE:
                report.violations.append(
                    Violation(
                        f"{subject} row {x}",
                        f"entry {s} = {format_rational(value)} outside [0,1]",
                    )
                )
        total = rsum(row)
        if total > ONE:
            report.violations.append(
                Violation(f"{subject} row {x}", f"row sum {format_rational(total)} > 1")
            )
        elif k.kind is KernelKind.PROBABILITY and total != ONE:
            report.violations.append(
                Violation(f"{subject} row {x}", f"row sum {format_rational(total)} < 1")
            )
    return report


def validate_lmp(lmp: LMP, subject: str | None = None) -> ValidationReport:
    """Validate every per-label kernel of an LMP as a subprobability kernel."""
    subject = subject or lmp.name or "lmp"
    report = ValidationReport(subject)
    for label in lmp.labels:
        kernel = lmp.kernel(label).with_kind(KernelKind.SUBPROBABILITY)
        report.extend(validate_kernel(kernel, f"{subject}[{label}]"))
    return report
