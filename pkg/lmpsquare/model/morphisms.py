"""
lmpsquare.model.morphisms - Kernel-morphism and zigzag checks.

Both checks require surjectivity and compare masses of singleton preimages;
on a powerset algebra finite additivity makes singletons sufficient.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from lmpsquare.exceptions import LabelMismatch, MorphismError, SpaceMismatch
from lmpsquare.model.kernels import LMP, Kernel
from lmpsquare.model.spaces import Morphism, StateId
from lmpsquare.utils import format_rational, subsets


@dataclass(frozen=True)
class CounterexampleWitness:
    """Where a morphism condition fails.

    kind is "not-surjective" (target holds a missed codomain state) or
    "mass" (the preimage of target under the map has the wrong mass at x).
    """

    kind: str
    target: tuple[StateId, ...]
    x: StateId | None = None
    label: str | None = None
    expected: Fraction | None = None
    actual: Fraction | None = None

    def describe(self) -> str:
        if self.kind == "not-surjective":
            return f"map misses codomain state {self.target[0]!r}"
        parts = []
        if self.label is not None:
            parts.append(f"a={self.label}")
        parts.append(f"s={self.x}")
        parts.append("Q={" + ", ".join(self.target) + "}")
        assert self.expected is not None and self.actual is not None
        return (
            f"({', '.join(parts)}): preimage mass {format_rational(self.actual)} "
            f"!= {format_rational(self.expected)}"
        )

    def to_dict(self) -> dict:
        data: dict = {"kind": self.kind, "target": list(self.target)}
        if self.x is not None:
            data["x"] = self.x
        if self.label is not None:
            data["label"] = self.label
        if self.expected is not None:
            data["expected"] = format_rational(self.expected)
        if self.actual is not None:
            data["actual"] = format_rational(self.actual)
        return data


@dataclass(frozen=True)
class MorphismCheck:
    """Boolean outcome of a morphism check plus a witness when it fails."""

    ok: bool
    witness: CounterexampleWitness | None = None

    def __bool__(self) -> bool:
        return self.ok


PASSED = MorphismCheck(True)


def _surjectivity(h: Morphism) -> MorphismCheck:
    missed = h.missed()
    if missed:
        return MorphismCheck(False, CounterexampleWitness("not-surjective", (missed[0],)))
    return PASSED


def _check_spaces(h: Morphism, mu1: Kernel, mu2: Kernel) -> None:
    if mu1.source != mu2.source:
        raise SpaceMismatch("Kernels do not share their index space")
    if h.domain != mu1.target:
        raise SpaceMismatch("Map domain is not the target of the first kernel")
    if h.codomain != mu2.target:
        raise SpaceMismatch("Map codomain is not the target of the second kernel")


def is_kernel_morphism(h: Morphism, mu1: Kernel, mu2: Kernel) -> MorphismCheck:
    """True iff h is surjective and μ1ˣ(h⁻¹{s'}) = μ2ˣ(s') for all x, s'.

    Raises:
        SpaceMismatch: If the kernels and the map do not line up
    """
    _check_spaces(h, mu1, mu2)
    surjective = _surjectivity(h)
    if not surjective:
        return surjective
    fibers = h.fibers()
    for x in mu1.source:
        for t in h.codomain:
            actual = mu1.mass(x, fibers[t])
            expected = mu2.mass(x, (t,))
            if actual != expected:
                witness = CounterexampleWitness(
                    "mass", (t,), x=x, expected=expected, actual=actual
                )
                return MorphismCheck(False, witness)
    return PASSED


def is_kernel_morphism_bruteforce(h: Morphism, mu1: Kernel, mu2: Kernel) -> MorphismCheck:
    """Same check over every subset A of the codomain (small codomains only)."""
    _check_spaces(h, mu1, mu2)
    surjective = _surjectivity(h)
    if not surjective:
        return surjective
    for x in mu1.source:
        for subset in subsets(h.codomain.states):
            actual = mu1.mass(x, h.preimage(subset))
            expected = mu2.mass(x, subset)
            if actual != expected:
                return MorphismCheck(
                    False,
                    CounterexampleWitness("mass", subset, x=x, expected=expected, actual=actual),
                )
    return PASSED


def is_zigzag(f: Morphism, source: LMP, target: LMP) -> MorphismCheck:
    """True iff f is surjective and τ_a(s, f⁻¹{q}) = τ'_a(f(s), q) for all a, s, q.

    Raises:
        LabelMismatch: If the two LMPs have different label sets
        SpaceMismatch: If f does not go from source.space to target.space
    """
    if set(source.labels) != set(target.labels):
        raise LabelMismatch(
            f"Label sets differ: {sorted(source.labels)} vs {sorted(target.labels)}"
        )
    if f.domain != source.space or f.codomain != target.space:
        raise SpaceMismatch("Map does not go between the two LMP spaces")
    surjective = _surjectivity(f)
    if not surjective:
        return surjective
    fibers = f.fibers()
    for label in source.labels:
        for s in source.space:
            for q in target.space:
                actual = source.tau(label, s, fibers[q])
                expected = target.tau(label, f(s), (q,))
                if actual != expected:
                    return MorphismCheck(
                        False,
                        CounterexampleWitness(
                            "mass", (q,), x=s, label=label, expected=expected, actual=actual
                        ),
                    )
    return PASSED


def check_kernel_morphism(h: Morphism, mu1: Kernel, mu2: Kernel, what: str = "map") -> None:
    """Raise MorphismError carrying the witness if h is not a kernel morphism."""
    result = is_kernel_morphism(h, mu1, mu2)
    if not result:
        raise MorphismError(f"{what} is not a kernel morphism", result.witness)


def check_zigzag(f: Morphism, source: LMP, target: LMP, what: str = "map") -> None:
    """Raise MorphismError carrying the witness if f is not a zigzag."""
    result = is_zigzag(f, source, target)
    if not result:
        raise MorphismError(f"{what} is not a zigzag", result.witness)
