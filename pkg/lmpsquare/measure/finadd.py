"""
lmpsquare.measure.finadd - Finitely additive measures on finite algebras.

A measure is a nonnegative rational mass per atom; ν(A) for an algebra set
is the sum over the atoms inside A, so finite additivity holds by
construction.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction

from lmpsquare.exceptions import (
    ModelError,
    NotMeasurable,
    NotSubalgebra,
    SpaceMismatch,
)
from lmpsquare.measure.algebra import SetAlgebra
from lmpsquare.measure.functions import SimpleFunction
from lmpsquare.model.spaces import FinSpace, StateId
from lmpsquare.utils import ONE, format_rational, rsum


@dataclass(frozen=True)
class FinAddMeasure:
    """Finitely additive (sub)probability measure given by atom masses."""

    algebra: SetAlgebra
    atom_mass: tuple[Fraction, ...]
    probability: bool = False

    def __post_init__(self) -> None:
        masses = tuple(Fraction(m) for m in self.atom_mass)
        if len(masses) != len(self.algebra):
            raise ModelError(f"Expected {len(self.algebra)} atom masses, got {len(masses)}")
        if any(m < 0 for m in masses):
            raise ModelError("Atom masses must be nonnegative")
        total = rsum(masses)
        if total > ONE:
            raise ModelError(f"Total mass {format_rational(total)} exceeds 1")
        if self.probability and total != ONE:
            raise ModelError(f"Probability measure has total mass {format_rational(total)}")
        object.__setattr__(self, "atom_mass", masses)

    @classmethod
    def from_row(
        cls, ground: FinSpace, row: Sequence[Fraction], probability: bool = False
    ) -> FinAddMeasure:
        """Measure on the powerset algebra from a per-state mass row."""
        return cls(SetAlgebra.powerset(ground), tuple(row), probability)

    @property
    def ground(self) -> FinSpace:
        return self.algebra.ground

    @property
    def total(self) -> Fraction:
        return rsum(self.atom_mass)

    def __call__(self, subset: Iterable[StateId]) -> Fraction:
        return eval_measure(self, subset)

    def to_dict(self) -> dict:
        return {
            "atoms": [list(atom) for atom in self.algebra.atoms],
            "masses": [format_rational(m) for m in self.atom_mass],
        }


def eval_measure(nu: FinAddMeasure, subset: Iterable[StateId]) -> Fraction:
    """ν(A) for A a union of atoms.

    Raises:
        NotInAlgebra: If A splits an atom
    """
    return rsum(nu.atom_mass[i] for i in nu.algebra.atoms_in(subset))


def integral(nu: FinAddMeasure, f: SimpleFunction) -> Fraction:
    """∫ f dν = Σ over atoms of (value on atom) · (atom mass).

    Raises:
        NotMeasurable: If f is not constant on some atom
    """
    if f.ground != nu.ground:
        raise SpaceMismatch("Function and measure live on different ground sets")
    total = Fraction(0)
    for atom, mass in zip(nu.algebra.atoms, nu.atom_mass):
        values = {f(s) for s in atom}
        if len(values) != 1:
            raise NotMeasurable(f"Function is not constant on atom {set(atom)}")
        total += values.pop() * mass
    return total


def restrict_measure(nu: FinAddMeasure, subalgebra: SetAlgebra) -> FinAddMeasure:
    """ν restricted to a subalgebra of its own algebra."""
    if not subalgebra.is_subalgebra_of(nu.algebra):
        raise NotSubalgebra("Restriction target is not a subalgebra")
    masses = tuple(eval_measure(nu, atom) for atom in subalgebra.atoms)
    return FinAddMeasure(subalgebra, masses, nu.probability)
