"""
lmpsquare.measure.algebra - Finite set algebras as atom partitions.

An algebra is stored as its atoms; a subset belongs to it iff it is a union
of atoms. Atoms are kept in canonical order (by least member in ground
order) so every downstream iteration is deterministic.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from types import MappingProxyType

from lmpsquare.exceptions import ModelError, NotInAlgebra, SpaceMismatch
from lmpsquare.model.spaces import FinSpace, Morphism, StateId
from lmpsquare.utils import subsets

Atom = tuple[StateId, ...]


@dataclass(frozen=True)
class SetAlgebra:
    """Finite algebra of subsets of ground, given by its atoms."""

    ground: FinSpace
    atoms: tuple[Atom, ...]
    _atom_of: Mapping[StateId, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        blocks = [self.ground.ordered(atom) for atom in self.atoms]
        if any(not block for block in blocks):
            raise ModelError("Algebra atoms must be nonempty")
        blocks.sort(key=lambda block: self.ground.index(block[0]))
        atom_of: dict[StateId, int] = {}
        for i, block in enumerate(blocks):
            for s in block:
                if s in atom_of:
                    raise ModelError(f"State {s!r} lies in two atoms")
                atom_of[s] = i
        uncovered = [s for s in self.ground if s not in atom_of]
        if uncovered:
            raise ModelError(f"Atoms do not cover the ground set: {uncovered}")
        object.__setattr__(self, "atoms", tuple(blocks))
        object.__setattr__(self, "_atom_of", MappingProxyType(atom_of))

    @classmethod
    def powerset(cls, ground: FinSpace) -> SetAlgebra:
        return cls(ground, tuple((s,) for s in ground))

    @classmethod
    def trivial(cls, ground: FinSpace) -> SetAlgebra:
        return cls(ground, (ground.states,))

    def __len__(self) -> int:
        return len(self.atoms)

    def atom_of(self, state: StateId) -> int:
        return self._atom_of[state]

    def atoms_in(self, subset: Iterable[StateId]) -> list[int]:
        """Indices of the atoms whose union is subset.

        Raises:
            NotInAlgebra: If subset splits an atom
        """
        members = set(self.ground.ordered(subset))
        indices = sorted({self._atom_of[s] for s in members})
        for i in indices:
            if not members.issuperset(self.atoms[i]):
                raise NotInAlgebra(f"Subset splits atom {set(self.atoms[i])}")
        return indices

    def contains(self, subset: Iterable[StateId]) -> bool:
        try:
            self.atoms_in(subset)
        except NotInAlgebra:
            return False
        return True

    def union(self, indices: Iterable[int]) -> frozenset[StateId]:
        return frozenset(s for i in indices for s in self.atoms[i])

    def is_subalgebra_of(self, other: SetAlgebra) -> bool:
        """Every atom of self is a union of atoms of other."""
        return self.ground == other.ground and all(other.contains(atom) for atom in self.atoms)

    def refines(self, other: SetAlgebra) -> bool:
        """Self is at least as fine as other."""
        return other.is_subalgebra_of(self)

    def elements(self) -> Iterator[frozenset[StateId]]:
        """Every algebra element (2^atoms of them), smallest unions first."""
        for chosen in subsets(range(len(self.atoms))):
            yield self.union(chosen)


def generated_algebra(
    ground: FinSpace,
    generators: Iterable[Iterable[StateId]],
) -> SetAlgebra:
    """Smallest algebra containing all generators.

    Atoms are the nonempty cells of the common refinement: states are grouped
    by which generators contain them.
    """
    generator_sets = [frozenset(ground.ordered(g)) for g in generators]
    cells: dict[tuple[bool, ...], list[StateId]] = {}
    for s in ground:
        signature = tuple(s in g for g in generator_sets)
        cells.setdefault(signature, []).append(s)
    return SetAlgebra(ground, tuple(tuple(cell) for cell in cells.values()))


def join(ground: FinSpace, algebras: Sequence[SetAlgebra]) -> SetAlgebra:
    """Algebra generated by the union of several algebras on the same ground."""
    for algebra in algebras:
        if algebra.ground != ground:
            raise SpaceMismatch("Algebras live on different ground sets")
    return generated_algebra(ground, [atom for algebra in algebras for atom in algebra.atoms])


def preimage_algebra(h: Morphism, algebra: SetAlgebra) -> SetAlgebra:
    """{h⁻¹(B) : B in algebra}; atoms are the nonempty preimages of atoms."""
    if algebra.ground != h.codomain:
        raise SpaceMismatch("Algebra is not on the codomain of the map")
    blocks = [h.preimage(atom) for atom in algebra.atoms]
    return SetAlgebra(h.domain, tuple(block for block in blocks if block))
