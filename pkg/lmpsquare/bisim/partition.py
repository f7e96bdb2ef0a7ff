"""
lmpsquare.bisim.partition - Partition refinement and zigzag quotients.

Blocks are split by the signature s ↦ (τ_a(s, C))_{a, C} over the current
blocks until nothing splits. Two states land in different blocks exactly
when some label and block tell them apart, so the fixpoint is the same as
for a pairwise scan and does not depend on the splitting order.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction

from lmpsquare.exceptions import ModelError, SpaceMismatch
from lmpsquare.logging import logger
from lmpsquare.model.kernels import LMP, Kernel
from lmpsquare.model.morphisms import check_zigzag
from lmpsquare.model.spaces import FinSpace, Morphism, StateId


@dataclass(frozen=True)
class Partition:
    """Disjoint covering blocks, each in space order, ordered by least member."""

    space: FinSpace
    blocks: tuple[tuple[StateId, ...], ...]

    def __post_init__(self) -> None:
        blocks = [self.space.ordered(block) for block in self.blocks]
        if any(not block for block in blocks):
            raise ModelError("Partition has an empty block")
        seen = [s for block in blocks for s in block]
        if len(seen) != len(set(seen)) or set(seen) != set(self.space.states):
            raise ModelError("Blocks must be disjoint and cover the space")
        blocks.sort(key=lambda block: self.space.index(block[0]))
        object.__setattr__(self, "blocks", tuple(blocks))

    @classmethod
    def trivial(cls, space: FinSpace) -> Partition:
        return cls(space, (space.states,) if len(space) else ())

    @classmethod
    def from_labels(cls, space: FinSpace, labels: dict[StateId, object]) -> Partition:
        """Group states with equal labels."""
        groups: dict[object, list[StateId]] = {}
        for s in space:
            groups.setdefault(labels[s], []).append(s)
        return cls(space, tuple(tuple(group) for group in groups.values()))

    def __len__(self) -> int:
        return len(self.blocks)

    def block_of(self, state: StateId) -> tuple[StateId, ...]:
        for block in self.blocks:
            if state in block:
                return block
        raise ModelError(f"State {state!r} is not in the partitioned space")

    def refines(self, other: Partition) -> bool:
        """Every block of self lies inside a block of other."""
        return all(set(block) <= set(other.block_of(block[0])) for block in self.blocks)


def _signature(lmp: LMP, s: StateId, blocks: Iterable[tuple[StateId, ...]]) -> tuple[Fraction, ...]:
    return tuple(lmp.tau(label, s, block) for label in lmp.labels for block in blocks)


def refine_step(lmp: LMP, partition: Partition) -> Partition:
    """Split every block by the signature over the current blocks."""
    if partition.space != lmp.space:
        raise SpaceMismatch("Partition is not on the LMP's state space")
    blocks = partition.blocks
    refined: list[tuple[StateId, ...]] = []
    for block in blocks:
        groups: dict[tuple[Fraction, ...], list[StateId]] = {}
        for s in block:
            groups.setdefault(_signature(lmp, s, blocks), []).append(s)
        refined.extend(tuple(group) for group in groups.values())
    return Partition(lmp.space, tuple(refined))


def is_stable(lmp: LMP, partition: Partition) -> bool:
    return len(refine_step(lmp, partition)) == len(partition)


def coarsest_stable_partition(lmp: LMP, initial: Partition | None = None) -> Partition:
    """Coarsest stable partition refining initial (the one-block partition by default)."""
    partition = initial if initial is not None else Partition.trivial(lmp.space)
    iteration = 0
    while True:
        iteration += 1
        refined = refine_step(lmp, partition)
        logger.debug("Refinement %d: %d -> %d blocks", iteration, len(partition), len(refined))
        if len(refined) == len(partition):
            return partition
        partition = refined


def quotient_by_partition(lmp: LMP, partition: Partition) -> tuple[LMP, Morphism]:
    """Quotient LMP with τ_U([s], [C]) := τ_a(s, C) and the zigzag q: s ↦ [s].

    Blocks are named by their least member.

    Raises:
        ModelError: If the partition is not stable
    """
    if not is_stable(lmp, partition):
        raise ModelError("Partition is not stable: some block mixes distinguishable states")
    names = tuple(block[0] for block in partition.blocks)
    space = FinSpace(names, name=f"{lmp.name}/~" if lmp.name else "")
    kernels = {}
    for label in lmp.labels:
        rows = {
            name: tuple(lmp.tau(label, name, block) for block in partition.blocks)
            for name in names
        }
        kernels[label] = Kernel(space, space, rows)
    quotient = LMP(space, lmp.labels, kernels, name=space.name)
    q = Morphism(
        lmp.space,
        space,
        {s: block[0] for block in partition.blocks for s in block},
    )
    check_zigzag(q, lmp, quotient, "quotient map")
    return quotient, q


def largest_zigzag_quotient(lmp: LMP) -> tuple[LMP, Morphism]:
    """Quotient by the coarsest stable partition."""
    return quotient_by_partition(lmp, coarsest_stable_partition(lmp))
