"""Tests for lmpsquare.bisim: partition refinement, quotients and bisimilarity spans."""

from __future__ import annotations

import random
from fractions import Fraction as F

import pytest

from lmpsquare.bisim import (
    Partition,
    are_isomorphic,
    coarsest_stable_partition,
    cospan_from_quotients,
    disjoint_union,
    is_stable,
    largest_zigzag_quotient,
    quotient_by_partition,
    refine_step,
    span_from_cospan,
)
from lmpsquare.bisim.generators import (
    random_kernel_cospan,
    random_lmp,
    random_quotient,
    random_surjection,
    split_mass,
)
from lmpsquare.exceptions import LabelMismatch, ModelError
from lmpsquare.model.kernels import LMP, Kernel
from lmpsquare.model.morphisms import is_zigzag
from lmpsquare.model.spaces import FinSpace


class TestPartition:
    def test_canonical_blocks(self, lumpable_lmp: LMP) -> None:
        partition = Partition(lumpable_lmp.space, (("r",), ("q", "p")))
        assert partition.blocks == (("p", "q"), ("r",))
        assert partition.block_of("q") == ("p", "q")

    def test_blocks_must_partition(self, lumpable_lmp: LMP) -> None:
        with pytest.raises(ModelError):
            Partition(lumpable_lmp.space, (("p", "q"), ("q", "r")))
        with pytest.raises(ModelError):
            Partition(lumpable_lmp.space, (("p",), ("q",)))
        with pytest.raises(ModelError):
            Partition(lumpable_lmp.space, (("p", "q", "r"), ()))

    def test_from_labels(self, lumpable_lmp: LMP) -> None:
        partition = Partition.from_labels(lumpable_lmp.space, {"p": 1, "q": 0, "r": 1})
        assert partition.blocks == (("p", "r"), ("q",))

    def test_refines(self, lumpable_lmp: LMP) -> None:
        space = lumpable_lmp.space
        singletons = Partition(space, tuple((s,) for s in space))
        assert singletons.refines(Partition.trivial(space))
        assert not Partition.trivial(space).refines(singletons)


class TestRefinement:
    def test_refine_step(self, lumpable_lmp: LMP) -> None:
        step = refine_step(lumpable_lmp, Partition.trivial(lumpable_lmp.space))
        assert step.blocks == (("p", "q"), ("r",))

    def test_coarsest(self, lumpable_lmp: LMP) -> None:
        partition = coarsest_stable_partition(lumpable_lmp)
        assert partition.blocks == (("p", "q"), ("r",))
        assert is_stable(lumpable_lmp, partition)
        assert not is_stable(lumpable_lmp, Partition.trivial(lumpable_lmp.space))

    def test_initial_partition_respected(self, lumpable_lmp: LMP) -> None:
        space = lumpable_lmp.space
        initial = Partition.from_labels(space, {"p": 0, "q": 1, "r": 0})
        partition = coarsest_stable_partition(lumpable_lmp, initial)
        assert partition.refines(initial)
        assert len(partition) == 3

    def test_stochastic_lmp_collapses(self) -> None:
        space = FinSpace(("s", "t"))
        lmp = LMP.from_matrices(space, {"a": [[F(1), F(0)], [F(1, 2), F(1, 2)]]})
        assert coarsest_stable_partition(lmp).blocks == (("s", "t"),)

    def test_independent_of_state_and_label_order(self) -> None:
        rng = random.Random(7)
        for _ in range(100):
            lmp = random_lmp(rng, rng.randint(1, 6), labels=("a", "b", "c"), denominator=4)
            states = list(lmp.space.states)
            rng.shuffle(states)
            space = FinSpace(tuple(states))
            kernels = {
                label: Kernel(
                    space,
                    space,
                    {s: tuple(lmp.kernel(label).mass(s, (t,)) for t in space) for s in space},
                )
                for label in lmp.labels
            }
            shuffled = LMP(space, tuple(reversed(lmp.labels)), kernels)
            blocks = {frozenset(b) for b in coarsest_stable_partition(lmp).blocks}
            assert {frozenset(b) for b in coarsest_stable_partition(shuffled).blocks} == blocks


class TestQuotient:
    def test_largest_quotient(self, lumpable_lmp: LMP) -> None:
        quotient, q = largest_zigzag_quotient(lumpable_lmp)
        assert quotient.space.states == ("p", "r")
        assert quotient.name == "L/~"
        assert quotient.kernel("a").row("p") == (F(1, 2), F(1, 2))
        assert quotient.kernel("a").row("r") == (F(1, 2), F(0))
        assert dict(q.mapping) == {"p": "p", "q": "p", "r": "r"}
        assert is_zigzag(q, lumpable_lmp, quotient)

    def test_quotient_is_minimal(self, lumpable_lmp: LMP) -> None:
        quotient, _ = largest_zigzag_quotient(lumpable_lmp)
        assert len(coarsest_stable_partition(quotient)) == len(quotient.space)

    def test_unstable_partition(self, lumpable_lmp: LMP) -> None:
        with pytest.raises(ModelError, match="not stable"):
            quotient_by_partition(lumpable_lmp, Partition.trivial(lumpable_lmp.space))

    def test_discrete_partition(self, lumpable_lmp: LMP) -> None:
        discrete = Partition.from_labels(lumpable_lmp.space, {s: s for s in lumpable_lmp.space})
        quotient, q = quotient_by_partition(lumpable_lmp, discrete)
        assert quotient.space.states == lumpable_lmp.space.states
        assert q.is_surjective()


class TestIsomorphism:
    def test_disjoint_union(self, lumpable_lmp: LMP, minimal_lmp: LMP) -> None:
        union = disjoint_union(lumpable_lmp, minimal_lmp)
        assert union.space.states == ("1:p", "1:q", "1:r", "2:m0", "2:m1")
        assert union.tau("a", "2:m0", ["2:m1"]) == F(1, 2)
        assert union.tau("a", "1:p", ["2:m0", "2:m1"]) == 0

    def test_disjoint_union_labels(self, lumpable_lmp: LMP) -> None:
        other = LMP.from_matrices(lumpable_lmp.space, {"b": lumpable_lmp.kernel("a").matrix()})
        with pytest.raises(LabelMismatch):
            disjoint_union(lumpable_lmp, other)

    def test_isomorphic(self, lumpable_lmp: LMP, minimal_lmp: LMP) -> None:
        quotient, _ = largest_zigzag_quotient(lumpable_lmp)
        iso = are_isomorphic(quotient, minimal_lmp)
        assert iso is not None
        assert dict(iso.mapping) == {"p": "m0", "r": "m1"}

    def test_different_sizes(self, lumpable_lmp: LMP, minimal_lmp: LMP) -> None:
        assert are_isomorphic(lumpable_lmp, minimal_lmp) is None

    def test_same_size_not_isomorphic(self, minimal_lmp: LMP) -> None:
        other = LMP.from_matrices(
            minimal_lmp.space, {"a": [[F(1, 2), F(1, 2)], [F(1, 3), F(0)]]}
        )
        assert are_isomorphic(minimal_lmp, other) is None


class TestSpans:
    def test_cospan_from_quotients(self, lumpable_lmp: LMP, minimal_lmp: LMP) -> None:
        cospan = cospan_from_quotients(lumpable_lmp, minimal_lmp)
        assert cospan is not None
        assert dict(cospan.h2.mapping) == {"m0": "p", "m1": "r"}
        cospan.validate()

    def test_span_from_cospan(self, lumpable_lmp: LMP, minimal_lmp: LMP) -> None:
        cospan = cospan_from_quotients(lumpable_lmp, minimal_lmp)
        assert cospan is not None
        result = span_from_cospan(cospan)
        assert result.check()
        assert result.pullback_states == (("p", "m0"), ("q", "m0"), ("r", "m1"))

    def test_not_equivalent(self, lumpable_lmp: LMP) -> None:
        space = FinSpace(("n0",), name="N")
        other = LMP.from_matrices(space, {"a": [[F(1)]]}, name="N")
        assert cospan_from_quotients(lumpable_lmp, other) is None

    def test_label_mismatch(self, lumpable_lmp: LMP) -> None:
        other = LMP.from_matrices(lumpable_lmp.space, {"b": lumpable_lmp.kernel("a").matrix()})
        with pytest.raises(LabelMismatch):
            cospan_from_quotients(lumpable_lmp, other)

    @pytest.mark.slow
    def test_random_quotients_are_bisimilar(self) -> None:
        rng = random.Random(100)
        for _ in range(100):
            labels = ("a", "b", "c")[: rng.randint(1, 3)]
            lmp = random_lmp(rng, rng.randint(1, 8), labels=labels, name="S")
            first, q1 = random_quotient(rng, lmp, blocks=rng.randint(1, 3))
            second, q2 = random_quotient(rng, lmp, blocks=rng.randint(1, 3))
            assert is_zigzag(q1, lmp, first)
            assert is_zigzag(q2, lmp, second)
            cospan = cospan_from_quotients(first, second)
            assert cospan is not None
            result = span_from_cospan(cospan)
            assert result.check()


class TestGenerators:
    def test_split_mass_is_exact(self) -> None:
        rng = random.Random(1)
        for _ in range(20):
            parts = split_mass(rng, F(2, 3), rng.randint(1, 4))
            assert sum(parts, F(0)) == F(2, 3)
            assert all(p >= 0 for p in parts)
        assert split_mass(rng, F(1), 0) == []

    def test_random_surjection(self) -> None:
        rng = random.Random(2)
        domain = FinSpace(("a", "b", "c"))
        codomain = FinSpace(("u", "v"))
        assert random_surjection(rng, domain, codomain).is_surjective()
        with pytest.raises(ValueError):
            random_surjection(rng, codomain, domain)

    def test_random_kernel_cospan_is_valid(self) -> None:
        rng = random.Random(4)
        for probability in (True, False):
            random_kernel_cospan(rng, probability=probability).validate()

    def test_random_quotient_is_zigzag(self) -> None:
        rng = random.Random(5)
        lmp = random_lmp(rng, 4)
        quotient, q = random_quotient(rng, lmp)
        assert is_zigzag(q, lmp, quotient)

    def test_reproducible(self) -> None:
        first = random_lmp(random.Random(8), 3, labels=("a", "b"))
        second = random_lmp(random.Random(8), 3, labels=("a", "b"))
        assert first == second
