"""Tests for lmpsquare.model: spaces, kernels, LMPs and morphism checks."""

from __future__ import annotations

import random
from fractions import Fraction as F

import pytest

from lmpsquare.bisim.generators import (
    random_kernel_cospan,
    random_lmp,
    random_quotient,
    random_unfolding,
)
from lmpsquare.exceptions import LabelMismatch, ModelError, MorphismError, SpaceMismatch
from lmpsquare.model.kernels import (
    LMP,
    Kernel,
    KernelKind,
    validate_kernel,
    validate_lmp,
)
from lmpsquare.model.morphisms import (
    check_kernel_morphism,
    check_zigzag,
    is_kernel_morphism,
    is_kernel_morphism_bruteforce,
    is_zigzag,
)
from lmpsquare.model.spaces import FinSpace, Morphism, compose, identity


@pytest.fixture
def abc() -> FinSpace:
    return FinSpace(("a", "b", "c"), name="S")


class TestFinSpace:
    def test_empty_space(self) -> None:
        with pytest.raises(ModelError, match="no states"):
            FinSpace(())

    def test_duplicate_states(self) -> None:
        with pytest.raises(ModelError, match="duplicate"):
            FinSpace(("a", "b", "a"))

    def test_empty_state_id(self) -> None:
        with pytest.raises(ModelError):
            FinSpace(("a", ""))

    def test_index_and_contains(self, abc: FinSpace) -> None:
        assert abc.index("c") == 2
        assert "b" in abc
        assert "z" not in abc

    def test_unknown_state(self, abc: FinSpace) -> None:
        with pytest.raises(ModelError, match="not in space"):
            abc.index("z")

    def test_ordered(self, abc: FinSpace) -> None:
        assert abc.ordered(["c", "a", "c"]) == ("a", "c")

    def test_name_not_compared(self, abc: FinSpace) -> None:
        assert abc.renamed("T") == abc
        assert abc.renamed("T").name == "T"


class TestMorphism:
    def test_not_total(self, abc: FinSpace) -> None:
        target = FinSpace(("u",))
        with pytest.raises(ModelError, match="not total"):
            Morphism(abc, target, {"a": "u"})

    def test_image_outside_codomain(self, abc: FinSpace) -> None:
        with pytest.raises(ModelError, match="not in the codomain"):
            Morphism(abc, FinSpace(("u",)), {"a": "u", "b": "u", "c": "v"})

    def test_fibers_and_missed(self, abc: FinSpace) -> None:
        target = FinSpace(("u", "v", "w"))
        h = Morphism(abc, target, {"a": "u", "b": "u", "c": "v"})
        assert h.fibers() == {"u": ("a", "b"), "v": ("c",), "w": ()}
        assert h.missed() == ("w",)
        assert not h.is_surjective()
        assert h.preimage(["u"]) == ("a", "b")
        assert h.image(["c", "a"]) == ("u", "v")

    def test_compose(self, abc: FinSpace) -> None:
        mid = FinSpace(("u", "v"))
        end = FinSpace(("z",))
        f = Morphism(abc, mid, {"a": "u", "b": "v", "c": "v"})
        g = Morphism(mid, end, {"u": "z", "v": "z"})
        gf = compose(f, g)
        assert gf.domain == abc and gf("b") == "z"

    def test_compose_mismatch(self, abc: FinSpace) -> None:
        with pytest.raises(SpaceMismatch):
            compose(identity(abc), identity(FinSpace(("u",))))

    def test_same_map(self, abc: FinSpace) -> None:
        assert identity(abc).same_map(Morphism(abc, abc, {"a": "a", "b": "b", "c": "c"}))


class TestKernel:
    def test_missing_row(self, abc: FinSpace) -> None:
        with pytest.raises(ModelError, match="no row"):
            Kernel(abc, abc, {"a": (0, 0, 0)})

    def test_ragged_row(self, abc: FinSpace) -> None:
        with pytest.raises(ModelError, match="entries"):
            Kernel.from_matrix(abc, abc, [[F(0)], [F(0)], [F(0)]])

    def test_mass_and_total(self, abc: FinSpace) -> None:
        k = Kernel.from_matrix(abc, abc, [[F(1, 2), F(1, 4), F(0)]] * 3)
        assert k.mass("a", ["a", "b"]) == F(3, 4)
        assert k.total("c") == F(3, 4)

    def test_push_forward(self, abc: FinSpace) -> None:
        k = Kernel.from_matrix(abc, abc, [[F(1, 2), F(1, 4), F(1, 4)]] * 3)
        h = Morphism(abc, FinSpace(("u", "v")), {"a": "u", "b": "v", "c": "v"})
        assert k.push_forward(h).row("b") == (F(1, 2), F(1, 2))

    def test_push_forward_mismatch(self, abc: FinSpace) -> None:
        k = Kernel.from_matrix(abc, abc, [[F(0)] * 3] * 3)
        with pytest.raises(SpaceMismatch):
            k.push_forward(identity(FinSpace(("u",))))


class TestValidateKernel:
    def test_valid(self, abc: FinSpace) -> None:
        k = Kernel.from_matrix(abc, abc, [[F(1, 3)] * 3] * 3, KernelKind.PROBABILITY)
        assert validate_kernel(k).valid

    def test_entry_out_of_range(self, abc: FinSpace) -> None:
        k = Kernel.from_matrix(abc, abc, [[F(-1, 2), F(0), F(0)]] + [[F(0)] * 3] * 2)
        report = validate_kernel(k)
        assert [str(v) for v in report.violations] == ["kernel row a: entry a = -1/2 outside [0,1]"]

    def test_row_sum_too_large(self, abc: FinSpace) -> None:
        k = Kernel.from_matrix(abc, abc, [[F(2, 3), F(1, 2), F(0)]] + [[F(0)] * 3] * 2)
        messages = [v.message for v in validate_kernel(k).violations]
        assert messages == ["row sum 7/6 > 1"]

    def test_probability_row_sum_too_small(self, abc: FinSpace) -> None:
        k = Kernel.from_matrix(abc, abc, [[F(1, 2), F(0), F(0)]] * 3, KernelKind.PROBABILITY)
        report = validate_kernel(k, "mu")
        assert len(report.violations) == 3
        assert report.to_dict()["violations"][0] == "mu row a: row sum 1/2 < 1"

    def test_deterministic(self, abc: FinSpace) -> None:
        k = Kernel.from_matrix(abc, abc, [[F(2), F(0), F(0)]] * 3)
        assert validate_kernel(k).to_dict() == validate_kernel(k).to_dict()


class TestLMP:
    def test_duplicate_labels(self, abc: FinSpace) -> None:
        k = Kernel.from_matrix(abc, abc, [[F(0)] * 3] * 3)
        with pytest.raises(ModelError, match="duplicate labels"):
            LMP(abc, ("a", "a"), {"a": k})

    def test_kernel_for_every_label(self, abc: FinSpace) -> None:
        k = Kernel.from_matrix(abc, abc, [[F(0)] * 3] * 3)
        with pytest.raises(ModelError, match="exactly its labels"):
            LMP(abc, ("a", "b"), {"a": k})

    def test_kernel_on_other_space(self, abc: FinSpace) -> None:
        other = FinSpace(("u",))
        k = Kernel.from_matrix(other, other, [[F(0)]])
        with pytest.raises(SpaceMismatch):
            LMP(abc, ("a",), {"a": k})

    def test_tau(self, lumpable_lmp: LMP) -> None:
        assert lumpable_lmp.tau("a", "p", ["q", "r"]) == 1
        assert lumpable_lmp.tau("a", "r", ["p"]) == F(1, 2)

    def test_validate_lmp(self, abc: FinSpace) -> None:
        lmp = LMP.from_matrices(abc, {"a": [[F(1), F(1), F(0)]] + [[F(0)] * 3] * 2}, name="T")
        report = validate_lmp(lmp)
        assert report.subject == "T"
        assert str(report.violations[0]) == "T[a] row a: row sum 2 > 1"


class TestKernelMorphism:
    def test_product_legs(self, product_cospan) -> None:
        assert is_kernel_morphism(product_cospan.h1, product_cospan.left, product_cospan.apex)
        check_kernel_morphism(product_cospan.h2, product_cospan.right, product_cospan.apex)

    def test_not_surjective(self) -> None:
        x = FinSpace(("x",))
        s1 = FinSpace(("a",))
        s0 = FinSpace(("u", "v"))
        mu1 = Kernel.from_matrix(x, s1, [[F(1)]])
        mu0 = Kernel.from_matrix(x, s0, [[F(1), F(0)]])
        result = is_kernel_morphism(Morphism(s1, s0, {"a": "u"}), mu1, mu0)
        assert not result
        assert result.witness is not None
        assert result.witness.kind == "not-surjective"
        assert result.witness.describe() == "map misses codomain state 'v'"

    def test_mass_mismatch_witness(self, product_cospan) -> None:
        right = Kernel.from_matrix(
            product_cospan.index_space,
            product_cospan.right.target,
            [[F(1, 3), F(1, 3)]],
        )
        result = is_kernel_morphism(product_cospan.h2, right, product_cospan.apex)
        assert not result
        assert result.witness is not None
        assert result.witness.to_dict() == {
            "kind": "mass",
            "target": ["o"],
            "x": "x",
            "expected": "1",
            "actual": "2/3",
        }

    def test_check_raises_with_witness(self, product_cospan) -> None:
        right = Kernel.from_matrix(
            product_cospan.index_space,
            product_cospan.right.target,
            [[F(1, 3), F(1, 3)]],
        )
        with pytest.raises(MorphismError, match="second leg is not a kernel morphism") as exc:
            check_kernel_morphism(product_cospan.h2, right, product_cospan.apex, "second leg")
        assert exc.value.witness is not None

    def test_space_mismatch(self, product_cospan) -> None:
        with pytest.raises(SpaceMismatch):
            is_kernel_morphism(product_cospan.h1, product_cospan.right, product_cospan.apex)

    def test_agrees_with_bruteforce(self) -> None:
        rng = random.Random(7)
        for _ in range(40):
            cospan = random_kernel_cospan(rng, probability=rng.random() < 0.5)
            left = cospan.left
            if rng.random() < 0.5:
                rows = {x: tuple(reversed(left.row(x))) for x in left.source}
                left = Kernel(left.source, left.target, rows, left.kind)
            fast = is_kernel_morphism(cospan.h1, left, cospan.apex)
            brute = is_kernel_morphism_bruteforce(cospan.h1, left, cospan.apex)
            assert fast.ok == brute.ok


class TestZigzag:
    def test_quotient_map(self, lumpable_lmp: LMP, minimal_lmp: LMP) -> None:
        f = Morphism(lumpable_lmp.space, minimal_lmp.space, {"p": "m0", "q": "m0", "r": "m1"})
        assert is_zigzag(f, lumpable_lmp, minimal_lmp)

    def test_wrong_map(self, lumpable_lmp: LMP, minimal_lmp: LMP) -> None:
        f = Morphism(lumpable_lmp.space, minimal_lmp.space, {"p": "m0", "q": "m1", "r": "m1"})
        result = is_zigzag(f, lumpable_lmp, minimal_lmp)
        assert not result
        assert result.witness is not None and result.witness.label == "a"
        with pytest.raises(MorphismError, match="is not a zigzag"):
            check_zigzag(f, lumpable_lmp, minimal_lmp)

    def test_label_mismatch(self, lumpable_lmp: LMP) -> None:
        other = LMP.from_matrices(lumpable_lmp.space, {"b": lumpable_lmp.kernel("a").matrix()})
        with pytest.raises(LabelMismatch):
            is_zigzag(identity(lumpable_lmp.space), lumpable_lmp, other)

    def test_space_mismatch(self, lumpable_lmp: LMP, minimal_lmp: LMP) -> None:
        with pytest.raises(SpaceMismatch):
            is_zigzag(identity(minimal_lmp.space), lumpable_lmp, minimal_lmp)

    def test_composite_of_zigzags(self) -> None:
        rng = random.Random(31)
        for _ in range(100):
            labels = ("a", "b")[: rng.randint(1, 2)]
            base = random_lmp(rng, rng.randint(1, 5), labels=labels, name="B", denominator=4)
            unfolded, up = random_unfolding(rng, base, rng.randint(0, 3), denominator=4)
            quotient, down = random_quotient(rng, base, blocks=rng.randint(1, 3))
            assert is_zigzag(compose(up, down), unfolded, quotient)
            smaller, further = random_quotient(rng, quotient, blocks=rng.randint(1, 2))
            assert is_zigzag(compose(compose(up, down), further), unfolded, smaller)
