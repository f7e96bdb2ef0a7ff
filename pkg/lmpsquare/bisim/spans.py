"""
lmpsquare.bisim.spans - From behavioral equivalence to bisimilarity.

Two finite LMPs are behaviorally equivalent when their largest zigzag
quotients are isomorphic; the quotient maps then form a cospan, and its
semipullback is a span of zigzags witnessing bisimilarity.
"""

from __future__ import annotations

from lmpsquare.bisim.partition import coarsest_stable_partition, largest_zigzag_quotient
from lmpsquare.config import SquareConfig
from lmpsquare.exceptions import LabelMismatch
from lmpsquare.logging import logger
from lmpsquare.model.kernels import LMP, Kernel
from lmpsquare.model.morphisms import check_zigzag, is_zigzag
from lmpsquare.model.spaces import FinSpace, Morphism, StateId, compose
from lmpsquare.semipullback.cospans import LMPCospan
from lmpsquare.semipullback.lmp import semipullback_lmp
from lmpsquare.semipullback.result import SemipullbackResult
from lmpsquare.utils import ZERO


def _tag(side: int, s: StateId) -> StateId:
    return f"{side}:{s}"


def disjoint_union(first: LMP, second: LMP) -> LMP:
    """S1 ⊕ S2 with states tagged "1:" and "2:"; labels of S1 in its order."""
    if set(first.labels) != set(second.labels):
        raise LabelMismatch("Disjoint union needs a shared label set")
    sides = ((1, first), (2, second))
    space = FinSpace(tuple(_tag(i, s) for i, lmp in sides for s in lmp.space))
    kernels = {}
    for label in first.labels:
        rows = {}
        for i, lmp in sides:
            tau = lmp.kernel(label)
            for s in lmp.space:
                row = dict.fromkeys(space.states, ZERO)
                for t, value in zip(lmp.space, tau.row(s)):
                    row[_tag(i, t)] = value
                rows[_tag(i, s)] = tuple(row.values())
        kernels[label] = Kernel(space, space, rows)
    return LMP(space, first.labels, kernels)


def are_isomorphic(first: LMP, second: LMP) -> Morphism | None:
    """An LMP isomorphism first → second, or None.

    Refines the disjoint union jointly; for minimal LMPs (largest quotients)
    an isomorphism exists exactly when every block holds one state of each.
    """
    if set(first.labels) != set(second.labels) or len(first.space) != len(second.space):
        return None
    union = disjoint_union(first, second)
    mapping: dict[StateId, StateId] = {}
    for block in coarsest_stable_partition(union).blocks:
        left = [s.split(":", 1)[1] for s in block if s.startswith("1:")]
        right = [s.split(":", 1)[1] for s in block if s.startswith("2:")]
        if len(left) != len(right):
            return None
        mapping.update(zip(left, right))
    iso = Morphism(first.space, second.space, mapping)
    if len(set(mapping.values())) != len(second.space) or not is_zigzag(iso, first, second):
        return None
    return iso


def _inverse(iso: Morphism) -> Morphism:
    return Morphism(iso.codomain, iso.domain, {t: s for s, t in iso.mapping.items()})


def cospan_from_quotients(first: LMP, second: LMP) -> LMPCospan | None:
    """Cospan S1 → U ← S2 through the largest quotients, or None if they differ.

    Raises:
        LabelMismatch: If the label sets differ
    """
    if set(first.labels) != set(second.labels):
        raise LabelMismatch(
            f"Label sets differ: {sorted(first.labels)} vs {sorted(second.labels)}"
        )
    u1, q1 = largest_zigzag_quotient(first)
    u2, q2 = largest_zigzag_quotient(second)
    iso = are_isomorphic(u1, u2)
    if iso is None:
        logger.info(
            "Quotients are not isomorphic (%d and %d states)", len(u1.space), len(u2.space)
        )
        return None
    return LMPCospan(apex=u1, left=first, right=second, h1=q1, h2=compose(q2, _inverse(iso)))


def span_from_cospan(
    cospan: LMPCospan, config: SquareConfig | None = None
) -> SemipullbackResult:
    """Span S1 ← S3 → S2 of zigzags from a cospan of zigzags."""
    result = semipullback_lmp(cospan, config)
    assert isinstance(result.vertex, LMP)
    check_zigzag(result.k1, result.vertex, cospan.left, "first span leg")
    check_zigzag(result.k2, result.vertex, cospan.right, "second span leg")
    return result
