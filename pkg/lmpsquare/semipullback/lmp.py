"""
lmpsquare.semipullback.lmp - Semipullback of a cospan of LMPs.

The set pullback S3 is shared by all labels. For each label a the rows
τ1a(k1(p)), τ2a(k2(p)) and τ0a(h1(k1(p))), indexed by p ∈ S3, form a cospan
of subprobability kernels whose semipullback is τ3a.
"""

from __future__ import annotations

import dataclasses

from lmpsquare.config import SquareConfig
from lmpsquare.exceptions import PipelineInfeasible
from lmpsquare.logging import logger
from lmpsquare.model.kernels import LMP, Kernel
from lmpsquare.model.morphisms import check_zigzag
from lmpsquare.semipullback.cospans import KernelCospan, LMPCospan
from lmpsquare.semipullback.kernels import semipullback_subprob_kernels
from lmpsquare.semipullback.pullback import SetPullback, set_pullback
from lmpsquare.semipullback.result import ExtensionCertificate, SemipullbackResult


def label_cospan(cospan: LMPCospan, pullback: SetPullback, label: str) -> KernelCospan:
    """S3-indexed kernel cospan for one label."""
    space = pullback.space
    tau0, tau1, tau2 = (lmp.kernel(label) for lmp in (cospan.apex, cospan.left, cospan.right))
    left = {p: tau1.row(pullback.k1(p)) for p in space}
    right = {p: tau2.row(pullback.k2(p)) for p in space}
    apex = {p: tau0.row(cospan.h1(pullback.k1(p))) for p in space}
    return KernelCospan(
        apex=Kernel(space, cospan.apex.space, apex),
        left=Kernel(space, cospan.left.space, left),
        right=Kernel(space, cospan.right.space, right),
        h1=cospan.h1,
        h2=cospan.h2,
    )


def semipullback_lmp(cospan: LMPCospan, config: SquareConfig | None = None) -> SemipullbackResult:
    """LMP S3 on the set pullback with zigzag projections onto both legs.

    Raises:
        LabelMismatch: If the three LMPs do not share a label set
        MorphismError: If a leg is not a zigzag
        PipelineInfeasible: If a construction step fails for some label
    """
    config = config or SquareConfig()
    cospan.validate()
    pullback = set_pullback(cospan.h1, cospan.h2)
    space = pullback.space

    kernels: dict[str, Kernel] = {}
    certificates: list[ExtensionCertificate] = []
    for label in cospan.labels:
        try:
            result = semipullback_subprob_kernels(label_cospan(cospan, pullback, label), config)
        except PipelineInfeasible as e:
            raise PipelineInfeasible(e.detail, x=e.x, label=label) from e
        assert isinstance(result.vertex, Kernel)
        kernels[label] = Kernel(space, space, result.vertex.rows)
        certificates.extend(dataclasses.replace(c, label=label) for c in result.certificates)
        logger.debug("Label %s: built kernel on %d states", label, len(space))

    left_name, right_name = cospan.left.name, cospan.right.name
    name = f"{left_name}x{right_name}" if left_name and right_name else ""
    vertex = LMP(space, cospan.labels, kernels, name=name)
    if config.verify_projections:
        check_zigzag(pullback.k1, vertex, cospan.left, "first projection")
        check_zigzag(pullback.k2, vertex, cospan.right, "second projection")
    logger.info("Semipullback LMP with %d states, %d labels", len(space), len(cospan.labels))
    return SemipullbackResult(
        cospan=cospan,
        vertex=vertex,
        k1=pullback.k1,
        k2=pullback.k2,
        pullback_states=tuple(pullback.pairs),
        certificates=tuple(certificates),
    )
