"""
lmpsquare.semipullback.kernels - Semipullback of a cospan of kernels.

For each index state x the pipeline pulls μ1ˣ and μ2ˣ back to the fiber
algebras 𝔄1, 𝔄2 on the set pullback S3, finds a common extension ν, extends
Ψ(f) = ∫f dν from 𝖫(𝔄1) + 𝖫(𝔄2) to every indicator on S3, and reads off
the row μ3ˣ. Subprobability cospans go through the one-point completion.
"""

from __future__ import annotations

from fractions import Fraction

from lmpsquare.config import SquareConfig
from lmpsquare.exceptions import Infeasible, NotNormalized, PipelineInfeasible
from lmpsquare.extension.hahn_banach import hahn_banach_extend
from lmpsquare.extension.sigma import promote_to_sigma_additive
from lmpsquare.extension.strassen import common_extension, strassen_condition
from lmpsquare.logging import logger
from lmpsquare.measure.algebra import SetAlgebra, join, preimage_algebra
from lmpsquare.measure.finadd import FinAddMeasure, integral
from lmpsquare.measure.functions import PositiveFunctional, SimpleFunction
from lmpsquare.model.kernels import Kernel, KernelKind, Row, validate_kernel
from lmpsquare.model.morphisms import check_kernel_morphism
from lmpsquare.model.spaces import Morphism, StateId
from lmpsquare.semipullback.completion import one_point_completion
from lmpsquare.semipullback.cospans import KernelCospan
from lmpsquare.semipullback.minorant import strassen_via_minorants
from lmpsquare.semipullback.pullback import SetPullback, check_complement_null, set_pullback
from lmpsquare.semipullback.result import ExtensionCertificate, SemipullbackResult


def _pulled_back(k: Morphism, row: Row) -> FinAddMeasure:
    """ν(k⁻¹{s}) := μ(s) on the preimage algebra of the singletons."""
    algebra = preimage_algebra(k, SetAlgebra.powerset(k.codomain))
    masses = [row[k.codomain.index(k(atom[0]))] for atom in algebra.atoms]
    return FinAddMeasure(algebra, tuple(masses), probability=True)


def _require_probability(cospan: KernelCospan) -> None:
    for name, mu in (("apex", cospan.apex), ("first", cospan.left), ("second", cospan.right)):
        report = validate_kernel(mu.with_kind(KernelKind.PROBABILITY), f"{name} kernel")
        if not report.valid:
            raise NotNormalized(f"Expected probability kernels: {report.violations[0]}")


def _extend_row(
    cospan: KernelCospan,
    pullback: SetPullback,
    x: StateId,
    config: SquareConfig,
) -> tuple[Row, ExtensionCertificate]:
    h1, h2 = cospan.h1, cospan.h2
    row0, row1, row2 = cospan.apex.row(x), cospan.left.row(x), cospan.right.row(x)
    space = pullback.space

    nu1 = _pulled_back(pullback.k1, row1)
    nu2 = _pulled_back(pullback.k2, row2)
    ambient = join(space, [nu1.algebra, nu2.algebra])

    minorant = None
    if len(h1.domain) <= config.enumeration_limit:
        minorant = strassen_via_minorants(h1, h2, row1, row2, row0)
        if not minorant:
            raise PipelineInfeasible("Image-minorant bound fails", x=x)
    strassen = strassen_condition(nu1, nu2, ambient, config)
    if not strassen:
        raise PipelineInfeasible(f"Disjoint-sum bound fails: {strassen.violation}", x=x)

    try:
        common = common_extension(nu1, nu2, ambient)
    except Infeasible as e:
        raise PipelineInfeasible(str(e), x=x) from e

    w_basis = [SimpleFunction.indicator(space, atom) for atom in nu1.algebra.atoms]
    w_basis += [SimpleFunction.indicator(space, atom) for atom in nu2.algebra.atoms]
    psi = PositiveFunctional(space, tuple(w_basis), tuple(integral(common, f) for f in w_basis))
    atoms = [SimpleFunction.indicator(space, atom) for atom in ambient.atoms]
    phi = hahn_banach_extend(psi, w_basis + atoms, config)

    masses = tuple(phi(f) for f in atoms)
    if sum(masses, Fraction(0)) != 1:
        raise PipelineInfeasible("Extended functional does not have total mass 1", x=x)
    nu3 = FinAddMeasure(ambient, masses, probability=True)
    row = promote_to_sigma_additive(nu3)

    complement = None
    if config.verify_complement:
        complement = check_complement_null(h1, h2, pullback, row, config.enumeration_limit)
        if not complement.ok:
            raise PipelineInfeasible("Complement of the pullback carries mass", x=x)

    logger.debug(
        "Row %s: %d ambient atoms, functional of dimension %d", x, len(ambient), phi.dimension
    )
    certificate = ExtensionCertificate(
        x=x,
        nu1=nu1,
        nu2=nu2,
        common=common,
        functional=phi,
        nu3=nu3,
        strassen=strassen,
        minorant=minorant,
        complement=complement,
    )
    return row, certificate


def semipullback_prob_kernels(
    cospan: KernelCospan, config: SquareConfig | None = None
) -> SemipullbackResult:
    """Kernel μ3 on the set pullback S3 whose projections are kernel morphisms.

    Raises:
        SpaceMismatch: If the kernels are not indexed by the same space
        MorphismError: If a leg is not a kernel morphism
        NotNormalized: If a kernel is not a probability kernel
        PipelineInfeasible: If a construction step fails, which valid input never does
    """
    config = config or SquareConfig()
    cospan.validate()
    _require_probability(cospan)
    pullback = set_pullback(cospan.h1, cospan.h2)

    rows: dict[StateId, Row] = {}
    certificates = []
    for x in cospan.index_space:
        rows[x], certificate = _extend_row(cospan, pullback, x, config)
        certificates.append(certificate)

    vertex = Kernel(cospan.index_space, pullback.space, rows, KernelKind.PROBABILITY)
    if config.verify_projections:
        check_kernel_morphism(pullback.k1, vertex, cospan.left, "first projection")
        check_kernel_morphism(pullback.k2, vertex, cospan.right, "second projection")
    logger.info(
        "Semipullback over %d index states on %d pullback states",
        len(cospan.index_space),
        len(pullback.space),
    )
    return SemipullbackResult(
        cospan=cospan,
        vertex=vertex,
        k1=pullback.k1,
        k2=pullback.k2,
        pullback_states=tuple(pullback.pairs),
        certificates=tuple(certificates),
    )


def semipullback_subprob_kernels(
    cospan: KernelCospan, config: SquareConfig | None = None
) -> SemipullbackResult:
    """Semipullback of subprobability kernels via the one-point completion.

    The completed problem is solved as a probability semipullback; its vertex
    is then restricted to the original pairs, dropping the dead pair.
    """
    config = config or SquareConfig()
    cospan.validate()
    pullback = set_pullback(cospan.h1, cospan.h2)

    left, h1 = one_point_completion(cospan.left, cospan.h1, config)
    right, h2 = one_point_completion(cospan.right, cospan.h2, config)
    apex, _ = one_point_completion(cospan.apex, None, config)
    assert h1 is not None and h2 is not None
    completed = semipullback_prob_kernels(KernelCospan(apex, left, right, h1, h2), config)

    assert isinstance(completed.vertex, Kernel)
    keep = [completed.vertex.target.index(p) for p in pullback.space]
    rows = {x: tuple(completed.vertex.row(x)[i] for i in keep) for x in cospan.index_space}
    vertex = Kernel(cospan.index_space, pullback.space, rows, KernelKind.SUBPROBABILITY)
    if config.verify_projections:
        check_kernel_morphism(pullback.k1, vertex, cospan.left, "first projection")
        check_kernel_morphism(pullback.k2, vertex, cospan.right, "second projection")
    return SemipullbackResult(
        cospan=cospan,
        vertex=vertex,
        k1=pullback.k1,
        k2=pullback.k2,
        pullback_states=tuple(pullback.pairs),
        certificates=completed.certificates,
    )
