"""
lmpsquare.semipullback.minorant - Image minorants and the disjoint-sum bound they give.

For a measure-preserving h and A ⊆ S, D = h(A) satisfies μ0(D) ≥ μ(A). Taking
A1 = k1⁻¹(B1) and the largest A2 = k2⁻¹(B2) disjoint from it, the images D1,
D2 are disjoint, so ν1(A1) + ν2(A2) ≤ μ0(D1) + μ0(D2) ≤ 1.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from fractions import Fraction

from lmpsquare.exceptions import NotMeasurePreserving, SpaceMismatch
from lmpsquare.extension.strassen import StrassenCheck, ViolatingPair
from lmpsquare.model.spaces import FinSpace, Morphism, StateId
from lmpsquare.utils import ONE, format_rational, rsum, subsets


def _mass(space: FinSpace, row: Sequence[Fraction], subset: Iterable[StateId]) -> Fraction:
    return rsum(row[space.index(s)] for s in set(subset))


def is_measure_preserving(
    h: Morphism, mu: Sequence[Fraction], mu0: Sequence[Fraction]
) -> bool:
    """μ(h⁻¹{t}) = μ0(t) for every codomain state t."""
    if len(mu) != len(h.domain) or len(mu0) != len(h.codomain):
        raise SpaceMismatch("Measure rows do not match the map's spaces")
    return all(
        _mass(h.domain, mu, fiber) == mu0[h.codomain.index(t)] for t, fiber in h.fibers().items()
    )


def image_minorant(
    h: Morphism,
    mu: Sequence[Fraction],
    mu0: Sequence[Fraction],
    subset: Iterable[StateId],
) -> tuple[StateId, ...]:
    """D = h(A), with μ0(D) ≥ μ(A) asserted.

    Raises:
        NotMeasurePreserving: If h does not carry μ onto μ0
    """
    if not is_measure_preserving(h, mu, mu0):
        raise NotMeasurePreserving("Map does not carry the first row onto the second")
    subset = tuple(subset)
    image = h.image(subset)
    if _mass(h.codomain, mu0, image) < _mass(h.domain, mu, subset):
        raise NotMeasurePreserving(f"Image of {set(subset)} has less mass than the set")
    return image


def strassen_via_minorants(
    h1: Morphism,
    h2: Morphism,
    mu1: Sequence[Fraction],
    mu2: Sequence[Fraction],
    mu0: Sequence[Fraction],
) -> StrassenCheck:
    """Disjoint-sum bound for the fiber algebras, derived through image minorants.

    Enumerates every B1 ⊆ S1; a violation is reported in (S1, S2) coordinates.
    """
    total0 = rsum(mu0)
    if total0 != ONE:
        raise NotMeasurePreserving(f"Apex row has total mass {format_rational(total0)}, expected 1")
    codomain = h1.codomain
    for b1 in subsets(h1.domain.states):
        d1 = image_minorant(h1, mu1, mu0, b1)
        b2 = h2.preimage(s0 for s0 in codomain if s0 not in d1)
        d2 = image_minorant(h2, mu2, mu0, b2)
        if not set(d1).isdisjoint(d2):
            raise NotMeasurePreserving("Images of disjoint fiber sets overlap")
        total = _mass(h1.domain, mu1, b1) + _mass(h2.domain, mu2, b2)
        bound = _mass(codomain, mu0, d1) + _mass(codomain, mu0, d2)
        if total > bound or bound > ONE:
            return StrassenCheck(
                False, ViolatingPair(frozenset(b1), frozenset(b2), total), "image-minorant"
            )
    return StrassenCheck(True, method="image-minorant")
