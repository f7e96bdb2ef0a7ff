"""
lmpsquare.semipullback.pullback - Set pullback of two maps and its complement.

S3 = {(s1, s2) : h1(s1) = h2(s2)} with the coordinate projections. The
complement of S3 in S1×S2 is covered by the rectangles
h1⁻¹(B0) × h2⁻¹(S0∖B0), B0 ⊆ S0; a measure carried by S3 gives each of
them mass zero.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from lmpsquare.exceptions import NotSurjective, SpaceMismatch
from lmpsquare.model.spaces import FinSpace, Morphism, StateId
from lmpsquare.utils import format_rational, rsum, subsets

StatePair = tuple[StateId, StateId]


_ESCAPES = str.maketrans({c: "\\" + c for c in "\\,()"})


def pair_state(s1: StateId, s2: StateId) -> StateId:
    """State id of the pair (s1, s2) in a pullback space.

    Backslash, comma and parentheses inside a component are escaped with a
    backslash, so distinct pairs always get distinct ids.
    """
    return f"({s1.translate(_ESCAPES)},{s2.translate(_ESCAPES)})"


class SetPullback(NamedTuple):
    space: FinSpace
    k1: Morphism
    k2: Morphism

    @property
    def pairs(self) -> list[StatePair]:
        return [(self.k1(p), self.k2(p)) for p in self.space]


def set_pullback(h1: Morphism, h2: Morphism) -> SetPullback:
    """Matching pairs in lexicographic (S1, S2) order, with both projections.

    Raises:
        SpaceMismatch: If the maps have different codomains
        NotSurjective: If either map misses part of the shared codomain
    """
    if h1.codomain != h2.codomain:
        raise SpaceMismatch("The two legs do not share a codomain")
    for name, h in (("first", h1), ("second", h2)):
        missed = h.missed()
        if missed:
            raise NotSurjective(f"The {name} leg misses {missed[0]!r}")
    pairs = [(s1, s2) for s1 in h1.domain for s2 in h2.domain if h1(s1) == h2(s2)]
    ids = [pair_state(s1, s2) for s1, s2 in pairs]
    name = f"{h1.domain.name}x{h2.domain.name}" if h1.domain.name and h2.domain.name else ""
    space = FinSpace(tuple(ids), name=name)
    k1 = Morphism(space, h1.domain, {p: s1 for p, (s1, _) in zip(ids, pairs)})
    k2 = Morphism(space, h2.domain, {p: s2 for p, (_, s2) in zip(ids, pairs)})
    return SetPullback(space, k1, k2)


def complement_rectangles(
    h1: Morphism, h2: Morphism, limit: int
) -> Iterator[tuple[tuple[StateId, ...], frozenset[StatePair]]]:
    """Rectangles h1⁻¹(B0) × h2⁻¹(S0∖B0) with their B0.

    Every B0 ⊆ S0 when |S0| ≤ limit, otherwise the singletons B0 = {s0},
    which already cover the complement of the pullback.
    """
    codomain = h1.codomain
    if len(codomain) <= limit:
        choices = list(subsets(codomain.states))
    else:
        choices = [(s0,) for s0 in codomain]
    for b0 in choices:
        rest = [s0 for s0 in codomain if s0 not in b0]
        left = h1.preimage(b0)
        right = h2.preimage(rest)
        yield b0, frozenset((s1, s2) for s1 in left for s2 in right)


@dataclass(frozen=True)
class ComplementCheck:
    """Outcome of the null-complement check for one row."""

    rectangles: int
    covers_complement: bool
    max_mass: Fraction

    @property
    def ok(self) -> bool:
        return self.covers_complement and self.max_mass == 0

    def to_dict(self) -> dict:
        return {
            "rectangles": self.rectangles,
            "covers_complement": self.covers_complement,
            "max_mass": format_rational(self.max_mass),
        }


def check_complement_null(
    h1: Morphism,
    h2: Morphism,
    pullback: SetPullback,
    row: Sequence[Fraction],
    limit: int,
) -> ComplementCheck:
    """Extend a row on S3 to S1×S2 by μ̂(B) := μ(B ∩ S3) and weigh every rectangle.

    Also checks that the rectangles exactly cover (S1×S2) ∖ S3.
    """
    mass = {pair: value for pair, value in zip(pullback.pairs, row)}
    inside = set(mass)
    covered: set[StatePair] = set()
    count = 0
    max_mass = Fraction(0)
    for _, rectangle in complement_rectangles(h1, h2, limit):
        count += 1
        covered |= rectangle
        weight = rsum(mass[p] for p in rectangle if p in inside)
        max_mass = max(max_mass, weight)
    product = {(s1, s2) for s1 in h1.domain for s2 in h2.domain}
    return ComplementCheck(count, covered == product - inside, max_mass)
