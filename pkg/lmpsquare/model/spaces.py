"""
lmpsquare.model.spaces - Finite measurable spaces and maps between them.

A FinSpace is an ordered list of named states; its σ-algebra is always the
full powerset, so every total map between spaces is measurable.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass, field
from types import MappingProxyType

from lmpsquare.exceptions import ModelError, SpaceMismatch

StateId = str


@dataclass(frozen=True)
class FinSpace:
    """Finite measurable space (S, powerset(S)) with a fixed state order.

    Equality compares the ordered states only; the name is a label used for
    serialization and for deriving reserved ids.
    """

    states: tuple[StateId, ...]
    name: str = field(default="", compare=False)
    _index: Mapping[StateId, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        states = tuple(self.states)
        object.__setattr__(self, "states", states)
        if not states:
            raise ModelError(f"Space {self.name!r} has no states")
        for s in states:
            if not isinstance(s, str) or not s:
                raise ModelError(f"Space {self.name!r}: state ids must be nonempty strings")
        index = {s: i for i, s in enumerate(states)}
        if len(index) != len(states):
            duplicates = sorted({s for s in states if states.count(s) > 1})
            raise ModelError(f"Space {self.name!r} has duplicate states: {duplicates}")
        object.__setattr__(self, "_index", MappingProxyType(index))

    def __len__(self) -> int:
        return len(self.states)

    def __iter__(self) -> Iterator[StateId]:
        return iter(self.states)

    def __contains__(self, state: object) -> bool:
        return state in self._index

    def index(self, state: StateId) -> int:
        try:
            return self._index[state]
        except KeyError:
            raise ModelError(f"State {state!r} is not in space {self.name!r}") from None

    def ordered(self, subset: Iterable[StateId]) -> tuple[StateId, ...]:
        """Members of subset in space order; rejects foreign states."""
        members = set(subset)
        for s in members:
            self.index(s)
        return tuple(s for s in self.states if s in members)

    def renamed(self, name: str) -> FinSpace:
        return FinSpace(self.states, name=name)


@dataclass(frozen=True)
class Morphism:
    """Total function between the states of two finite spaces."""

    domain: FinSpace
    codomain: FinSpace
    mapping: Mapping[StateId, StateId]

    def __post_init__(self) -> None:
        mapping = dict(self.mapping)
        missing = [s for s in self.domain if s not in mapping]
        if missing:
            raise ModelError(f"Map is not total: no image for {missing}")
        extra = [s for s in mapping if s not in self.domain]
        if extra:
            raise ModelError(f"Map assigns images to states outside its domain: {extra}")
        for s, t in mapping.items():
            if t not in self.codomain:
                raise ModelError(f"Image {t!r} of {s!r} is not in the codomain")
        ordered = {s: mapping[s] for s in self.domain}
        object.__setattr__(self, "mapping", MappingProxyType(ordered))

    def __call__(self, state: StateId) -> StateId:
        return self.mapping[state]

    def image(self, subset: Iterable[StateId]) -> tuple[StateId, ...]:
        return self.codomain.ordered(self.mapping[s] for s in subset)

    def preimage(self, subset: Iterable[StateId]) -> tuple[StateId, ...]:
        targets = set(subset)
        return tuple(s for s in self.domain if self.mapping[s] in targets)

    def fibers(self) -> dict[StateId, tuple[StateId, ...]]:
        """Preimage of every codomain state, in codomain order (possibly empty)."""
        fibers: dict[StateId, list[StateId]] = {t: [] for t in self.codomain}
        for s in self.domain:
            fibers[self.mapping[s]].append(s)
        return {t: tuple(members) for t, members in fibers.items()}

    def missed(self) -> tuple[StateId, ...]:
        """Codomain states with empty preimage."""
        hit = set(self.mapping.values())
        return tuple(t for t in self.codomain if t not in hit)

    def is_surjective(self) -> bool:
        return not self.missed()

    def same_map(self, other: Morphism) -> bool:
        """Pointwise equality of two maps with equal domains and codomains."""
        return (
            self.domain == other.domain
            and self.codomain == other.codomain
            and all(self(s) == other(s) for s in self.domain)
        )


def identity(space: FinSpace) -> Morphism:
    return Morphism(space, space, {s: s for s in space})


def compose(f: Morphism, g: Morphism) -> Morphism:
    """The composite g ∘ f (apply f first)."""
    if f.codomain != g.domain:
        raise SpaceMismatch("Cannot compose: codomain of the first map is not the second's domain")
    return Morphism(f.domain, g.codomain, {s: g(f(s)) for s in f.domain})
