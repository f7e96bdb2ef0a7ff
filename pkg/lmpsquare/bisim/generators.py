"""
lmpsquare.bisim.generators - Random LMPs, zigzags and cospans with exact rationals.

Every generator takes a random.Random so that runs are reproducible.
"""

from __future__ import annotations

import random
from collections.abc import Sequence
from fractions import Fraction

from lmpsquare.bisim.partition import Partition, coarsest_stable_partition, quotient_by_partition
from lmpsquare.model.kernels import LMP, Kernel, KernelKind
from lmpsquare.model.spaces import FinSpace, Morphism, StateId
from lmpsquare.semipullback.cospans import KernelCospan
from lmpsquare.utils import ONE, ZERO

DEFAULT_DENOMINATOR = 12


def random_mass(rng: random.Random, denominator: int = DEFAULT_DENOMINATOR) -> Fraction:
    """Uniform on {0, 1/d, ..., 1}."""
    return Fraction(rng.randint(0, denominator), denominator)


def split_mass(
    rng: random.Random, total: Fraction, parts: int, denominator: int = DEFAULT_DENOMINATOR
) -> list[Fraction]:
    """Random nonnegative rationals summing exactly to total."""
    if parts == 0:
        return []
    weights = [rng.randint(0, denominator) for _ in range(parts)]
    if not any(weights):
        weights[rng.randrange(parts)] = 1
    scale = sum(weights)
    return [total * w / scale for w in weights]


def random_row(
    rng: random.Random,
    size: int,
    probability: bool = False,
    denominator: int = DEFAULT_DENOMINATOR,
) -> tuple[Fraction, ...]:
    total = ONE if probability else random_mass(rng, denominator)
    return tuple(split_mass(rng, total, size, denominator))


def numbered_space(size: int, prefix: str, name: str = "") -> FinSpace:
    return FinSpace(tuple(f"{prefix}{i}" for i in range(size)), name=name)


def random_surjection(rng: random.Random, domain: FinSpace, codomain: FinSpace) -> Morphism:
    """Random onto map; needs |domain| ≥ |codomain|."""
    if len(domain) < len(codomain):
        raise ValueError("A surjection needs at least as many domain states as codomain states")
    targets = list(codomain.states)
    targets += [rng.choice(codomain.states) for _ in range(len(domain) - len(codomain))]
    rng.shuffle(targets)
    return Morphism(domain, codomain, dict(zip(domain.states, targets)))


def random_lmp(
    rng: random.Random,
    size: int,
    labels: Sequence[str] = ("a",),
    name: str = "S",
    probability: bool = False,
    denominator: int = DEFAULT_DENOMINATOR,
) -> LMP:
    space = numbered_space(size, "s", name)
    kernels = {
        label: Kernel(
            space,
            space,
            {s: random_row(rng, size, probability, denominator) for s in space},
        )
        for label in labels
    }
    return LMP(space, tuple(labels), kernels, name=name)


def random_unfolding(
    rng: random.Random,
    base: LMP,
    extra: int,
    name: str = "T",
    denominator: int = DEFAULT_DENOMINATOR,
) -> tuple[LMP, Morphism]:
    """LMP with extra copies of base states and the zigzag sending copies home.

    Each copy's mass on a base state t is split at random over t's copies.
    """
    original = list(base.space.states)
    home: dict[StateId, StateId] = {}
    for s in original:
        home[f"{s}.0"] = s
    for j in range(extra):
        s = rng.choice(original)
        home[f"{s}.{j + 1}"] = s
    space = FinSpace(tuple(sorted(home, key=lambda c: (original.index(home[c]), c))), name=name)
    copies = {s: [c for c in space if home[c] == s] for s in original}
    kernels = {}
    for label in base.labels:
        tau = base.kernel(label)
        rows = {}
        for c in space:
            mass = dict.fromkeys(space.states, ZERO)
            for t, value in zip(original, tau.row(home[c])):
                parts = split_mass(rng, value, len(copies[t]), denominator)
                mass.update(zip(copies[t], parts))
            rows[c] = tuple(mass.values())
        kernels[label] = Kernel(space, space, rows)
    lmp = LMP(space, base.labels, kernels, name=name)
    return lmp, Morphism(space, base.space, home)


def random_quotient(rng: random.Random, lmp: LMP, blocks: int = 2) -> tuple[LMP, Morphism]:
    """Zigzag quotient by the coarsest stable refinement of a random partition."""
    colors = {s: rng.randrange(max(blocks, 1)) for s in lmp.space}
    initial = Partition.from_labels(lmp.space, colors)
    return quotient_by_partition(lmp, coarsest_stable_partition(lmp, initial))


def _fiber_kernel(
    rng: random.Random,
    apex: Kernel,
    h: Morphism,
    denominator: int,
) -> Kernel:
    """Kernel on h.domain that h carries onto apex: each fiber splits its apex mass."""
    fibers = h.fibers()
    rows = {}
    for x in apex.source:
        mass = dict.fromkeys(h.domain.states, ZERO)
        for t, value in zip(apex.target, apex.row(x)):
            for s, part in zip(fibers[t], split_mass(rng, value, len(fibers[t]), denominator)):
                mass[s] = part
        rows[x] = tuple(mass.values())
    return Kernel(apex.source, h.domain, rows, apex.kind)


def random_kernel_cospan(
    rng: random.Random,
    index_size: int = 2,
    apex_size: int = 2,
    left_size: int = 3,
    right_size: int = 3,
    probability: bool = True,
    denominator: int = DEFAULT_DENOMINATOR,
) -> KernelCospan:
    """Random cospan μ1 → μ0 ← μ2 whose legs are kernel morphisms by construction."""
    index = numbered_space(index_size, "x", "X")
    s0 = numbered_space(apex_size, "u", "S0")
    s1 = numbered_space(max(left_size, apex_size), "a", "S1")
    s2 = numbered_space(max(right_size, apex_size), "b", "S2")
    kind = KernelKind.PROBABILITY if probability else KernelKind.SUBPROBABILITY
    apex = Kernel(
        index, s0, {x: random_row(rng, apex_size, probability, denominator) for x in index}, kind
    )
    h1 = random_surjection(rng, s1, s0)
    h2 = random_surjection(rng, s2, s0)
    left = _fiber_kernel(rng, apex, h1, denominator)
    right = _fiber_kernel(rng, apex, h2, denominator)
    return KernelCospan(apex=apex, left=left, right=right, h1=h1, h2=h2)
