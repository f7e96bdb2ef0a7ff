"""
lmpsquare.counterexample.obstruction - A cospan of LMPs with no commutative square.

On the countable-cocountable algebra, μ1 and μ2 extend μ0 to Σ_V with
μ1(V) = r1 ≠ r2 = μ2(V). The LMPs S_i jump from every state to a fixed s0
and from s0 follow μ_i; the identities S_i → S0 are zigzags, but any state t
of a candidate vertex sent to s0 by g1 = g2 would have to give g⁻¹(V) both
mass r1 and mass r2.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
from fractions import Fraction

from lmpsquare.counterexample.coco import (
    CocoSet,
    ExampleMeasure,
    Mode,
    Point,
    SigmaVSet,
    check_parameter,
    mu0,
)
from lmpsquare.exceptions import NotInAlgebra, ParamError
from lmpsquare.logging import logger
from lmpsquare.utils import ONE, ZERO, format_rational, subsets


def _component(pool: Sequence[str], max_witness: int) -> list[CocoSet]:
    witnesses = [w for w in subsets(tuple(pool)) if len(w) <= max_witness]
    return [CocoSet(mode, frozenset(w)) for mode in Mode for w in witnesses]


def symbolic_family(
    max_witness: int = 3,
    inside: Sequence[str] | None = None,
    outside: Sequence[str] | None = None,
) -> list[SigmaVSet]:
    """Every Σ_V set whose traces have witnesses of size ≤ max_witness from the pools.

    The pools default to max_witness points on each side of V.
    """
    inside = inside if inside is not None else [f"v{i + 1}" for i in range(max_witness)]
    outside = outside if outside is not None else [f"w{i + 1}" for i in range(max_witness)]
    return [
        SigmaVSet(a, b)
        for a in _component(inside, max_witness)
        for b in _component(outside, max_witness)
    ]


@dataclass(frozen=True)
class AdditivityReport:
    r: Fraction
    sets: int
    pairs: int
    failures: tuple[str, ...] = ()

    @property
    def valid(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "r": format_rational(self.r),
            "sets": self.sets,
            "pairs": self.pairs,
            "valid": self.valid,
            "failures": list(self.failures),
        }


def verify_finite_additivity(
    r: Fraction,
    sample_pairs: Sequence[tuple[SigmaVSet, SigmaVSet]] | None = None,
) -> AdditivityReport:
    """Check that μ_r is a finitely additive, monotone probability extending μ0.

    Without sample pairs, every disjoint pair of symbolic_family() is checked.

    Raises:
        ParamError: If r is outside (0, 1) or a sample pair is not disjoint
    """
    mu = ExampleMeasure(r)
    if sample_pairs is None:
        family = symbolic_family()
        pairs = [
            (a, b) for i, a in enumerate(family) for b in family[i:] if a.isdisjoint(b)
        ]
    else:
        pairs = list(sample_pairs)
        for a, b in pairs:
            if not a.isdisjoint(b):
                raise ParamError(f"Sample pair is not disjoint: {a} and {b}")
        family = list(dict.fromkeys(q for pair in pairs for q in pair))

    failures: list[str] = []
    if mu(SigmaVSet.full()) != ONE or mu(SigmaVSet.empty()) != ZERO:
        failures.append("not normalized")
    for a, b in pairs:
        if mu(a | b) != mu(a) + mu(b):
            failures.append(
                f"μ({a} ∪ {b}) = {format_rational(mu(a | b))}, "
                f"sum is {format_rational(mu(a) + mu(b))}"
            )
    for q in family:
        if q.in_sigma and mu(q) != mu0(q.as_coco()):
            failures.append(f"μ({q}) differs from μ0")
    for a in family:
        for b in family:
            if a.issubset(b) and mu(a) > mu(b):
                failures.append(f"not monotone on {a} ⊆ {b}")
    logger.debug("Checked %d sets and %d disjoint pairs for r = %s", len(family), len(pairs), r)
    return AdditivityReport(mu.r, len(family), len(pairs), tuple(failures))


@dataclass(frozen=True)
class ExampleLMP:
    """τ(s, A) = 1 if s ≠ s0 and s0 ∈ A; μ(A) if s = s0; 0 otherwise.

    Without a measure the LMP lives on Σ and uses μ0.
    """

    name: str
    s0: Point
    measure: ExampleMeasure | None = None

    def tau(self, s: Point, a: SigmaVSet) -> Fraction:
        if self.measure is None and not a.in_sigma:
            raise NotInAlgebra(f"{self.name} is only defined on countable or cocountable sets")
        if s == self.s0:
            return self.measure(a) if self.measure is not None else mu0(a.as_coco())
        return ONE if a.contains(self.s0) else ZERO


def identity_zigzag_failures(
    source: ExampleLMP,
    target: ExampleLMP,
    family: Sequence[SigmaVSet],
    states: Sequence[Point],
) -> list[str]:
    """States and Σ-sets of the family where τ_source(s, B) ≠ τ_target(s, B)."""
    return [
        f"{source.name} → {target.name} at {s.name}, {b}"
        for b in family
        if b.in_sigma
        for s in states
        if source.tau(s, b) != target.tau(s, b)
    ]


@dataclass(frozen=True)
class DerivationStep:
    claim: str
    checked: bool = True
    detail: str = ""

    def to_dict(self) -> dict:
        return {"claim": self.claim, "checked": self.checked, "detail": self.detail}


@dataclass(frozen=True)
class ObstructionReport:
    r1: Fraction
    r2: Fraction
    steps: tuple[DerivationStep, ...] = field(default=())
    contradiction: str = ""

    @property
    def holds(self) -> bool:
        return all(step.checked for step in self.steps)

    def to_dict(self) -> dict:
        return {
            "r1": format_rational(self.r1),
            "r2": format_rational(self.r2),
            "steps": [step.to_dict() for step in self.steps],
            "contradiction": self.contradiction,
            "holds": self.holds,
        }


def demonstrate_obstruction(
    r1: Fraction, r2: Fraction, max_witness: int = 2
) -> ObstructionReport:
    """Derive the value clash that blocks a square over the identity cospan S1 → S0 ← S2.

    Raises:
        ParamError: If r1 = r2 or either lies outside (0, 1)
    """
    r1, r2 = check_parameter(r1), check_parameter(r2)
    if r1 == r2:
        raise ParamError(f"Needs different parameters, got r1 = r2 = {format_rational(r1)}")
    s0 = Point("s0", in_v=True)
    states = [s0, Point("v1", in_v=True), Point("w1", in_v=False)]
    apex = ExampleLMP("S0", s0)
    mu1, mu2 = ExampleMeasure(r1), ExampleMeasure(r2)
    first = ExampleLMP("S1", s0, mu1)
    second = ExampleLMP("S2", s0, mu2)
    family = symbolic_family(max_witness, inside=["s0", "v1"], outside=["w1"])
    sigma_sets = [q for q in family if q.in_sigma]
    v = SigmaVSet.V()
    fr1, fr2 = format_rational(r1), format_rational(r2)

    steps = []
    extends = all(mu1(q) == mu0(q.as_coco()) == mu2(q) for q in sigma_sets)
    steps.append(
        DerivationStep("μ1 and μ2 agree with μ0 on Σ", extends, f"{len(sigma_sets)} sets of Σ")
    )
    steps.append(DerivationStep("V lies in Σ_V but not in Σ", not v.in_sigma, str(v)))
    for source in (first, second):
        failures = identity_zigzag_failures(source, apex, family, states)
        steps.append(
            DerivationStep(
                f"Id: {source.name} → S0 is a zigzag",
                not failures,
                failures[0] if failures else f"{len(sigma_sets)} sets × {len(states)} states",
            )
        )
    steps.append(
        DerivationStep(
            "A square over the identities has Id∘g1 = Id∘g2, so g1 = g2 =: g",
            True,
            "identity maps are injective",
        )
    )
    steps.append(
        DerivationStep(
            "g is onto S1, so some vertex state t has g(t) = s0", True, "zigzags are surjective"
        )
    )
    tau1 = first.tau(s0, v)
    tau2 = second.tau(s0, v)
    steps.append(
        DerivationStep(
            "τ(t, g1⁻¹(V)) = τ1(s0, V) = μ1(V)", tau1 == r1, f"= {format_rational(tau1)}"
        )
    )
    steps.append(
        DerivationStep(
            "τ(t, g2⁻¹(V)) = τ2(s0, V) = μ2(V)", tau2 == r2, f"= {format_rational(tau2)}"
        )
    )
    steps.append(
        DerivationStep(
            "g1⁻¹(V) = g2⁻¹(V), so both values are τ(t, g⁻¹(V))",
            tau1 != tau2,
            f"{fr1} = {fr2} is false",
        )
    )
    logger.debug("Obstruction for r1 = %s, r2 = %s: %d steps", fr1, fr2, len(steps))
    return ObstructionReport(r1, r2, tuple(steps), contradiction=f"{fr1} = {fr2}")
