"""
lmpsquare.semipullback.completion - One-point completion of subprobability kernels.

Adds a dead state to the target that absorbs each row's deficit 1 − μˣ(S),
turning a subprobability kernel into a probability kernel. A map into the
completed space sends the dead state to the codomain's dead state.
"""

from __future__ import annotations

from lmpsquare.config import SquareConfig
from lmpsquare.exceptions import ModelError, ReservedIdCollision, SpaceMismatch
from lmpsquare.model.kernels import Kernel, KernelKind, validate_kernel
from lmpsquare.model.spaces import FinSpace, Morphism, StateId
from lmpsquare.utils import ONE


def dead_state_id(space: FinSpace, config: SquareConfig | None = None) -> StateId:
    """Reserved id of the dead state added to space."""
    prefix = (config or SquareConfig()).dead_state_prefix
    return f"{prefix}:{space.name}" if space.name else prefix


def complete_space(space: FinSpace, config: SquareConfig | None = None) -> FinSpace:
    """S ⊕ {dead}.

    Raises:
        ReservedIdCollision: If the dead-state id already names a state
    """
    dead = dead_state_id(space, config)
    if dead in space:
        raise ReservedIdCollision(f"Space {space.name!r} already has a state named {dead!r}")
    return FinSpace(space.states + (dead,), name=space.name)


def one_point_completion(
    mu: Kernel,
    h: Morphism | None = None,
    config: SquareConfig | None = None,
) -> tuple[Kernel, Morphism | None]:
    """Complete μ to a probability kernel, and h to the completed spaces.

    Raises:
        ModelError: If μ is not a subprobability kernel
        SpaceMismatch: If h does not start at μ's target
        ReservedIdCollision: If a dead-state id is already taken
    """
    report = validate_kernel(mu.with_kind(KernelKind.SUBPROBABILITY))
    if not report.valid:
        raise ModelError(f"Cannot complete an invalid kernel: {report.violations[0]}")
    target = complete_space(mu.target, config)
    rows = {x: mu.row(x) + (ONE - mu.total(x),) for x in mu.source}
    completed = Kernel(mu.source, target, rows, KernelKind.PROBABILITY)
    if h is None:
        return completed, None
    if h.domain != mu.target:
        raise SpaceMismatch("Map does not start at the kernel's target")
    codomain = complete_space(h.codomain, config)
    mapping = dict(h.mapping)
    mapping[dead_state_id(mu.target, config)] = dead_state_id(h.codomain, config)
    return completed, Morphism(target, codomain, mapping)
