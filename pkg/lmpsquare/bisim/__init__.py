"""
lmpsquare.bisim - Largest zigzag quotients, behavioral-equivalence cospans and
bisimilarity spans.
"""

from __future__ import annotations

from lmpsquare.bisim.partition import (
    Partition,
    coarsest_stable_partition,
    is_stable,
    largest_zigzag_quotient,
    quotient_by_partition,
    refine_step,
)
from lmpsquare.bisim.spans import (
    are_isomorphic,
    cospan_from_quotients,
    disjoint_union,
    span_from_cospan,
)

__all__ = [
    "Partition",
    "are_isomorphic",
    "coarsest_stable_partition",
    "cospan_from_quotients",
    "disjoint_union",
    "is_stable",
    "largest_zigzag_quotient",
    "quotient_by_partition",
    "refine_step",
    "span_from_cospan",
]
