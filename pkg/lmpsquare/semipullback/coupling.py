"""
lmpsquare.semipullback.coupling - Fiberwise independent coupling.

A second, direct construction of a semipullback kernel for probability
cospans. Used to cross-check the extension pipeline.
"""

from __future__ import annotations

from lmpsquare.exceptions import SpaceMismatch
from lmpsquare.model.kernels import Kernel
from lmpsquare.semipullback.cospans import KernelCospan
from lmpsquare.semipullback.pullback import set_pullback
from lmpsquare.utils import ZERO


def independent_coupling(cospan: KernelCospan) -> Kernel:
    """μ3ˣ(s1, s2) = μ1ˣ(s1)·μ2ˣ(s2) / μ0ˣ(s0) on each fiber over s0.

    Fibers with μ0ˣ(s0) = 0 get zero mass.
    """
    if not (cospan.apex.source == cospan.left.source == cospan.right.source):
        raise SpaceMismatch("Kernels of the cospan are not indexed by the same space")
    h1, h2 = cospan.h1, cospan.h2
    pullback = set_pullback(h1, h2)
    rows = {}
    for x in cospan.index_space:
        row = []
        for s1, s2 in pullback.pairs:
            m = cospan.apex.mass(x, (h1(s1),))
            if m == 0:
                row.append(ZERO)
            else:
                row.append(cospan.left.mass(x, (s1,)) * cospan.right.mass(x, (s2,)) / m)
        rows[x] = tuple(row)
    return Kernel(cospan.index_space, pullback.space, rows, cospan.apex.kind)
