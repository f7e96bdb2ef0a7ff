"""
lmpsquare.extension.sigma - Finitely additive measures on a powerset as kernel rows.

On a finite space finite additivity already is countable additivity, so the
promotion is a checked identity conversion.
"""

from __future__ import annotations

from lmpsquare.exceptions import NotMeasurable
from lmpsquare.measure.finadd import FinAddMeasure
from lmpsquare.model.kernels import Row


def promote_to_sigma_additive(nu: FinAddMeasure) -> Row:
    """Per-state mass row of a measure defined on the full powerset.

    Raises:
        NotMeasurable: If some atom is not a singleton
    """
    if any(len(atom) != 1 for atom in nu.algebra.atoms):
        raise NotMeasurable("Measure is not defined on every singleton")
    # atoms of a powerset algebra are the singletons in ground order
    return tuple(nu.atom_mass)
