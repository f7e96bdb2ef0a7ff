"""
Test configuration and shared fixtures.
"""

from __future__ import annotations

import json
from fractions import Fraction as F
from pathlib import Path

import pytest

from lmpsquare.model.kernels import LMP, Kernel, KernelKind
from lmpsquare.model.spaces import FinSpace, Morphism
from lmpsquare.semipullback.cospans import KernelCospan

PROB = KernelKind.PROBABILITY


@pytest.fixture
def product_cospan() -> KernelCospan:
    """Both legs collapse onto a one-point apex: every coupling is a square."""
    index = FinSpace(("x",), name="X")
    s0 = FinSpace(("o",), name="S0")
    s1 = FinSpace(("a1", "a2"), name="S1")
    s2 = FinSpace(("b1", "b2"), name="S2")
    return KernelCospan(
        apex=Kernel.from_matrix(index, s0, [[F(1)]], PROB),
        left=Kernel.from_matrix(index, s1, [[F(1, 2), F(1, 2)]], PROB),
        right=Kernel.from_matrix(index, s2, [[F(1, 3), F(2, 3)]], PROB),
        h1=Morphism(s1, s0, {"a1": "o", "a2": "o"}),
        h2=Morphism(s2, s0, {"b1": "o", "b2": "o"}),
    )


@pytest.fixture
def deterministic_cospan() -> KernelCospan:
    """First leg is a bijection, so the square over it is unique."""
    index = FinSpace(("x0", "x1"), name="X")
    s0 = FinSpace(("u", "v"), name="S0")
    s1 = FinSpace(("u", "v"), name="S1")
    s2 = FinSpace(("b1", "b2", "b3"), name="S2")
    return KernelCospan(
        apex=Kernel.from_matrix(index, s0, [[F(1, 3), F(2, 3)], [F(1), F(0)]], PROB),
        left=Kernel.from_matrix(index, s1, [[F(1, 3), F(2, 3)], [F(1), F(0)]], PROB),
        right=Kernel.from_matrix(
            index, s2, [[F(1, 3), F(1, 2), F(1, 6)], [F(1), F(0), F(0)]], PROB
        ),
        h1=Morphism(s1, s0, {"u": "u", "v": "v"}),
        h2=Morphism(s2, s0, {"b1": "u", "b2": "v", "b3": "v"}),
    )


@pytest.fixture
def subprob_cospan() -> KernelCospan:
    """Half of the mass is lost at every index state."""
    index = FinSpace(("x",), name="X")
    s0 = FinSpace(("u",), name="S0")
    s1 = FinSpace(("a1", "a2"), name="S1")
    s2 = FinSpace(("b1",), name="S2")
    return KernelCospan(
        apex=Kernel.from_matrix(index, s0, [[F(1, 2)]]),
        left=Kernel.from_matrix(index, s1, [[F(1, 4), F(1, 4)]]),
        right=Kernel.from_matrix(index, s2, [[F(1, 2)]]),
        h1=Morphism(s1, s0, {"a1": "u", "a2": "u"}),
        h2=Morphism(s2, s0, {"b1": "u"}),
    )


@pytest.fixture
def lumpable_lmp() -> LMP:
    """p and q are bisimilar, r is not: the largest quotient has two states."""
    space = FinSpace(("p", "q", "r"), name="L")
    return LMP.from_matrices(
        space,
        {
            "a": [
                [F(0), F(1, 2), F(1, 2)],
                [F(1, 2), F(0), F(1, 2)],
                [F(1, 2), F(0), F(0)],
            ]
        },
        name="L",
    )


@pytest.fixture
def minimal_lmp() -> LMP:
    """Isomorphic to the quotient of lumpable_lmp (p ↦ m0, r ↦ m1)."""
    space = FinSpace(("m0", "m1"), name="M")
    return LMP.from_matrices(
        space, {"a": [[F(1, 2), F(1, 2)], [F(1, 2), F(0)]]}, name="M"
    )


@pytest.fixture
def model_dict() -> dict:
    """Model file contents with a kernel cospan and two equivalent LMPs."""
    return {
        "spaces": {
            "X": ["x"],
            "S0": ["o"],
            "S1": ["a1", "a2"],
            "S2": ["b1", "b2"],
            "SL": ["p", "q", "r"],
            "SM": ["m0", "m1"],
            "SN": ["n0"],
        },
        "kernels": {
            "mu0": {"source": "X", "target": "S0", "kind": "probability", "rows": [["1"]]},
            "mu1": {
                "source": "X",
                "target": "S1",
                "kind": "probability",
                "rows": [["1/2", "1/2"]],
            },
            "mu2": {
                "source": "X",
                "target": "S2",
                "kind": "probability",
                "rows": [["1/3", "2/3"]],
            },
        },
        "morphisms": {
            "h1": {"domain": "S1", "codomain": "S0", "map": {"a1": "o", "a2": "o"}},
            "h2": {"domain": "S2", "codomain": "S0", "map": {"b1": "o", "b2": "o"}},
        },
        "lmps": {
            "L": {
                "space": "SL",
                "labels": ["a"],
                "kernels": {"a": [["0", "1/2", "1/2"], ["1/2", "0", "1/2"], ["1/2", "0", "0"]]},
            },
            "M": {"space": "SM", "kernels": {"a": [["1/2", "1/2"], ["1/2", "0"]]}},
            "N": {"space": "SN", "kernels": {"a": [["1"]]}},
        },
        "cospans": {
            "prod": {
                "apex": "mu0",
                "leg1": {"object": "mu1", "morphism": "h1"},
                "leg2": {"object": "mu2", "morphism": "h2"},
            }
        },
    }


@pytest.fixture
def model_file(tmp_path: Path, model_dict: dict) -> Path:
    """model_dict written as a JSON file."""
    path = tmp_path / "model.json"
    path.write_text(json.dumps(model_dict, indent=2), encoding="utf-8")
    return path
