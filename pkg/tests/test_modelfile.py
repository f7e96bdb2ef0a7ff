"""Tests for lmpsquare.modelfile module."""

from __future__ import annotations

import json
from pathlib import Path

import pytest

from lmpsquare.bisim import largest_zigzag_quotient
from lmpsquare.exceptions import SchemaError
from lmpsquare.model.kernels import KernelKind
from lmpsquare.modelfile import (
    dump_model,
    load_model,
    model_to_dict,
    parse_model,
    quotient_to_model,
    result_to_model,
)
from lmpsquare.semipullback import KernelCospan, LMPCospan, semipullback_prob_kernels


class TestParse:
    def test_load(self, model_file: Path) -> None:
        model = load_model(model_file)
        assert set(model.spaces) == {"X", "S0", "S1", "S2", "SL", "SM", "SN"}
        assert model.kernels["mu1"].kind is KernelKind.PROBABILITY
        assert model.lmp("M").labels == ("a",)
        assert model.lmp("L").space.name == "SL"

    def test_missing_file(self, tmp_path: Path) -> None:
        with pytest.raises(SchemaError, match="Cannot read"):
            load_model(tmp_path / "absent.json")

    def test_syntax_error_location(self) -> None:
        with pytest.raises(SchemaError) as exc:
            parse_model('{\n  "spaces": {\n    "X": ["x",]\n  }\n}')
        assert exc.value.line == 3
        assert exc.value.column is not None
        assert "line 3" in str(exc.value)

    def test_float_rejected(self, model_dict: dict) -> None:
        model_dict["kernels"]["mu0"]["rows"] = [["1.0"]]
        with pytest.raises(SchemaError, match="kernels.mu0.rows"):
            parse_model(json.dumps(model_dict))

    def test_unknown_key(self, model_dict: dict) -> None:
        model_dict["extras"] = {}
        with pytest.raises(SchemaError, match="extras"):
            parse_model(json.dumps(model_dict))

    def test_dangling_reference(self, model_dict: dict) -> None:
        model_dict["morphisms"]["h1"]["codomain"] = "S9"
        with pytest.raises(SchemaError, match="unknown space 'S9'"):
            parse_model(json.dumps(model_dict))

    def test_dangling_cospan_reference(self, model_dict: dict) -> None:
        model_dict["cospans"]["prod"]["leg1"]["morphism"] = "h7"
        with pytest.raises(SchemaError, match="unknown morphism 'h7'"):
            parse_model(json.dumps(model_dict))

    def test_malformed_object(self, model_dict: dict) -> None:
        model_dict["spaces"]["S1"] = ["a1", "a1"]
        with pytest.raises(SchemaError, match="duplicate"):
            parse_model(json.dumps(model_dict))

    def test_labels_must_match_kernels(self, model_dict: dict) -> None:
        model_dict["lmps"]["L"]["labels"] = ["a", "b"]
        with pytest.raises(SchemaError, match="exactly its labels"):
            parse_model(json.dumps(model_dict))

    def test_unknown_lmp(self, model_file: Path) -> None:
        with pytest.raises(SchemaError, match="No LMP"):
            load_model(model_file).lmp("Z")


class TestCospans:
    def test_kernel_cospan(self, model_file: Path) -> None:
        cospan = load_model(model_file).resolve_cospan("prod")
        assert isinstance(cospan, KernelCospan)
        cospan.validate()

    def test_lmp_cospan(self, model_dict: dict) -> None:
        model_dict["morphisms"]["q"] = {
            "domain": "SL",
            "codomain": "SM",
            "map": {"p": "m0", "q": "m0", "r": "m1"},
        }
        model_dict["morphisms"]["id"] = {
            "domain": "SM",
            "codomain": "SM",
            "map": {"m0": "m0", "m1": "m1"},
        }
        model_dict["cospans"]["beh"] = {
            "apex": "M",
            "leg1": {"object": "L", "morphism": "q"},
            "leg2": {"object": "M", "morphism": "id"},
        }
        model = parse_model(json.dumps(model_dict))
        assert isinstance(model.resolve_cospan("beh"), LMPCospan)
        assert model.validate().valid

    def test_unknown_cospan(self, model_file: Path) -> None:
        with pytest.raises(SchemaError, match="No cospan"):
            load_model(model_file).resolve_cospan("nope")

    def test_mode_mismatch(self, model_file: Path) -> None:
        with pytest.raises(SchemaError, match="kernel cospan"):
            load_model(model_file).resolve_cospan("prod", "lmp")


class TestValidate:
    def test_valid_model(self, model_file: Path) -> None:
        assert load_model(model_file).validate().valid

    def test_bad_row_sum(self, model_dict: dict) -> None:
        model_dict["kernels"]["mu2"]["rows"] = [["1/3", "1/3"]]
        report = parse_model(json.dumps(model_dict)).validate()
        messages = [str(v) for v in report.violations]
        assert "kernel 'mu2' row x: row sum 2/3 < 1" in messages
        assert any(m.startswith("cospan 'prod' leg2") for m in messages)

    def test_bad_lmp_entry(self, model_dict: dict) -> None:
        model_dict["lmps"]["N"]["kernels"]["a"] = [["3/2"]]
        report = parse_model(json.dumps(model_dict)).validate()
        assert not report.valid
        assert "LMP 'N'[a] row n0: entry n0 = 3/2 outside [0,1]" in [
            str(v) for v in report.violations
        ]


class TestSerialize:
    def test_round_trip(self, model_file: Path) -> None:
        text = dump_model(load_model(model_file))
        assert dump_model(parse_model(text)) == text

    def test_rationals_are_strings(self, model_file: Path) -> None:
        data = model_to_dict(load_model(model_file))
        assert data["kernels"]["mu2"]["rows"] == [["1/3", "2/3"]]
        assert data["lmps"]["M"]["labels"] == ["a"]

    def test_result_to_model(self, product_cospan: KernelCospan) -> None:
        result = semipullback_prob_kernels(product_cospan)
        data = model_to_dict(result_to_model(result))
        assert set(data["spaces"]) == {"X", "S1", "S2", "S1xS2"}
        assert data["kernels"]["mu3"]["target"] == "S1xS2"
        assert data["morphisms"]["k1"]["map"]["(a2,b1)"] == "a2"
        parse_model(dump_model(result_to_model(result)))

    def test_quotient_to_model(self, model_file: Path) -> None:
        lmp = load_model(model_file).lmp("L")
        quotient, q = largest_zigzag_quotient(lmp)
        data = model_to_dict(quotient_to_model(lmp, quotient, q))
        assert data["lmps"]["L/~"]["kernels"]["a"] == [["1/2", "1/2"], ["1/2", "0"]]
        assert data["morphisms"]["q"]["codomain"] == "L/~"
