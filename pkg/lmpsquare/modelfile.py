"""
lmpsquare.modelfile - JSON model files: parsing, cross-reference resolution,
canonical serialization.

Top-level keys are "spaces", "lmps", "kernels", "morphisms" and "cospans",
each a mapping from names to entries; see docs/model-format.md. Rationals are
always strings ("p/q" or an integer), never JSON numbers.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Literal

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from lmpsquare.exceptions import ModelError, SchemaError, SquareError
from lmpsquare.io import dumps_canonical, read_text
from lmpsquare.model.kernels import (
    LMP,
    Kernel,
    KernelKind,
    ValidationReport,
    Violation,
    validate_kernel,
    validate_lmp,
)
from lmpsquare.model.morphisms import is_kernel_morphism, is_zigzag
from lmpsquare.model.spaces import FinSpace, Morphism
from lmpsquare.semipullback.cospans import Cospan, KernelCospan, LMPCospan
from lmpsquare.semipullback.result import SemipullbackResult
from lmpsquare.utils import format_rational, parse_rational

Matrix = list[list[str]]


def _check_matrix(rows: Matrix) -> Matrix:
    for row in rows:
        for entry in row:
            parse_rational(entry)
    return rows


class _Doc(BaseModel):
    model_config = ConfigDict(extra="forbid")


class LmpDoc(_Doc):
    space: str
    labels: list[str] | None = None
    kernels: dict[str, Matrix]

    @field_validator("kernels")
    @classmethod
    def validate_kernels(cls, v: dict[str, Matrix]) -> dict[str, Matrix]:
        for rows in v.values():
            _check_matrix(rows)
        return v


class KernelDoc(_Doc):
    source: str
    target: str
    kind: Literal["probability", "subprobability"] = "subprobability"
    rows: Matrix

    @field_validator("rows")
    @classmethod
    def validate_rows(cls, v: Matrix) -> Matrix:
        return _check_matrix(v)


class MorphismDoc(_Doc):
    domain: str
    codomain: str
    map: dict[str, str]


class LegDoc(_Doc):
    object: str
    morphism: str


class CospanDoc(_Doc):
    apex: str
    leg1: LegDoc
    leg2: LegDoc


class ModelDocument(_Doc):
    spaces: dict[str, list[str]] = Field(default_factory=dict)
    lmps: dict[str, LmpDoc] = Field(default_factory=dict)
    kernels: dict[str, KernelDoc] = Field(default_factory=dict)
    morphisms: dict[str, MorphismDoc] = Field(default_factory=dict)
    cospans: dict[str, CospanDoc] = Field(default_factory=dict)


@dataclass
class Model:
    """Resolved contents of a model file."""

    spaces: dict[str, FinSpace] = field(default_factory=dict)
    lmps: dict[str, LMP] = field(default_factory=dict)
    kernels: dict[str, Kernel] = field(default_factory=dict)
    morphisms: dict[str, Morphism] = field(default_factory=dict)
    cospans: dict[str, CospanDoc] = field(default_factory=dict)

    def lmp(self, name: str) -> LMP:
        if name not in self.lmps:
            raise SchemaError(f"No LMP named {name!r}")
        return self.lmps[name]

    def resolve_cospan(self, name: str, mode: str | None = None) -> Cospan:
        """Cospan object for a named entry; mode is inferred from the apex when None.

        Raises:
            SchemaError: If the cospan is unknown or its parts are of the wrong kind
        """
        if name not in self.cospans:
            raise SchemaError(f"No cospan named {name!r}")
        doc = self.cospans[name]
        inferred = "lmp" if doc.apex in self.lmps else "kernel"
        mode = mode or inferred
        if mode != inferred:
            raise SchemaError(f"Cospan {name!r} is a {inferred} cospan, not a {mode} cospan")
        table: dict[str, Any] = self.lmps if mode == "lmp" else self.kernels
        parts = {}
        roles = (("apex", doc.apex), ("leg1", doc.leg1.object), ("leg2", doc.leg2.object))
        for role, ref in roles:
            if ref not in table:
                raise SchemaError(f"Cospan {name!r}: {role} {ref!r} is not a {mode} entry")
            parts[role] = table[ref]
        h1 = self.morphisms[doc.leg1.morphism]
        h2 = self.morphisms[doc.leg2.morphism]
        cls = LMPCospan if mode == "lmp" else KernelCospan
        return cls(parts["apex"], parts["leg1"], parts["leg2"], h1, h2)

    def validate(self) -> ValidationReport:
        """Every kernel and LMP validator, plus the morphism condition of each cospan leg."""
        report = ValidationReport(subject="model")
        for name, k in self.kernels.items():
            report.extend(validate_kernel(k, f"kernel {name!r}"))
        for name, lmp in self.lmps.items():
            report.extend(validate_lmp(lmp, f"LMP {name!r}"))
        for name in self.cospans:
            cospan = self.resolve_cospan(name)
            legs = (("leg1", cospan.left, cospan.h1), ("leg2", cospan.right, cospan.h2))
            for leg_name, leg, h in legs:
                location = f"cospan {name!r} {leg_name}"
                try:
                    if isinstance(cospan, LMPCospan):
                        result = is_zigzag(h, leg, cospan.apex)  # type: ignore[arg-type]
                    else:
                        result = is_kernel_morphism(h, leg, cospan.apex)  # type: ignore[arg-type]
                except SquareError as e:
                    report.violations.append(Violation(location, str(e)))
                    continue
                if not result:
                    assert result.witness is not None
                    report.violations.append(Violation(location, result.witness.describe()))
        return report


def _ref(table: dict[str, Any], name: str, what: str, where: str) -> Any:
    if name not in table:
        raise SchemaError(f"{where}: unknown {what} {name!r}")
    return table[name]


def _rows(matrix: Matrix) -> list[tuple]:
    return [tuple(parse_rational(v) for v in row) for row in matrix]


def build_model(doc: ModelDocument) -> Model:
    """Resolve every cross-reference of a parsed document.

    Raises:
        SchemaError: On dangling references or malformed objects
    """
    model = Model()
    try:
        for name, states in doc.spaces.items():
            model.spaces[name] = FinSpace(tuple(states), name=name)
        for name, m in doc.morphisms.items():
            where = f"morphism {name!r}"
            model.morphisms[name] = Morphism(
                _ref(model.spaces, m.domain, "space", where),
                _ref(model.spaces, m.codomain, "space", where),
                m.map,
            )
        for name, k in doc.kernels.items():
            where = f"kernel {name!r}"
            model.kernels[name] = Kernel.from_matrix(
                _ref(model.spaces, k.source, "space", where),
                _ref(model.spaces, k.target, "space", where),
                _rows(k.rows),
                KernelKind(k.kind),
            )
        for name, lmp in doc.lmps.items():
            space = _ref(model.spaces, lmp.space, "space", f"LMP {name!r}")
            labels = lmp.labels if lmp.labels is not None else list(lmp.kernels)
            if set(labels) != set(lmp.kernels):
                raise SchemaError(f"LMP {name!r}: kernels must be given for exactly its labels")
            kernels = {
                label: Kernel.from_matrix(space, space, _rows(lmp.kernels[label]))
                for label in labels
            }
            model.lmps[name] = LMP(space, tuple(labels), kernels, name=name)
        for name, c in doc.cospans.items():
            where = f"cospan {name!r}"
            objects = {**model.lmps, **model.kernels}
            for ref in (c.apex, c.leg1.object, c.leg2.object):
                _ref(objects, ref, "LMP or kernel", where)
            for ref in (c.leg1.morphism, c.leg2.morphism):
                _ref(model.morphisms, ref, "morphism", where)
            model.cospans[name] = c
    except ModelError as e:
        raise SchemaError(str(e)) from e
    return model


def parse_model(text: str) -> Model:
    """Parse model-file text.

    Raises:
        SchemaError: With line and column for JSON syntax errors
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise SchemaError(f"Invalid JSON: {e.msg}", line=e.lineno, column=e.colno) from e
    try:
        doc = ModelDocument.model_validate(data)
    except ValidationError as e:
        first = e.errors()[0]
        location = ".".join(str(part) for part in first["loc"])
        raise SchemaError(f"{location}: {first['msg']}") from e
    return build_model(doc)


def load_model(path: Path) -> Model:
    try:
        text = read_text(path)
    except OSError as e:
        raise SchemaError(f"Cannot read {path}: {e}") from e
    return parse_model(text)


def _matrix(k: Kernel) -> list[list[str]]:
    return [[format_rational(v) for v in row] for row in k.matrix()]


def _space_name(model: Model, space: FinSpace) -> str:
    if space.name in model.spaces and model.spaces[space.name] == space:
        return space.name
    for name, candidate in model.spaces.items():
        if candidate == space:
            return name
    raise SchemaError(f"Space with states {list(space.states)} is not part of the model")


def model_to_dict(model: Model) -> dict[str, Any]:
    """Document form of a model; empty sections are omitted."""
    data: dict[str, Any] = {}
    if model.spaces:
        data["spaces"] = {name: list(space.states) for name, space in model.spaces.items()}
    if model.lmps:
        data["lmps"] = {
            name: {
                "space": _space_name(model, lmp.space),
                "labels": list(lmp.labels),
                "kernels": {label: _matrix(lmp.kernel(label)) for label in lmp.labels},
            }
            for name, lmp in model.lmps.items()
        }
    if model.kernels:
        data["kernels"] = {
            name: {
                "source": _space_name(model, k.source),
                "target": _space_name(model, k.target),
                "kind": k.kind.value,
                "rows": _matrix(k),
            }
            for name, k in model.kernels.items()
        }
    if model.morphisms:
        data["morphisms"] = {
            name: {
                "domain": _space_name(model, h.domain),
                "codomain": _space_name(model, h.codomain),
                "map": dict(h.mapping),
            }
            for name, h in model.morphisms.items()
        }
    if model.cospans:
        data["cospans"] = {name: c.model_dump() for name, c in model.cospans.items()}
    return data


def dump_model(model: Model, indent: int = 2) -> str:
    """Canonical JSON text of a model."""
    return dumps_canonical(model_to_dict(model), indent=indent)


def add_space(model: Model, space: FinSpace, fallback: str) -> FinSpace:
    """Register a space under its own name (or fallback when unnamed)."""
    name = space.name or fallback
    named = space if space.name else space.renamed(name)
    model.spaces.setdefault(name, named)
    return named


def result_to_model(result: SemipullbackResult) -> Model:
    """Model holding the vertex, its pullback space and the projections k1, k2."""
    model = Model()
    cospan = result.cospan
    if isinstance(result.vertex, LMP):
        assert isinstance(cospan, LMPCospan)
        add_space(model, cospan.left.space, "S1")
        add_space(model, cospan.right.space, "S2")
        space = add_space(model, result.vertex.space, "S3")
        model.lmps[space.name] = result.vertex
    else:
        assert isinstance(cospan, KernelCospan)
        add_space(model, cospan.index_space, "X")
        add_space(model, cospan.left.target, "S1")
        add_space(model, cospan.right.target, "S2")
        add_space(model, result.vertex.target, "S3")
        model.kernels["mu3"] = result.vertex
    model.morphisms["k1"] = result.k1
    model.morphisms["k2"] = result.k2
    return model


def quotient_to_model(lmp: LMP, quotient: LMP, q: Morphism) -> Model:
    model = Model()
    add_space(model, lmp.space, "S")
    space = add_space(model, quotient.space, f"{lmp.name or 'S'}/~")
    model.lmps[space.name] = quotient
    model.morphisms["q"] = q
    return model
