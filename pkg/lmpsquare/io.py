"""
lmpsquare.io - Canonical JSON and atomic writes for models and certificates.

Identical content always serializes to identical bytes: sorted keys, fixed
indentation, one trailing newline, Fractions as "p/q" strings.
"""

from __future__ import annotations

import json
import os
import tempfile
from fractions import Fraction
from pathlib import Path
from typing import Any

from lmpsquare.utils import format_rational


def _encode(value: Any) -> Any:
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, frozenset | set):
        return sorted(value, key=str)
    raise TypeError(f"Object of type {type(value).__name__} is not JSON serializable")


def dumps_canonical(data: Any, indent: int = 2) -> str:
    """Serialize data as canonical JSON text."""
    text = json.dumps(data, indent=indent, sort_keys=True, ensure_ascii=False, default=_encode)
    return text + "\n"


def read_text(path: Path) -> str:
    return path.read_text(encoding="utf-8")


def write_text(path: Path, content: str) -> None:
    """Replace path with content in one rename; readers never see a partial file."""
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, name = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    tmp_path = Path(name)
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as f:
            f.write(content)
        tmp_path.replace(path)
    except BaseException:
        tmp_path.unlink(missing_ok=True)
        raise


def write_json(path: Path, data: Any, indent: int = 2) -> None:
    write_text(path, dumps_canonical(data, indent=indent))


def certificate_path(result_path: Path) -> Path:
    """Sidecar certificate of a result file: square.json -> square.certificate.json."""
    return result_path.with_name(f"{result_path.stem}.certificate.json")
