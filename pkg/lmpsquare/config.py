"""
lmpsquare.config - YAML config loading, profile merging, validation.

Handles loading lmpsquare.yaml, applying profile defaults, and validating
the knobs that control how much re-verification the pipeline performs.
"""

from __future__ import annotations

import copy
from pathlib import Path
from typing import Any

import yaml
from pydantic import BaseModel, Field, ValidationError, field_validator

from lmpsquare.exceptions import ConfigError

CONFIG_FILENAME = "lmpsquare.yaml"


class SquareConfig(BaseModel):
    """Resolved configuration for the construction pipeline."""

    profile: str = "strict"

    dead_state_prefix: str = "⊥dead"
    enumeration_limit: int = Field(default=12, ge=0)

    verify_complement: bool = True
    verify_projections: bool = True
    recheck_positivity: bool = True

    indent: int = Field(default=2, ge=0)

    @field_validator("profile")
    @classmethod
    def validate_profile(cls, v: str) -> str:
        valid = {"strict", "fast"}
        if v not in valid:
            raise ValueError(f"profile must be one of: {valid}")
        return v

    @field_validator("dead_state_prefix")
    @classmethod
    def validate_dead_state_prefix(cls, v: str) -> str:
        if not v.strip():
            raise ValueError("dead_state_prefix must be a nonempty string")
        return v


BUILTIN_PROFILES: dict[str, dict[str, Any]] = {
    "strict": {
        "enumeration_limit": 12,
        "verify_complement": True,
        "verify_projections": True,
        "recheck_positivity": True,
    },
    "fast": {
        "enumeration_limit": 0,
        "verify_complement": False,
        "verify_projections": True,
        "recheck_positivity": False,
    },
}


def load_profile(name: str) -> dict[str, Any]:
    """Load a built-in profile by name."""
    if name in BUILTIN_PROFILES:
        return copy.deepcopy(BUILTIN_PROFILES[name])
    raise ConfigError(f"Unknown profile: {name}")


def merge_config(explicit: dict[str, Any], profile: dict[str, Any]) -> dict[str, Any]:
    """Merge explicit settings over profile defaults. Explicit values take precedence."""
    merged = profile.copy()
    for key, value in explicit.items():
        if value is not None:
            merged[key] = value
    return merged


def load_config(path: Path | None = None) -> SquareConfig:
    """Load and validate configuration.

    Args:
        path: A YAML file, or a directory containing lmpsquare.yaml. When None
            or when the file does not exist, defaults are used.

    Raises:
        ConfigError: If the file is not valid YAML or a value is out of range
    """
    raw_config: dict[str, Any] = {}
    if path is not None:
        config_file = path / CONFIG_FILENAME if path.is_dir() else path
        if config_file.exists():
            try:
                with open(config_file, encoding="utf-8") as f:
                    raw_config = yaml.safe_load(f) or {}
            except yaml.YAMLError as e:
                raise ConfigError(f"Invalid YAML in {config_file}: {e}") from e
            if not isinstance(raw_config, dict):
                raise ConfigError(f"{config_file} must contain a mapping")

    profile_name = raw_config.get("profile", "strict")
    merged = merge_config(raw_config, load_profile(profile_name))
    merged["profile"] = profile_name

    try:
        return SquareConfig(**merged)
    except ValidationError as e:
        raise ConfigError(str(e)) from e


def create_default_config(profile: str = "strict") -> dict[str, Any]:
    """Create a default config dict for a profile."""
    base = SquareConfig()
    defaults: dict[str, Any] = {
        "profile": profile,
        "dead_state_prefix": base.dead_state_prefix,
        "indent": base.indent,
    }
    return merge_config(load_profile(profile), defaults)


def write_config(config: dict[str, Any], path: Path) -> None:
    """Write configuration to a YAML file."""
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        yaml.dump(config, f, default_flow_style=False, sort_keys=False, allow_unicode=True)
