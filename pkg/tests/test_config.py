"""Tests for lmpsquare.config module."""

from __future__ import annotations

from pathlib import Path

import pytest
import yaml

from lmpsquare.config import (
    CONFIG_FILENAME,
    SquareConfig,
    create_default_config,
    load_config,
    load_profile,
    merge_config,
    write_config,
)
from lmpsquare.exceptions import ConfigError


class TestSquareConfig:
    def test_defaults(self) -> None:
        config = SquareConfig()
        assert config.profile == "strict"
        assert config.dead_state_prefix == "⊥dead"
        assert config.enumeration_limit == 12
        assert config.verify_complement is True
        assert config.indent == 2

    def test_invalid_profile(self) -> None:
        with pytest.raises(ValueError, match="profile"):
            SquareConfig(profile="turbo")

    def test_negative_limit(self) -> None:
        with pytest.raises(ValueError):
            SquareConfig(enumeration_limit=-1)

    def test_blank_dead_state_prefix(self) -> None:
        with pytest.raises(ValueError, match="dead_state_prefix"):
            SquareConfig(dead_state_prefix="  ")


class TestProfiles:
    def test_load_fast(self) -> None:
        profile = load_profile("fast")
        assert profile["enumeration_limit"] == 0
        assert profile["verify_complement"] is False

    def test_unknown_profile(self) -> None:
        with pytest.raises(ConfigError, match="Unknown profile"):
            load_profile("turbo")

    def test_profile_is_a_copy(self) -> None:
        load_profile("strict")["enumeration_limit"] = 99
        assert load_profile("strict")["enumeration_limit"] == 12

    def test_merge_explicit_wins(self) -> None:
        merged = merge_config({"indent": 4, "verify_complement": None}, {"indent": 2, "a": 1})
        assert merged == {"indent": 4, "a": 1}


class TestLoadConfig:
    def test_none_gives_defaults(self) -> None:
        assert load_config(None) == SquareConfig()

    def test_missing_file_gives_defaults(self, tmp_path: Path) -> None:
        assert load_config(tmp_path / "absent.yaml") == SquareConfig()

    def test_directory_lookup(self, tmp_path: Path) -> None:
        (tmp_path / CONFIG_FILENAME).write_text("profile: fast\n", encoding="utf-8")
        config = load_config(tmp_path)
        assert config.profile == "fast"
        assert config.recheck_positivity is False

    def test_explicit_value_overrides_profile(self, tmp_path: Path) -> None:
        path = tmp_path / "custom.yaml"
        path.write_text("profile: fast\nverify_complement: true\n", encoding="utf-8")
        config = load_config(path)
        assert config.verify_complement is True
        assert config.enumeration_limit == 0

    def test_invalid_yaml(self, tmp_path: Path) -> None:
        path = tmp_path / CONFIG_FILENAME
        path.write_text("profile: [unclosed\n", encoding="utf-8")
        with pytest.raises(ConfigError, match="Invalid YAML"):
            load_config(path)

    def test_not_a_mapping(self, tmp_path: Path) -> None:
        path = tmp_path / CONFIG_FILENAME
        path.write_text("- a\n- b\n", encoding="utf-8")
        with pytest.raises(ConfigError, match="mapping"):
            load_config(path)

    def test_out_of_range_value(self, tmp_path: Path) -> None:
        path = tmp_path / CONFIG_FILENAME
        path.write_text("indent: -3\n", encoding="utf-8")
        with pytest.raises(ConfigError):
            load_config(path)

    def test_unknown_profile_in_file(self, tmp_path: Path) -> None:
        path = tmp_path / CONFIG_FILENAME
        path.write_text("profile: turbo\n", encoding="utf-8")
        with pytest.raises(ConfigError):
            load_config(path)


class TestDefaultConfig:
    def test_create_strict(self) -> None:
        config = create_default_config()
        assert config["profile"] == "strict"
        assert config["enumeration_limit"] == 12

    def test_write_and_reload(self, tmp_path: Path) -> None:
        path = tmp_path / "sub" / CONFIG_FILENAME
        write_config(create_default_config("fast"), path)
        with open(path, encoding="utf-8") as f:
            raw = yaml.safe_load(f)
        assert raw["profile"] == "fast"
        assert raw["dead_state_prefix"] == "⊥dead"
        assert load_config(path).verify_complement is False
