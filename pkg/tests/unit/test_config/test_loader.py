"""Tests for configuration loading."""

from pathlib import Path

import pytest

from rautomata.config import ConfigError, RautomataConfig, load_config


class TestLoadConfig:
    """TOML configuration with pydantic validation."""

    def test_defaults_when_no_file(self, tmp_path, monkeypatch):
        monkeypatch.chdir(tmp_path)
        cfg = load_config()
        assert cfg == RautomataConfig()
        assert cfg.budget.max_weight == 10_000
        assert cfg.log_level == "WARNING"

    def test_default_location(self, tmp_path, monkeypatch):
        (tmp_path / "config").mkdir()
        (tmp_path / "config" / "rautomata.toml").write_text('log_level = "info"\n')
        monkeypatch.chdir(tmp_path)
        assert load_config().log_level == "INFO"

    def test_explicit_file(self, tmp_path):
        path = tmp_path / "custom.toml"
        path.write_text(
            'automata_dir = "defs"\ncompiled_max_weight = 1024\n\n[budget]\nmax_weight = 50\nbound_fed = true\n'
        )
        cfg = load_config(path)
        assert cfg.automata_dir == Path("defs")
        assert cfg.compiled_max_weight == 1024
        assert cfg.budget.max_weight == 50
        assert cfg.budget.bound_fed is True
        assert cfg.budget.max_steps == 10_000

    def test_explicit_missing_file(self, tmp_path):
        with pytest.raises(ConfigError, match="not found"):
            load_config(tmp_path / "absent.toml")

    def test_malformed_toml(self, tmp_path):
        path = tmp_path / "bad.toml"
        path.write_text("budget = [\n")
        with pytest.raises(ConfigError, match="invalid config"):
            load_config(path)

    @pytest.mark.parametrize("body", ['log_level = "loud"\n', "[budget]\nmax_weight = 0\n"])
    def test_invalid_values(self, tmp_path, body):
        path = tmp_path / "bad.toml"
        path.write_text(body)
        with pytest.raises(ConfigError):
            load_config(path)

    def test_repository_config_file_loads(self):
        path = Path(__file__).resolve().parents[3] / "config" / "rautomata.toml"
        cfg = load_config(path)
        assert cfg.budget.max_weight == 10_000


class TestSearchBudget:
    """Per-command overrides."""

    def test_overrides_skip_none(self):
        cfg = RautomataConfig(enumeration_limit=500)
        budget = cfg.search_budget(max_weight=7, max_steps=None)
        assert budget.max_weight == 7
        assert budget.max_steps == cfg.budget.max_steps
        assert budget.enumeration_limit == 500
