from __future__ import annotations

import sys
from pathlib import Path
from typing import Optional

from pydantic import ValidationError

from ..core.errors import ReactionAutomataError
from .models import RautomataConfig

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib


class ConfigError(ReactionAutomataError):
    """Raised when the configuration file cannot be read or validated."""


def load_config(config_path: Optional[Path] = None) -> RautomataConfig:
    """Load configuration from TOML if present; else defaults.

    Looks for `config/rautomata.toml` by default relative to CWD.
    """
    explicit = config_path is not None
    if config_path is None:
        config_path = Path("config") / "rautomata.toml"

    if not config_path.exists():
        if explicit:
            raise ConfigError(f"config file not found: {config_path}")
        return RautomataConfig()

    try:
        with config_path.open("rb") as f:
            data = tomllib.load(f)
        cfg = RautomataConfig(**data)
    except (tomllib.TOMLDecodeError, ValidationError) as exc:
        raise ConfigError(f"invalid config {config_path}: {exc}") from exc
    cfg.automata_dir = Path(cfg.automata_dir)
    return cfg
