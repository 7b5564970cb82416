from __future__ import annotations

from pathlib import Path
from typing import Optional

from pydantic import BaseModel, Field, PositiveInt, field_validator

from ..engine.process import SearchBudget


class RautomataConfig(BaseModel):
    budget: SearchBudget = Field(default_factory=SearchBudget)
    # Compiled automata encode stacks as 2**height copies; they get a larger weight cap.
    compiled_max_weight: PositiveInt = 65536
    enumeration_limit: PositiveInt = 100_000
    automata_dir: Path = Field(default_factory=lambda: Path("automata"))
    log_level: str = "WARNING"
    log_file: Optional[Path] = None

    @field_validator("log_level")
    @classmethod
    def _known_level(cls, value: str) -> str:
        level = value.upper()
        if level not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
            raise ValueError(f"unknown log level: {value}")
        return level

    def search_budget(self, **overrides: object) -> SearchBudget:
        """The configured budget with per-command overrides applied (None means keep)."""
        update = {k: v for k, v in overrides.items() if v is not None}
        update.setdefault("enumeration_limit", self.enumeration_limit)
        return self.budget.model_copy(update=update)
