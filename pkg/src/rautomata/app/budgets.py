from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional

from ..config.models import RautomataConfig
from ..engine.process import SearchBudget
from ..engine.reactions import ReactionAutomaton
from ..machines.compiler import looks_compiled

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class Limits:
    """Per-request overrides of the configured search budget; None keeps the configured value."""

    max_weight: Optional[int] = None
    max_steps: Optional[int] = None
    max_states: Optional[int] = None
    bound_fed: Optional[bool] = None


class BudgetPolicy:
    def __init__(self, config: Optional[RautomataConfig] = None) -> None:
        self.config = config or RautomataConfig()

    def for_automaton(self, automaton: ReactionAutomaton, limits: Optional[Limits] = None) -> SearchBudget:
        limits = limits or Limits()
        max_weight = limits.max_weight
        if max_weight is None and looks_compiled(automaton):
            max_weight = max(self.config.compiled_max_weight, self.config.budget.max_weight)
            logger.debug("compiled automaton %s: max_weight %d", automaton.name, max_weight)
        return self.config.search_budget(
            max_weight=max_weight,
            max_steps=limits.max_steps,
            max_states=limits.max_states,
            bound_fed=limits.bound_fed,
        )
