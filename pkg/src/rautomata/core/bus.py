from __future__ import annotations

import logging
from typing import Any, Callable, Dict, Type

from .contracts import Command, Query, Result
from .errors import ReactionAutomataError

logger = logging.getLogger(__name__)

Handler = Callable[[Any], Result[Any]]


def _guarded(handler: Handler, message: Any) -> Result[Any]:
    # Library errors become failures; anything else is a bug and propagates.
    try:
        return handler(message)
    except ReactionAutomataError as exc:
        logger.info("%s failed: %s", type(message).__name__, exc)
        return Result.failure(str(exc))


class CommandBus:
    def __init__(self) -> None:
        self._handlers: Dict[Type[Command], Handler] = {}

    def register(self, command_type: Type[Command], handler: Handler) -> None:
        self._handlers[command_type] = handler

    def dispatch(self, command: Command) -> Result[Any]:
        handler = self._handlers.get(type(command))
        if handler is None:
            return Result.failure(f"No handler registered for command: {type(command).__name__}")
        logger.debug("dispatch %r", command)
        return _guarded(handler, command)


class QueryBus:
    def __init__(self) -> None:
        self._handlers: Dict[Type[Query[Any]], Handler] = {}

    def register(self, query_type: Type[Query[Any]], handler: Handler) -> None:
        self._handlers[query_type] = handler

    def ask(self, query: Query[Any]) -> Result[Any]:
        handler = self._handlers.get(type(query))
        if handler is None:
            return Result.failure(f"No handler registered for query: {type(query).__name__}")
        logger.debug("ask %r", query)
        return _guarded(handler, query)
