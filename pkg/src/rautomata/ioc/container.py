from __future__ import annotations

from typing import Any, Callable, Dict, Type, TypeVar, Union

T = TypeVar("T")

Key = Union[str, type]


def _name(key: Key) -> str:
    return key if isinstance(key, str) else key.__name__


class Container:
    """Service registry for the CLI: shared instances and lazily built ones.

    Keys are names or classes; a class registers under its own name, so
    `get(QueryBus)` finds what `register_factory(QueryBus, ...)` provided.
    """

    def __init__(self) -> None:
        self._singletons: Dict[str, Any] = {}
        self._factories: Dict[str, Callable[[], Any]] = {}

    def register_singleton(self, key: Key, instance: Any) -> None:
        name = _name(key)
        self._factories.pop(name, None)
        self._singletons[name] = instance

    def register_factory(self, key: Key, factory: Callable[[], Any]) -> None:
        name = _name(key)
        self._singletons.pop(name, None)
        self._factories[name] = factory

    def resolve(self, key: Key) -> Any:
        name = _name(key)
        if name not in self._singletons:
            factory = self._factories.get(name)
            if factory is None:
                raise KeyError(f"Dependency not found: {name}")
            # built once, then shared
            self._singletons[name] = factory()
        return self._singletons[name]

    def get(self, kind: Type[T]) -> T:
        instance = self.resolve(kind)
        if not isinstance(instance, kind):
            raise TypeError(f"{kind.__name__} resolved to {type(instance).__name__}")
        return instance
