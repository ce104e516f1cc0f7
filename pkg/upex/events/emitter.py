"""
Event emitter for engines and the dispatcher
"""

from typing import Callable, Dict, List, Union

from ..logging import log_error
from .types import SolverEvent


class EventEmitter:
    """
    Synchronous event emitter.

    Handlers are plain callables receiving a SolverEvent. A handler that
    raises is logged through ``log_error`` and never interrupts the engine.
    """

    def __init__(self, engine_name: str):
        """
        Initialize event emitter

        Args:
            engine_name: Name reported in error logs
        """
        self.engine_name = engine_name

        # event_type (str or int) -> List[handler]
        self._handlers: Dict[Union[str, int], List[Callable]] = {}

        # Wildcard handlers (listen to all events)
        self._wildcard: List[Callable] = []

    def on(self, event_type: Union[str, int]):
        """
        Register an event handler (decorator style)

        Args:
            event_type: Event type to listen for (name, int value, or "*" for all events)

        Usage:
            @emitter.on(EventType.DECISION_MADE.value)
            def handler(event):
                ...
        """
        def decorator(handler: Callable):
            self.add_handler(event_type, handler)
            return handler
        return decorator

    def add_handler(self, event_type: Union[str, int], handler: Callable):
        """
        Add handler programmatically (non-decorator style)

        Args:
            event_type: Event type to listen for (name, int value, or "*" for all events)
            handler: Callable that receives a SolverEvent
        """
        if event_type == "*":
            self._wildcard.append(handler)
        else:
            self._handlers.setdefault(event_type, []).append(handler)

    def remove_handler(self, event_type: Union[str, int], handler: Callable):
        """
        Remove a handler

        Args:
            event_type: Event type the handler is registered for
            handler: Handler to remove
        """
        try:
            if event_type == "*":
                self._wildcard.remove(handler)
            else:
                self._handlers[event_type].remove(handler)
        except (ValueError, KeyError):
            pass

    def has_listeners(self) -> bool:
        """True if any handler is registered"""
        return bool(self._wildcard or any(self._handlers.values()))

    def emit(self, event: SolverEvent) -> None:
        """
        Deliver an event to matching handlers, then to wildcard handlers

        Args:
            event: SolverEvent to emit
        """
        handlers = (
            self._handlers.get(event.event_type.value, [])
            + self._handlers.get(event.event_type.name.lower(), [])
            + self._wildcard
        )
        for handler in handlers:
            try:
                handler(event)
            except Exception as e:
                log_error(
                    f'upex.events.{self.engine_name}',
                    e,
                    handler_name=getattr(handler, '__name__', repr(handler)),
                    event_type=event.event_type.name.lower(),
                )
