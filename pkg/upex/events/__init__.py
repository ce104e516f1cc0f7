"""
Event system for upex engines.
"""

from .types import EngineType, EventType, SolverEvent
from .emitter import EventEmitter

__all__ = [
    "EngineType",
    "EventType",
    "SolverEvent",
    "EventEmitter",
]
