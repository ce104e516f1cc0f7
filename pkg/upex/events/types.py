"""
Event types and classes for upex engines
"""

import time
from dataclasses import dataclass, field
from enum import IntEnum
from typing import Any, Dict


class EngineType(IntEnum):
    """Engine families"""
    ST_FUE = 0
    ST_UPE = 1
    PATH_FUE = 2
    CYCLE_FUE = 3
    PATH_UPE = 4
    OLP = 5
    ORACLE = 6
    TRANSFORM = 7


class EventType(IntEnum):
    """Event types emitted while deciding an instance"""
    # Dispatch
    ENGINE_SELECTED = 0
    ENGINE_SKIPPED = 1

    # Pipeline stages
    TRANSFORM_APPLIED = 10

    # Outcomes
    DECISION_MADE = 20
    WITNESS_BUILT = 21
    CROSS_CHECKED = 22


@dataclass
class SolverEvent:
    """Event emitted by an engine or the dispatcher"""
    engine_type: EngineType
    event_type: EventType
    engine_name: str
    timestamp: float = field(default_factory=time.time)
    metadata: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict:
        """Convert event to dictionary"""
        return {
            "engine_type": self.engine_type.name.lower(),
            "event_type": self.event_type.name.lower(),
            "engine_name": self.engine_name,
            "timestamp": self.timestamp,
            "metadata": self.metadata,
        }
