"""
Base exception classes and types for upex.
"""

from dataclasses import dataclass, field
from enum import IntEnum
from typing import Any, Optional


class UpexError(Exception):
    """
    Base exception for all errors raised by upex engines and transforms.

    Provides context about the engine or stage that raised it.

    Attributes:
        message: Error message
        engine_name: Name of the engine or stage (``st-fue``, ``oracle``, ``eliminate``...)
        engine_type: Coarse component name (``core``, ``transforms``, ``oracle``...)
        reason: Reason code (IntEnum specific to the concern)
        metadata: Additional context information
    """

    def __init__(
        self,
        message: str,
        engine_name: Optional[str] = None,
        engine_type: Optional[str] = None,
        reason: Optional[IntEnum] = None,
        **metadata
    ):
        super().__init__(message)
        self.engine_name = engine_name
        self.engine_type = engine_type
        self.reason = reason
        self.metadata = metadata

    def __repr__(self):
        parts = [f"{self.__class__.__name__}('{str(self)}')"]
        if self.engine_name:
            parts.append(f"engine_name='{self.engine_name}'")
        if self.reason is not None:
            parts.append(f"reason={self.reason.name if hasattr(self.reason, 'name') else self.reason}")
        return f"<{', '.join(parts)}>"

    @property
    def context(self) -> "ErrorContext":
        """Snapshot of this error as an ErrorContext"""
        return ErrorContext(
            engine_name=self.engine_name or "",
            engine_type=self.engine_type or "",
            reason=self.reason,
            message=str(self),
            metadata=dict(self.metadata),
        )


@dataclass
class ErrorContext:
    """
    Context information about an error, suitable for reports and logging.

    Attributes:
        engine_name: Name of the engine or stage
        engine_type: Component that raised the error
        reason: Reason code (IntEnum) or None
        message: Human readable message
        metadata: Additional context data (offending vertex, edge, sizes...)
    """
    engine_name: str
    engine_type: str
    reason: Optional[IntEnum] = None
    message: str = ""
    metadata: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        """Convert context to dictionary for logging/JSON reports"""
        return {
            "engine_name": self.engine_name,
            "engine_type": self.engine_type,
            "reason": self.reason.name if hasattr(self.reason, "name") else None,
            "message": self.message,
            "metadata": {k: _jsonable(v) for k, v in self.metadata.items()},
        }


def _jsonable(value: Any) -> Any:
    if isinstance(value, (int, str, bool)) or value is None:
        return value
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return str(value)
