"""
Exception system for upex.

Provides:
- Base exception class with engine context
- Reason enums for each concern
- Specific exception types
"""

from .base import (
    UpexError,
    ErrorContext,
)
from .reasons import (
    ValidationReason,
    DrawingReason,
    PreconditionReason,
    CapReason,
    EngineReason,
    LiftReason,
    CertificateReason,
)
from .errors import (
    InstanceValidationError,
    MalformedDrawingError,
    MalformedCertificateError,
    PreconditionError,
    CapExceededError,
    NoApplicableEngineError,
    NotExtensibleError,
    WitnessLiftError,
    EngineDisagreementError,
)

__all__ = [
    # Base classes
    "UpexError",
    "ErrorContext",

    # Reason enums
    "ValidationReason",
    "DrawingReason",
    "PreconditionReason",
    "CapReason",
    "EngineReason",
    "LiftReason",
    "CertificateReason",

    # Exception types
    "InstanceValidationError",
    "MalformedDrawingError",
    "MalformedCertificateError",
    "PreconditionError",
    "CapExceededError",
    "NoApplicableEngineError",
    "NotExtensibleError",
    "WitnessLiftError",
    "EngineDisagreementError",
]
