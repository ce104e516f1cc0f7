"""
Specific exception types raised by upex.

All inherit from UpexError to provide context.
"""

from .base import UpexError


class InstanceValidationError(UpexError):
    """
    Raised when an instance violates the model invariants.

    The first violated invariant is carried in ``reason`` and the offending
    element in ``metadata['element']``.
    """
    pass


class MalformedDrawingError(UpexError):
    """
    Raised when a full drawing lacks a vertex position or an edge route.

    Distinct from a drawing that is complete but invalid, which makes
    verify_drawing return False.
    """
    pass


class MalformedCertificateError(UpexError):
    """Raised when a certificate does not describe the instance's elements"""
    pass


class PreconditionError(UpexError):
    """
    Raised when an engine is called outside its domain.

    For instance a fixed-embedding engine without an embedding, or a
    path solver on a graph with a vertex of degree three.
    """
    pass


class CapExceededError(UpexError):
    """Raised when an instance is larger than a configured cap"""
    pass


class NoApplicableEngineError(UpexError):
    """Raised when auto dispatch finds no engine for the instance"""
    pass


class NotExtensibleError(UpexError):
    """Raised when a witness is requested for a NO instance"""
    pass


class WitnessLiftError(UpexError):
    """Raised when a witness of a transformed instance cannot be lifted back"""
    pass


class EngineDisagreementError(UpexError):
    """Raised by cross-checking dispatch when two engines disagree"""
    pass
