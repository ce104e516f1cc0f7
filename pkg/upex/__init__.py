"""
upex - Extending Partial Upward Planar Drawings

Decides whether a fixed upward planar drawing of a subgraph H can be
completed to an upward planar drawing of the whole digraph G, and returns
witnesses when it can.

Engines:
- st-fue / st-upe - upward planar st-graphs with or without a fixed embedding
- path-fue / cycle-fue - embedded paths and cycles with pinned points
- path-upe - paths and cycles with pinned points, free embedding
- olp - fully pinned edgeless instances with distinct y-coordinates
- oracle - exhaustive certificate search for small instances

Transforms:
- Partial-edge elimination and y-coordinate distinction
- Reductions between extension and ordered level planarity

Usage:
    from upex import UpeInstance, decide

    inst = UpeInstance.build(4, [(0, 1), (0, 2), (1, 3), (2, 3)], positions={1: (0, 1), 2: (1, 1)})
    decision = decide(inst)

    # Explicit engines
    from upex.stgraph import solve_st_fue, solve_st_upe
    from upex.pathcycle import solve_path_fue, solve_cycle_fue, solve_path_or_cycle_upe

    # Logging configuration
    from upex import configure_logging
"""

# Configuration classes
from .config import (
    DpConfig,
    DrawConfig,
    GeneratorConfig,
    OracleConfig,
    StConfig,
    TransformConfig,
)

# Exception System
from .exceptions import (
    UpexError,
    ErrorContext,
    ValidationReason,
    DrawingReason,
    PreconditionReason,
    CapReason,
    EngineReason,
    LiftReason,
    CertificateReason,
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

# Instance model
from .core import (
    Decision,
    DirectedGraph,
    FullDrawing,
    PartialDrawing,
    Point,
    UpeInstance,
    UpwardEmbedding,
    ValidationReport,
    extract_embedding,
    instance_size,
    load_instance,
    validate_instance,
    verify_drawing,
)

from .transforms import (
    ElementMap,
    eliminate_partial_edges,
    make_distinct_y,
    olp_to_upe,
    upe_to_olp,
)

from .oracle import (
    Certificate,
    brute_force_decide,
    check_certificate,
)

from .stgraph import (
    build_spqr_tree,
    build_witness_drawing_st,
    solve_st_fue,
    solve_st_upe,
)

from .pathcycle import (
    JunctionChoice,
    partition_monotone_runs,
    solve_cycle_fue,
    solve_path_fue,
    solve_path_or_cycle_upe,
)

from .levelplan import (
    LevelGraphSingleton,
    is_level_planar_singleton,
    solve_upe_edgeless_distinct_y,
)

from .engines import ENGINE_SELECTORS, Dispatcher, EngineSelector, decide
from .generators import generate_instance
from .svg import parse_svg_drawing, render_svg

# Event System
from .events import (
    EngineType,
    EventEmitter,
    EventType,
    SolverEvent,
)

# Logging Configuration
from .logging import (
    configure_logging,
    set_error_handler,
    disable_logging,
    is_logging_enabled,
)

__all__ = [
    # Configuration Classes
    "DpConfig",
    "DrawConfig",
    "GeneratorConfig",
    "OracleConfig",
    "StConfig",
    "TransformConfig",

    # Exception System
    "UpexError",
    "ErrorContext",
    "ValidationReason",
    "DrawingReason",
    "PreconditionReason",
    "CapReason",
    "EngineReason",
    "LiftReason",
    "CertificateReason",
    "InstanceValidationError",
    "MalformedDrawingError",
    "MalformedCertificateError",
    "PreconditionError",
    "CapExceededError",
    "NoApplicableEngineError",
    "NotExtensibleError",
    "WitnessLiftError",
    "EngineDisagreementError",

    # Instance model
    "Decision",
    "DirectedGraph",
    "FullDrawing",
    "PartialDrawing",
    "Point",
    "UpeInstance",
    "UpwardEmbedding",
    "ValidationReport",
    "extract_embedding",
    "instance_size",
    "load_instance",
    "validate_instance",
    "verify_drawing",

    # Transforms
    "ElementMap",
    "eliminate_partial_edges",
    "make_distinct_y",
    "olp_to_upe",
    "upe_to_olp",

    # Oracle
    "Certificate",
    "brute_force_decide",
    "check_certificate",

    # Engines
    "build_spqr_tree",
    "build_witness_drawing_st",
    "solve_st_fue",
    "solve_st_upe",
    "JunctionChoice",
    "partition_monotone_runs",
    "solve_cycle_fue",
    "solve_path_fue",
    "solve_path_or_cycle_upe",
    "LevelGraphSingleton",
    "is_level_planar_singleton",
    "solve_upe_edgeless_distinct_y",
    "Dispatcher",
    "EngineSelector",
    "ENGINE_SELECTORS",
    "decide",
    "generate_instance",
    "parse_svg_drawing",
    "render_svg",

    # Event System
    "EngineType",
    "EventEmitter",
    "EventType",
    "SolverEvent",

    # Logging
    "configure_logging",
    "set_error_handler",
    "disable_logging",
    "is_logging_enabled",
]

__version__ = "0.1.0"
