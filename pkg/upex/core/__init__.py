"""
Instance model with exact rational geometry, validation and the drawing verifier.
"""

from .geometry import Point, as_fraction, orientation, segment_contact, route_x_at
from .graph import DirectedGraph, Edge, UpwardEmbedding, VertexId, rotation_faces, rotation_is_planar
from .model import (
    Decision,
    FullDrawing,
    PartialDrawing,
    Route,
    UpeInstance,
    ValidationReport,
    instance_size,
)
from .verify import (
    drawing_problem,
    extract_embedding,
    find_drawing_conflict,
    validate_instance,
    verify_drawing,
)
from .io import (
    drawing_from_dict,
    drawing_to_dict,
    dump_instance,
    instance_from_dict,
    instance_to_dict,
    load_instance,
)

__all__ = [
    "Point",
    "as_fraction",
    "orientation",
    "segment_contact",
    "route_x_at",
    "DirectedGraph",
    "Edge",
    "UpwardEmbedding",
    "VertexId",
    "rotation_faces",
    "rotation_is_planar",
    "Decision",
    "FullDrawing",
    "PartialDrawing",
    "Route",
    "UpeInstance",
    "ValidationReport",
    "instance_size",
    "drawing_problem",
    "extract_embedding",
    "find_drawing_conflict",
    "validate_instance",
    "verify_drawing",
    "drawing_from_dict",
    "drawing_to_dict",
    "dump_instance",
    "instance_from_dict",
    "instance_to_dict",
    "load_instance",
]
