"""
Reason codes for errors and rejections across upex.

Each concern has its own IntEnum describing why an instance, drawing or
engine call was refused.
"""

from enum import IntEnum


class ValidationReason(IntEnum):
    """Reasons why an instance fails validation"""
    OK = 0                     # Instance satisfies every invariant
    VERTEX_RANGE = 1           # Vertex id outside 0..n-1
    SELF_LOOP = 2              # Edge (v, v)
    PARALLEL_EDGE = 3          # Edge listed twice
    H_NOT_SUBGRAPH = 4         # H vertex or edge not in G
    H_EDGE_ENDPOINT = 5        # H edge with an endpoint outside V(H)
    DRAWING_DOMAIN = 6         # Positions/routes do not match H exactly
    COINCIDENT_VERTICES = 7    # Two H vertices at the same point
    ROUTE_ENDPOINTS = 8        # Route does not start/end at the endpoint positions
    NOT_Y_MONOTONE = 9         # Route not strictly y-increasing
    CROSSING = 10              # Two drawn elements intersect illegally
    EMBEDDING_MISMATCH = 11    # Embedding lists disagree with the edge set
    EMBEDDING_NOT_PLANAR = 12  # Rotation system is not planar
    FILE_FORMAT = 13           # JSON document does not follow the file format


class DrawingReason(IntEnum):
    """Reasons why a full drawing is rejected or malformed"""
    MISSING_VERTEX = 0         # Vertex without a position (malformed)
    MISSING_EDGE = 1           # Edge without a route (malformed)
    NOT_UPWARD = 2             # Some route is not strictly y-increasing
    NOT_PLANAR = 3             # Crossing, overlap or vertex on foreign edge
    NOT_EXTENDING = 4          # H element differs from the partial drawing
    WRONG_EMBEDDING = 5        # Tangent order differs from the prescribed lists
    TANGENT_TIE = 6            # Collinear first segments at a vertex
    BAD_ENDPOINTS = 7          # Route endpoints differ from vertex positions


class PreconditionReason(IntEnum):
    """Reasons why an engine refuses an instance"""
    NOT_ST_GRAPH = 0           # Not exactly one source and one sink, or cyclic
    EMBEDDING_REQUIRED = 1     # Fixed-embedding engine without embedding
    EMBEDDING_FORBIDDEN = 2    # Variable-embedding engine given an embedding
    H_HAS_EDGES = 3            # Engine needs edgeless H
    DUPLICATE_Y = 4            # Engine needs pairwise distinct pinned y's
    NOT_FULLY_PINNED = 5       # Engine needs V(H) = V(G)
    NOT_PATH_OR_CYCLE = 6      # Graph is not a simple path or cycle
    TOO_SMALL = 7              # Degenerate graph (n < 2)
    NOT_LEVELED = 8            # Level assignment not injective/increasing
    NO_DECISION = 9            # Witness requested for a NO instance


class CapReason(IntEnum):
    """Reasons why a size cap was hit"""
    ORACLE_VERTICES = 0        # Oracle vertex cap exceeded
    DP_VERTICES = 1            # Path/cycle table size cap exceeded


class EngineReason(IntEnum):
    """Reasons why engine dispatch failed"""
    NO_APPLICABLE_ENGINE = 0   # Auto dispatch found nothing applicable
    UNKNOWN_ENGINE = 1         # Selector string not recognised
    DISAGREEMENT = 2           # Two engines answered differently


class LiftReason(IntEnum):
    """Reasons why a witness could not be mapped back to the input"""
    ROUTE_CONFLICT = 0         # Lifted route crosses another route
    MISSING_ORIGIN = 1         # Element map lacks the requested element
    SPLIT_VERTEX = 2           # Split vertices cannot be pushed without redrawing


class CertificateReason(IntEnum):
    """Reasons why a certificate is malformed"""
    UNKNOWN_VERTEX = 0         # Label for a vertex outside the graph
    MISSING_VERTEX = 1         # Vertex without a label
    EMPTY_CLASS = 2            # Label values leave a gap
    BAD_SIGMA = 3              # Sigma list does not match the line contents
