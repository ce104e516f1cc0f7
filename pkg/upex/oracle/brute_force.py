"""
The brute-force oracle: decide an instance by searching for a certificate.
"""

from typing import Dict, List, Optional, Sequence

from ..config import OracleConfig
from ..core.graph import Edge
from ..core.model import Decision, UpeInstance
from ..core.verify import extract_embedding, verify_drawing
from ..exceptions import CapExceededError, CapReason, UpexError
from ..logging import get_logger
from ..transforms.element_map import ElementMap
from ..transforms.elimination import subdivide_bends
from .certificate import Certificate, Element
from .materialize import materialize_drawing
from .search import CertificateSearch, Line

logger = get_logger(__name__)

ENGINE_NAME = "oracle"


def project_certificate(lines: Sequence[Line], bend_map: ElementMap) -> Certificate:
    """
    Express certificate lines of the bend-subdivided instance on the input.

    Bend vertices stand for the edge they lie on, pieces of a subdivided
    edge for the whole edge, and lines holding only bends disappear.
    """
    n = bend_map.source_n
    piece_of: Dict[Edge, Edge] = {}
    for e, p in bend_map.paths.items():
        for hop in zip(p, p[1:]):
            piece_of[hop] = e

    kept: List[Line] = []
    for cls, sigma in lines:
        members = tuple(v for v in cls if v < n)
        if not members:
            continue
        order: List[Element] = []
        for item in sigma:
            if isinstance(item, tuple):
                order.append(piece_of.get(item, item))
            elif item >= n:
                order.append(bend_map.origins[item].edge)
            else:
                order.append(item)
        kept.append((members, tuple(order)))
    return Certificate.from_lines(kept)


def brute_force_decide(inst: UpeInstance, config: Optional[OracleConfig] = None) -> Decision:
    """
    Decide an instance by exhaustive certificate search.

    On YES the decision carries the passing certificate and, unless
    ``config.materialize`` is off, a drawing built along the certificate
    lines and checked with verify_drawing.

    Args:
        inst: A valid instance
        config: Vertex cap and materialization switch

    Raises:
        CapExceededError: inst has more vertices than ``config.max_vertices``
    """
    config = config or OracleConfig()
    if inst.n > config.max_vertices:
        logger.warning(f"oracle refused an instance with {inst.n} vertices (cap {config.max_vertices})")
        raise CapExceededError(
            f"oracle cap exceeded: {inst.n} vertices > {config.max_vertices}",
            engine_name=ENGINE_NAME,
            engine_type="oracle",
            reason=CapReason.ORACLE_VERTICES,
            n=inst.n,
            cap=config.max_vertices,
        )

    straight, bend_map = subdivide_bends(inst)
    lines = CertificateSearch(straight).run()
    if lines is None:
        logger.debug(f"oracle: no certificate for {inst.n} vertices")
        return Decision(False, ENGINE_NAME)

    cert = project_certificate(lines, bend_map)
    decision = Decision(True, ENGINE_NAME, certificate=cert)
    if config.materialize:
        drawing = materialize_drawing(straight, lines)
        if not bend_map.is_identity:
            drawing = bend_map.lift_drawing(drawing, inst, verify=False)
        if not verify_drawing(inst, drawing):
            raise UpexError(
                "materialized drawing failed verification",
                engine_name=ENGINE_NAME,
                engine_type="oracle",
            )
        decision.drawing = drawing
        decision.embedding = inst.embedding or extract_embedding(inst.graph, drawing)
    logger.debug(f"oracle: certificate with {cert.class_count} classes")
    return decision
