"""
Fixed-embedding engine for upward planar st-graphs.
"""

from typing import Optional, Tuple

from ..config import StConfig, TransformConfig
from ..core.model import Decision, FullDrawing, UpeInstance
from ..exceptions import NotExtensibleError, PreconditionError, PreconditionReason
from ..logging import get_logger
from ..transforms.element_map import ElementMap
from ..transforms.elimination import eliminate_partial_edges
from .conditions import check_condition1, condition2_violation, pinned_groups
from .dominance import build_dominance_index
from .stgraph import StGraph
from .witness import witness_drawing, witness_lines

logger = get_logger(__name__)

ENGINE_NAME = "st-fue"


def eliminated_st(inst: UpeInstance, config: StConfig, engine_name: str) -> Tuple[StGraph, UpeInstance, ElementMap]:
    """Validate the st-graph and replace the H-edges by pinned paths"""
    st = StGraph.build(inst.graph, inst.embedding, check_embedding=config.check_embedding)
    work, emap = eliminate_partial_edges(inst, TransformConfig(check_postconditions=False))
    logger.debug(f"{engine_name}: working on {work.n} vertices after edge elimination")
    return StGraph(work.graph, st.s, st.t, work.embedding), work, emap


def solve_st_fue(inst: UpeInstance, config: Optional[StConfig] = None, witness: bool = True) -> Decision:
    """
    Decide extensibility of an st-graph instance with a prescribed embedding.

    After the H-edges are eliminated, the answer is YES iff pins never
    decrease along directed paths and same-y pins are ordered left to right
    as in the embedding.

    Args:
        inst: An instance whose graph is an st-graph with an upward embedding
        config: Embedding check switch
        witness: Build the witness drawing on YES

    Raises:
        PreconditionError: no embedding, or the graph is not an st-graph
        InstanceValidationError: the embedding does not fit the graph
    """
    config = config or StConfig()
    if inst.embedding is None:
        raise PreconditionError(
            "the fixed-embedding engine needs an embedding",
            engine_name=ENGINE_NAME,
            engine_type="stgraph",
            reason=PreconditionReason.EMBEDDING_REQUIRED,
        )
    st, work, emap = eliminated_st(inst, config, ENGINE_NAME)

    groups = pinned_groups(work)
    if not check_condition1(work, groups):
        return Decision(False, ENGINE_NAME, notes=["a directed path runs against the pinned y order"])
    idx = build_dominance_index(st)
    violation = condition2_violation(work, idx, groups)
    if violation is not None:
        a, b = violation
        return Decision(False, ENGINE_NAME, notes=[f"vertices {a} and {b} are pinned in the wrong left-to-right order"])

    decision = Decision(True, ENGINE_NAME, embedding=inst.embedding)
    if witness:
        decision.drawing = witness_drawing(inst, work, emap, witness_lines(work, st), ENGINE_NAME)
    logger.debug(f"{ENGINE_NAME}: {inst.n} vertices -> yes")
    return decision


def build_witness_drawing_st(inst: UpeInstance, config: Optional[StConfig] = None) -> FullDrawing:
    """
    An upward planar drawing of the embedded st-graph extending the
    partial drawing.

    Raises:
        NotExtensibleError: the instance has no such drawing
        WitnessLiftError: the drawing of the edge-eliminated instance does
            not map back onto the H-edge routes
    """
    decision = solve_st_fue(inst, config, witness=True)
    if not decision.answer:
        raise NotExtensibleError(
            "no extension exists, so there is no witness drawing",
            engine_name=ENGINE_NAME,
            engine_type="stgraph",
            reason=PreconditionReason.NO_DECISION,
        )
    return decision.drawing
