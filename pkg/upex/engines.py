"""
Engine selection and dispatch.

The dispatcher knows every decision engine, when it applies, and in which
order ``auto`` tries them. It reports its steps through an EventEmitter.
"""

from dataclasses import dataclass
from typing import Callable, Dict, List, Literal, Optional, Tuple, get_args

from .config import DpConfig, OracleConfig, StConfig
from .core.model import Decision, UpeInstance
from .events import EngineType, EventEmitter, EventType, SolverEvent
from .exceptions import (
    CapExceededError,
    EngineDisagreementError,
    EngineReason,
    NoApplicableEngineError,
    PreconditionError,
)
from .levelplan import solve_upe_edgeless_distinct_y
from .logging import get_logger
from .oracle import brute_force_decide
from .pathcycle import path_or_cycle_order, solve_cycle_fue, solve_path_fue, solve_path_or_cycle_upe
from .stgraph import solve_st_fue, solve_st_upe

logger = get_logger(__name__)

EngineSelector = Literal["auto", "st-fue", "st-upe", "path-fue", "cycle-fue", "path-upe", "olp", "oracle"]
ENGINE_SELECTORS: Tuple[str, ...] = get_args(EngineSelector)
AUTO = ENGINE_SELECTORS[0]


@dataclass(frozen=True)
class EngineSpec:
    """A decision engine and the cheap test for when it applies"""
    name: str
    engine_type: EngineType
    applies: Callable[[UpeInstance], bool]
    solve: Callable[[UpeInstance], Decision]


def _single_source_sink(inst: UpeInstance) -> bool:
    g = inst.graph
    return g.n >= 2 and len(g.sources()) == 1 and len(g.sinks()) == 1 and g.is_acyclic()


def _shape(inst: UpeInstance) -> Optional[str]:
    try:
        _, cyclic = path_or_cycle_order(inst.graph)
    except PreconditionError:
        return None
    return "cycle" if cyclic else "path"


def _edgeless_distinct(inst: UpeInstance) -> bool:
    return not inst.partial_edges and inst.pinned_ys_distinct()


class Dispatcher:
    """
    Chooses and runs decision engines.

    Example:
        >>> dispatcher = Dispatcher()
        >>> @dispatcher.events.on("decision_made")
        ... def report(event):
        ...     print(event.engine_name, event.metadata["answer"])
        >>> decision = dispatcher.decide(inst)
    """

    def __init__(
        self,
        oracle: Optional[OracleConfig] = None,
        dp: Optional[DpConfig] = None,
        st: Optional[StConfig] = None,
        name: str = "dispatcher",
    ):
        self.oracle = oracle or OracleConfig.from_env()
        self.dp = dp or DpConfig()
        self.st = st or StConfig()
        self.events = EventEmitter(name)
        self.engines: Dict[str, EngineSpec] = {
            spec.name: spec
            for spec in (
                EngineSpec(
                    "st-fue",
                    EngineType.ST_FUE,
                    lambda i: i.embedding is not None and _single_source_sink(i),
                    lambda i: solve_st_fue(i, self.st),
                ),
                EngineSpec(
                    "st-upe",
                    EngineType.ST_UPE,
                    lambda i: i.embedding is None and _single_source_sink(i),
                    lambda i: solve_st_upe(i, self.st),
                ),
                EngineSpec(
                    "path-fue",
                    EngineType.PATH_FUE,
                    lambda i: i.embedding is not None and _edgeless_distinct(i) and _shape(i) == "path",
                    lambda i: solve_path_fue(i, self.dp),
                ),
                EngineSpec(
                    "cycle-fue",
                    EngineType.CYCLE_FUE,
                    lambda i: i.embedding is not None and _edgeless_distinct(i) and _shape(i) == "cycle",
                    lambda i: solve_cycle_fue(i, self.dp),
                ),
                EngineSpec(
                    "path-upe",
                    EngineType.PATH_UPE,
                    lambda i: i.embedding is None and _edgeless_distinct(i) and _shape(i) is not None,
                    solve_path_or_cycle_upe,
                ),
                EngineSpec(
                    "olp",
                    EngineType.OLP,
                    lambda i: i.embedding is None and _edgeless_distinct(i) and i.fully_pinned,
                    solve_upe_edgeless_distinct_y,
                ),
                EngineSpec(
                    "oracle",
                    EngineType.ORACLE,
                    lambda i: i.n <= self.oracle.max_vertices,
                    lambda i: brute_force_decide(i, self.oracle),
                ),
            )
        }

    @property
    def names(self) -> Tuple[str, ...]:
        return (AUTO,) + tuple(self.engines)

    def _emit(self, spec: EngineSpec, event_type: EventType, engine_type: Optional[EngineType] = None, **metadata):
        if self.events.has_listeners():
            self.events.emit(SolverEvent(engine_type or spec.engine_type, event_type, spec.name, metadata=metadata))

    def spec(self, name: str) -> EngineSpec:
        try:
            return self.engines[name]
        except KeyError:
            raise NoApplicableEngineError(
                f"unknown engine {name!r}; choose from {', '.join(self.names)}",
                reason=EngineReason.UNKNOWN_ENGINE,
            ) from None

    def applicable(self, inst: UpeInstance) -> List[str]:
        """Engines whose domain test accepts the instance, in dispatch order"""
        return [name for name, spec in self.engines.items() if spec.applies(inst)]

    def run(self, name: EngineSelector, inst: UpeInstance) -> Decision:
        """Run one engine and report what it did"""
        spec = self.spec(name)
        self._emit(spec, EventType.ENGINE_SELECTED, n=inst.n)
        decision = spec.solve(inst)
        if inst.partial_edges and spec.engine_type in (EngineType.ST_FUE, EngineType.ST_UPE):
            self._emit(spec, EventType.TRANSFORM_APPLIED, EngineType.TRANSFORM, transform="eliminate_partial_edges", edges=len(inst.partial_edges))
        self._emit(spec, EventType.DECISION_MADE, answer=decision.answer, notes=list(decision.notes))
        if decision.drawing is not None:
            self._emit(spec, EventType.WITNESS_BUILT, vertices=len(decision.drawing.vertex_pos))
        logger.debug(f"{name}: {inst.n} vertices -> {decision.label}")
        return decision

    def decide(self, inst: UpeInstance, engine: EngineSelector = AUTO, cross_check: bool = False) -> Decision:
        """
        Decide an instance with the named engine, or with the first
        applicable one under ``auto``.

        Under ``auto`` an engine whose precondition turns out to fail (for
        example a non-planar graph with one source and one sink) is skipped.

        Raises:
            NoApplicableEngineError: unknown engine name, or nothing applies
            EngineDisagreementError: with ``cross_check``, two engines differ
        """
        if engine != AUTO:
            decision = self.run(engine, inst)
        else:
            decision = None
            for name in self.applicable(inst):
                try:
                    decision = self.run(name, inst)
                    break
                except (PreconditionError, CapExceededError) as exc:
                    self._emit(self.engines[name], EventType.ENGINE_SKIPPED, reason=str(exc))
                    logger.debug(f"{name} skipped: {exc}")
            if decision is None:
                raise NoApplicableEngineError(
                    "no applicable engine",
                    reason=EngineReason.NO_APPLICABLE_ENGINE,
                    n=inst.n,
                )
        if cross_check:
            self.cross_check(inst, decision)
        return decision

    def cross_check(self, inst: UpeInstance, decision: Decision) -> Dict[str, bool]:
        """
        Run every other applicable engine and compare answers.

        Raises:
            EngineDisagreementError: some engine answers differently
        """
        answers = {decision.engine: decision.answer}
        for name in self.applicable(inst):
            if name in answers:
                continue
            try:
                answers[name] = self.run(name, inst).answer
            except (PreconditionError, CapExceededError):
                continue
        spec = self.engines.get(decision.engine)
        if spec is not None:
            self._emit(spec, EventType.CROSS_CHECKED, answers=dict(answers))
        if len(set(answers.values())) > 1:
            logger.warning(f"engines disagree on a {inst.n}-vertex instance: {answers}")
            raise EngineDisagreementError(
                f"engines disagree: {answers}",
                engine_name=decision.engine,
                reason=EngineReason.DISAGREEMENT,
                answers=answers,
            )
        return answers


def decide(
    inst: UpeInstance,
    engine: EngineSelector = AUTO,
    cross_check: bool = False,
    oracle: Optional[OracleConfig] = None,
    dp: Optional[DpConfig] = None,
    st: Optional[StConfig] = None,
) -> Decision:
    """
    Decide whether the partial drawing extends to an upward planar drawing.

    Args:
        inst: The instance
        engine: ``auto`` or an engine name
        cross_check: Also run every other applicable engine and compare
        oracle: Oracle settings; defaults honour UPEX_ORACLE_CAP
        dp: Path and cycle table settings
        st: st-graph engine settings

    Example:
        >>> decision = decide(inst, engine="st-upe")
        >>> decision.answer
        True
    """
    return Dispatcher(oracle, dp, st).decide(inst, engine, cross_check)
