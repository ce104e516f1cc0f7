"""
Integration tests for dispatch events and logging across engines
"""

import io
import json
import logging

import pytest

from upex import (
    Dispatcher,
    EventType,
    GeneratorConfig,
    OracleConfig,
    configure_logging,
    generate_instance,
    set_error_handler,
)

pytestmark = pytest.mark.integration


@pytest.fixture
def dispatcher():
    return Dispatcher(oracle=OracleConfig(max_vertices=7))


class TestEventFlow:
    """Events from whole decisions"""

    @pytest.mark.parametrize("kind", ["st", "path", "cycle"])
    def test_every_kind(self, dispatcher, kind):
        """Generated instances go to the first applicable engine and report a witness or a structure"""
        events = []
        dispatcher.events.add_handler("*", events.append)
        inst = generate_instance(GeneratorConfig(kind=kind, n=8, seed=1))
        decision = dispatcher.decide(inst)
        assert decision.engine == dispatcher.applicable(inst)[0]
        assert decision.answer
        assert events[0].event_type == EventType.ENGINE_SELECTED
        assert events[1].event_type == EventType.DECISION_MADE
        assert {e.engine_name for e in events} == {decision.engine}
        assert (decision.drawing is not None) == (events[-1].event_type == EventType.WITNESS_BUILT)
        assert decision.drawing is not None or decision.structure is not None

    def test_events_serialize(self, dispatcher):
        """Event dictionaries are plain JSON"""
        events = []
        dispatcher.events.add_handler("*", events.append)
        decision = dispatcher.decide(generate_instance(GeneratorConfig(kind="cycle", n=5, seed=2)), cross_check=True)
        docs = [e.to_dict() for e in events]
        json.dumps(docs)
        assert docs[-1]["event_type"] == "cross_checked"
        answers = docs[-1]["metadata"]["answers"]
        assert decision.engine in answers
        assert "oracle" in answers

    def test_failing_handler_is_contained(self, dispatcher):
        """A broken listener neither stops the decision nor the other listeners"""
        seen = []
        reported = []

        def broken(event):
            raise RuntimeError("listener broke")

        dispatcher.events.add_handler(EventType.DECISION_MADE, broken)
        dispatcher.events.add_handler(EventType.DECISION_MADE, seen.append)
        set_error_handler(lambda name, exc, ctx: reported.append((name, str(exc))))
        try:
            decision = dispatcher.decide(generate_instance(GeneratorConfig(kind="st", n=6, seed=0)))
        finally:
            set_error_handler(None)
        assert decision.answer
        assert len(seen) == 1
        assert reported == [("upex.events.dispatcher", "listener broke")]


class TestLoggingFlow:
    """Log records from whole decisions"""

    def test_debug_trail(self, dispatcher):
        """Generator, engine and dispatcher all log under the library root"""
        stream = io.StringIO()
        configure_logging(logging.DEBUG, handler=logging.StreamHandler(stream), format_string="%(name)s: %(message)s")
        inst = generate_instance(GeneratorConfig(kind="path", n=6, seed=0))
        decision = dispatcher.decide(inst)
        lines = stream.getvalue().splitlines()
        assert any(line.startswith("upex.generators: generated path instance: 6 vertices") for line in lines)
        assert lines[-1] == f"upex.engines: {decision.engine}: 6 vertices -> yes"
