"""
Unit tests for centralized logging configuration
"""

import io
import logging
from contextlib import contextmanager

import pytest

from upex import CapExceededError, DpConfig, UpeInstance, UpwardEmbedding, solve_path_fue
from upex.events import EngineType, EventEmitter, EventType, SolverEvent
from upex.logging import (
    configure_logging,
    disable_logging,
    get_logger,
    is_logging_enabled,
    log_error,
    set_error_handler,
)


@contextmanager
def capture_handlers_detached():
    """Detach handlers the test runner attached to the package logger"""
    root = logging.getLogger("upex")
    foreign = [h for h in root.handlers if type(h).__module__.startswith("_pytest")]
    for h in foreign:
        root.removeHandler(h)
    try:
        yield root
    finally:
        for h in foreign:
            root.addHandler(h)


@pytest.fixture
def stream():
    """Route upex logging into a buffer at DEBUG"""
    buffer = io.StringIO()
    configure_logging(logging.DEBUG, handler=logging.StreamHandler(buffer), format_string="%(levelname)s %(name)s: %(message)s")
    return buffer


class TestLoggingConfiguration:
    """Test logging configuration"""

    def test_default_state_is_disabled(self):
        """Test that logging is disabled by default"""
        with capture_handlers_detached() as root:
            assert not is_logging_enabled()
            assert not root.propagate
            assert all(isinstance(h, logging.NullHandler) for h in root.handlers)

    def test_configure_logging_enables_logging(self):
        """Test that configure_logging enables logging"""
        configure_logging(logging.DEBUG)
        assert is_logging_enabled()

    def test_disable_logging_resets_state(self):
        """Test that disable_logging resets to default state"""
        configure_logging(logging.INFO)
        set_error_handler(lambda name, exc, ctx: None)
        disable_logging()
        assert not is_logging_enabled()

    def test_get_logger_is_standard(self):
        """Test module loggers are plain loggers under the package root"""
        assert get_logger("upex.stgraph.fixed") is logging.getLogger("upex.stgraph.fixed")

    def test_custom_error_handler(self):
        """Test setting custom error handler"""
        captured = []
        set_error_handler(lambda name, exc, ctx: captured.append((name, exc, ctx)))
        assert is_logging_enabled()

        log_error("upex.test", ValueError("test error"), key="value")

        assert len(captured) == 1
        name, exc, ctx = captured[0]
        assert name == "upex.test"
        assert isinstance(exc, ValueError)
        assert ctx == {"key": "value"}

    def test_custom_error_handler_none_disables(self):
        """Test that setting error handler to None disables custom handling"""
        captured = []
        set_error_handler(captured.append)
        set_error_handler(None)
        with capture_handlers_detached():
            assert not is_logging_enabled()

        log_error("upex.test", ValueError("test error"))
        assert captured == []

    def test_log_error_with_default_logging(self, stream):
        """Test log_error falls back to standard logging when no custom handler"""
        log_error("upex.test", RuntimeError("test error"), vertex=3)
        assert "RuntimeError: test error" in stream.getvalue()

    def test_configure_logging_with_custom_format(self, stream):
        """Test configure_logging with custom format string"""
        logging.getLogger("upex").info("Test message")
        assert "INFO upex: Test message" in stream.getvalue()

    def test_error_handler_exception_handling(self, stream):
        """Test that a failing error handler doesn't break the caller"""
        def failing_handler(name, exc, ctx):
            raise RuntimeError("handler failed")

        set_error_handler(failing_handler)
        log_error("upex.test", ValueError("test error"))
        assert "Error handler failed" in stream.getvalue()


class TestLoggingIntegration:
    """Test logging from engines and the event system"""

    def test_engine_debug_output(self, stream, zigzag_embedding, zigzag_drawing_pins):
        """Test engines report their work at DEBUG"""
        inst = UpeInstance.build(4, [(0, 1), (2, 1), (2, 3)], positions=zigzag_drawing_pins, embedding=zigzag_embedding())
        solve_path_fue(inst)
        assert "DEBUG upex.pathcycle.solvers: path-fue: 4 vertices" in stream.getvalue()

    def test_cap_refusal_warns(self, stream):
        """Test cap refusals are logged at WARNING"""
        emb = UpwardEmbedding.from_lists(3, {0: [1], 1: [2]}, {1: [0], 2: [1]})
        inst = UpeInstance.build(3, [(0, 1), (1, 2)], embedding=emb)
        with pytest.raises(CapExceededError):
            solve_path_fue(inst, DpConfig(max_n=2))
        assert "WARNING upex.pathcycle.solvers: path-fue: refusing 3 vertices, cap is 2" in stream.getvalue()

    def test_silent_by_default(self, capsys, zigzag_embedding):
        """Test nothing reaches the terminal without configuration"""
        solve_path_fue(UpeInstance.build(4, [(0, 1), (2, 1), (2, 3)], embedding=zigzag_embedding()))
        captured = capsys.readouterr()
        assert captured.out == ""
        assert captured.err == ""

    def test_event_handler_errors_logged_with_custom_handler(self):
        """Test that event handler errors are captured by custom error handler"""
        captured = []
        set_error_handler(lambda name, exc, ctx: captured.append((name, exc)))
        emitter = EventEmitter("dispatcher")

        @emitter.on("*")
        def failing_handler(event):
            raise ValueError("handler intentionally failed")

        emitter.emit(SolverEvent(EngineType.OLP, EventType.ENGINE_SELECTED, "olp"))

        assert len(captured) == 1
        assert captured[0][0] == "upex.events.dispatcher"
        assert isinstance(captured[0][1], ValueError)
