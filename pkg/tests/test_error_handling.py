"""
Tests for the error hierarchy, configuration loading, logging setup and tracing decorators.
"""
import json
import logging
from unittest.mock import MagicMock, Mock, patch

import pytest
from pydantic import ValidationError

from error_handling import (
    BinformError,
    ErrorCode,
    ExpressionSyntaxError,
    InexactDivisionError,
    IndexOutOfRangeError,
    MissingBindingError,
    RangeError,
    UsageError,
    debug_checks_enabled,
    handle_errors,
    load_config,
    log_error,
    setup_logging,
    trace_function,
)


@pytest.fixture
def mock_tracer():
    tracer = MagicMock()
    span = MagicMock()
    tracer.start_as_current_span.return_value.__enter__ = Mock(return_value=span)
    tracer.start_as_current_span.return_value.__exit__ = Mock(return_value=False)
    return tracer, span


@pytest.fixture
def restore_root_logger():
    root = logging.getLogger()
    handlers, level = list(root.handlers), root.level
    yield
    root.handlers = handlers
    root.setLevel(level)


@pytest.mark.unit
class TestErrors:
    """BinformError and its subclasses."""

    def test_to_dict(self):
        error = RangeError("order too small", details={"min_order": 4})
        assert error.to_dict() == {
            "code": "range_error",
            "message": "order too small",
            "details": {"min_order": 4},
        }
        assert error.exit_code == 2

    def test_code_from_string(self):
        assert BinformError("usage_error", "bad flag").code is ErrorCode.USAGE_ERROR

    def test_from_exception_wraps(self):
        cause = ZeroDivisionError("division by zero")
        wrapped = BinformError.from_exception(cause)
        assert wrapped.code is ErrorCode.UNKNOWN_ERROR
        assert wrapped.details == {"exception_type": "ZeroDivisionError"}
        assert wrapped.cause is cause

    def test_from_exception_keeps_engine_errors(self):
        error = UsageError("nope")
        assert BinformError.from_exception(error) is error

    def test_missing_binding_lists_variables(self):
        error = MissingBindingError(["b0", "b1"])
        assert error.variables == ["b0", "b1"]
        assert "b0, b1" in error.message

    def test_syntax_error_position(self):
        error = ExpressionSyntaxError("unexpected token", 2, 7)
        assert (error.line, error.column) == (2, 7)
        assert error.message.endswith("at line 2, column 7")

    def test_index_out_of_range(self):
        error = IndexOutOfRangeError("a3", 3, 2)
        assert error.details == {"name": "a3", "index": 3, "max_index": 2}

    def test_inexact_division_is_internal(self):
        assert InexactDivisionError("remainder").code is ErrorCode.INTERNAL_ERROR

    def test_log_error_adds_context(self, caplog):
        logger = logging.getLogger("binform.test")
        with caplog.at_level(logging.WARNING, logger="binform.test"):
            log_error(RangeError("bad", details={"n": 3}), logger, level=logging.WARNING)
        record = caplog.records[-1]
        assert record.error_code == "range_error"
        assert record.detail_n == 3


@pytest.mark.unit
class TestHandleErrors:
    """The boundary decorator."""

    def test_engine_errors_pass_through(self):
        @handle_errors(error_class=BinformError)
        def fails():
            raise UsageError("bad")

        with pytest.raises(UsageError):
            fails()

    def test_unexpected_errors_are_wrapped(self):
        @handle_errors(error_class=BinformError)
        def fails():
            raise KeyError("boom")

        with pytest.raises(BinformError) as exc:
            fails()
        assert exc.value.code is ErrorCode.UNKNOWN_ERROR
        assert isinstance(exc.value.__cause__, KeyError)


@pytest.mark.unit
class TestConfig:
    """Environment loading with overrides."""

    def test_defaults(self, tmp_path):
        config = load_config(env_file=str(tmp_path / "missing.env"))
        assert config.log_level == "WARNING"
        assert config.log_format == "text"
        assert config.jobs == 1
        assert config.cache_dir is None
        assert not config.debug_checks

    def test_environment(self, monkeypatch, tmp_path):
        monkeypatch.setenv("BINFORM_LOG_LEVEL", "debug")
        monkeypatch.setenv("BINFORM_JOBS", "4")
        monkeypatch.setenv("BINFORM_CACHE_DIR", str(tmp_path))
        config = load_config()
        assert config.log_level == "DEBUG"
        assert config.jobs == 4
        assert config.cache_dir == str(tmp_path)

    def test_env_file(self, tmp_path):
        env_file = tmp_path / ".env"
        env_file.write_text("BINFORM_LOG_FORMAT=json\nBINFORM_DEBUG_CHECKS=true\n")
        config = load_config(env_file=str(env_file))
        assert config.log_format == "json"
        assert config.debug_checks
        assert debug_checks_enabled()

    def test_overrides_win(self, monkeypatch):
        monkeypatch.setenv("BINFORM_JOBS", "4")
        config = load_config(jobs=2, log_format=None)
        assert config.jobs == 2
        assert config.log_format == "text"

    def test_invalid_values(self):
        with pytest.raises(ValidationError):
            load_config(jobs=0)
        with pytest.raises(ValidationError):
            load_config(log_format="xml")


@pytest.mark.unit
class TestLogging:
    """Root handler configuration."""

    def test_json_lines_on_stderr(self, capsys, restore_root_logger):
        logger = setup_logging(load_config(log_format="json", log_level="INFO"))
        logging.getLogger("binform.appell").info("norm table ready")
        err = capsys.readouterr().err.strip().splitlines()[-1]
        payload = json.loads(err)
        assert payload["message"] == "norm table ready"
        assert payload["levelname"] == "INFO"
        assert logger.name == "binform"

    def test_text_handler_replaces_existing(self, restore_root_logger):
        setup_logging(load_config())
        setup_logging(load_config())
        assert len(logging.getLogger().handlers) == 1


@pytest.mark.unit
class TestTraceFunction:
    """Spans around traced calls."""

    def test_span_name(self, mock_tracer):
        tracer, _ = mock_tracer
        with patch("error_handling.tracing.get_tracer", return_value=tracer):
            @trace_function(name="catalog.build")
            def compute(n):
                return n * 2

            assert compute(3) == 6
        tracer.start_as_current_span.assert_called_once_with("catalog.build", attributes={})

    def test_exception_is_recorded(self, mock_tracer):
        tracer, span = mock_tracer
        with patch("error_handling.tracing.get_tracer", return_value=tracer):
            @trace_function()
            def compute():
                raise RangeError("empty order range 5..4")

            with pytest.raises(RangeError):
                compute()
        span.record_exception.assert_called_once()
        span.set_status.assert_called_once()

    def test_real_tracer_is_transparent(self):
        @trace_function(name="noop")
        def compute(value):
            return value

        assert compute("x") == "x"
