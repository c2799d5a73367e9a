"""
Utility functions for configuration, logging setup and error/tracing integration.
"""
import os
import sys
import logging
import inspect
from typing import Optional, Dict, Any, Type, Literal
from functools import wraps

from dotenv import load_dotenv
from pydantic import BaseModel, Field
from pythonjsonlogger import jsonlogger

TEXT_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"
JSON_FORMAT = "%(asctime)s %(levelname)s %(name)s %(message)s"


def _env_flag(name: str, default: bool = False) -> bool:
    return os.getenv(name, str(default)).strip().lower() in ("1", "true", "yes", "on")


class BinformConfig(BaseModel):
    """Configuration for logging, tracing, caching and scans."""

    service_name: str = "binform"
    environment: str = "development"
    log_level: str = "WARNING"
    log_format: Literal["text", "json"] = "text"
    cache_dir: Optional[str] = None
    debug_checks: bool = False
    enable_tracing: bool = False
    console_spans: bool = False
    jobs: int = Field(default=1, ge=1)


def load_config(env_file: Optional[str] = None, **overrides: Any) -> BinformConfig:
    """
    Build a BinformConfig from the environment.

    Args:
        env_file: Optional .env file; the default lookup of python-dotenv is used otherwise
        **overrides: Values that win over the environment (CLI flags)

    Returns:
        The validated configuration
    """
    if env_file:
        load_dotenv(env_file)
    else:
        load_dotenv()

    values: Dict[str, Any] = {
        "environment": os.getenv("BINFORM_ENVIRONMENT", "development"),
        "log_level": os.getenv("BINFORM_LOG_LEVEL", "WARNING").upper(),
        "log_format": os.getenv("BINFORM_LOG_FORMAT", "text").lower(),
        "cache_dir": os.getenv("BINFORM_CACHE_DIR") or None,
        "debug_checks": _env_flag("BINFORM_DEBUG_CHECKS"),
        "enable_tracing": _env_flag("BINFORM_TRACING"),
        "console_spans": _env_flag("BINFORM_CONSOLE_SPANS"),
        "jobs": int(os.getenv("BINFORM_JOBS", "1")),
    }
    values.update({key: value for key, value in overrides.items() if value is not None})
    return BinformConfig(**values)


def debug_checks_enabled() -> bool:
    """Whether the expensive cross-checks (iterated D*, cofactor vs Bareiss) are on."""
    return _env_flag("BINFORM_DEBUG_CHECKS")


def setup_logging(config: Optional[BinformConfig] = None) -> logging.Logger:
    """
    Configure the root handler on stderr, text or JSON.

    Args:
        config: Configuration to apply (loaded from the environment when omitted)

    Returns:
        The service logger
    """
    config = config or load_config()

    handler = logging.StreamHandler(sys.stderr)
    if config.log_format == "json":
        handler.setFormatter(jsonlogger.JsonFormatter(JSON_FORMAT))
    else:
        handler.setFormatter(logging.Formatter(TEXT_FORMAT))

    root = logging.getLogger()
    for existing in list(root.handlers):
        root.removeHandler(existing)
    root.addHandler(handler)
    root.setLevel(config.log_level)

    logger = logging.getLogger(config.service_name)
    logger.setLevel(config.log_level)

    if config.enable_tracing:
        from .tracing import setup_tracing
        setup_tracing(
            service_name=config.service_name,
            environment=config.environment,
            console_spans=config.console_spans
        )

    return logger


def handle_errors(
    error_class: Type[Exception] = Exception,
    log_level: int = logging.ERROR
):
    """
    Decorator converting unexpected exceptions to BinformError at a boundary.

    Args:
        error_class: Exceptions of this class are re-raised untouched
        log_level: Log level for unexpected errors
    """
    def decorator(func):
        @wraps(func)
        def wrapper(*args, **kwargs):
            # Import here to avoid circular dependency
            from error_handling import BinformError, log_error

            try:
                return func(*args, **kwargs)
            except error_class:
                raise
            except Exception as e:
                logger = logging.getLogger("binform.error_handling")
                log_error(e, logger, level=log_level, extra={"function": func.__name__})
                raise BinformError.from_exception(e) from e

        return wrapper
    return decorator


def trace_function(
    name: Optional[str] = None,
    attributes: Optional[Dict[str, Any]] = None,
    record_exception: bool = True
):
    """
    Decorator to trace function execution with OpenTelemetry.

    Args:
        name: Custom span name (defaults to function name)
        attributes: Additional attributes to add to the span
        record_exception: Whether to record exceptions in the span
    """
    from .tracing import get_tracer
    from opentelemetry.trace import Status, StatusCode

    def decorator(func):
        span_name = name or f"{func.__module__}.{func.__name__}"

        @wraps(func)
        async def async_wrapper(*args, **kwargs):
            tracer = get_tracer(func.__module__)
            with tracer.start_as_current_span(
                span_name,
                attributes=attributes or {}
            ) as span:
                try:
                    return await func(*args, **kwargs)
                except Exception as e:
                    if record_exception:
                        span.record_exception(e)
                        span.set_status(Status(StatusCode.ERROR, str(e)))
                    raise

        @wraps(func)
        def sync_wrapper(*args, **kwargs):
            tracer = get_tracer(func.__module__)
            with tracer.start_as_current_span(
                span_name,
                attributes=attributes or {}
            ) as span:
                try:
                    return func(*args, **kwargs)
                except Exception as e:
                    if record_exception:
                        span.record_exception(e)
                        span.set_status(Status(StatusCode.ERROR, str(e)))
                    raise

        if inspect.iscoroutinefunction(func):
            return async_wrapper
        return sync_wrapper

    return decorator


__all__ = [
    'BinformConfig',
    'load_config',
    'debug_checks_enabled',
    'setup_logging',
    'handle_errors',
    'trace_function',
]
