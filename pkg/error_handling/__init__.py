"""
Error handling module for the binary-forms engine.

This module provides a structured way to raise, log and report errors across the
exact_poly, forms, catalog and appell packages and the command-line front end.
"""
from enum import Enum
from typing import Optional, Dict, Any, Union, List
import logging

# Import all from submodules to make them available at the package level
from .tracing import *
from .utils import *

# Re-export all error-related classes and functions
__all__ = [
    # Error codes and base classes
    'ErrorCode',
    'BinformError',

    # Common error types
    'DomainError',
    'MissingBindingError',
    'ShapeError',
    'ContextError',
    'RangeError',
    'PreconditionError',
    'ExpressionSyntaxError',
    'UnknownVariableError',
    'IndexOutOfRangeError',
    'InexactDivisionError',
    'UsageError',

    # Utility functions
    'log_error',

    # Tracing
    'setup_tracing',
    'get_tracer',

    # Utils
    'BinformConfig',
    'load_config',
    'debug_checks_enabled',
    'setup_logging',
    'handle_errors',
    'trace_function',
]

# Exit code reported by the CLI for every BinformError.
USAGE_EXIT_CODE = 2


class ErrorCode(str, Enum):
    """Standard error codes for the engine."""
    # Arithmetic errors
    DOMAIN_ERROR = "domain_error"
    MISSING_BINDING = "missing_binding"
    SHAPE_ERROR = "shape_error"
    INTERNAL_ERROR = "internal_error"

    # Invariant-theory errors
    CONTEXT_ERROR = "context_error"
    RANGE_ERROR = "range_error"
    PRECONDITION_ERROR = "precondition_error"

    # Expression format errors
    SYNTAX_ERROR = "syntax_error"
    UNKNOWN_VARIABLE = "unknown_variable"
    INDEX_OUT_OF_RANGE = "index_out_of_range"

    # Command-line errors
    USAGE_ERROR = "usage_error"

    UNKNOWN_ERROR = "unknown_error"


class BinformError(Exception):
    """Base exception class for all engine errors."""

    def __init__(
        self,
        code: Union[ErrorCode, str],
        message: str,
        details: Optional[Dict[str, Any]] = None,
        cause: Optional[Exception] = None,
        exit_code: int = USAGE_EXIT_CODE
    ):
        self.code = ErrorCode(code) if isinstance(code, str) else code
        self.message = message
        self.details = details or {}
        self.cause = cause
        self.exit_code = exit_code
        super().__init__(message)

    def to_dict(self) -> Dict[str, Any]:
        """Convert the error to a dictionary for JSON serialization."""
        return {
            "code": self.code.value,
            "message": self.message,
            "details": self.details,
        }

    @classmethod
    def from_exception(cls, exc: Exception) -> 'BinformError':
        """Create a BinformError from a generic exception."""
        if isinstance(exc, BinformError):
            return exc
        return cls(
            code=ErrorCode.UNKNOWN_ERROR,
            message=str(exc) or "An unknown error occurred",
            details={"exception_type": exc.__class__.__name__},
            cause=exc
        )


# Common error types for easy reuse
class DomainError(BinformError):
    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(code=ErrorCode.DOMAIN_ERROR, message=message, details=details)


class MissingBindingError(BinformError):
    def __init__(self, variables: List[str]):
        self.variables = list(variables)
        super().__init__(
            code=ErrorCode.MISSING_BINDING,
            message=f"no binding for variable(s): {', '.join(self.variables)}",
            details={"variables": self.variables}
        )


class ShapeError(BinformError):
    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(code=ErrorCode.SHAPE_ERROR, message=message, details=details)


class ContextError(BinformError):
    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(code=ErrorCode.CONTEXT_ERROR, message=message, details=details)


class RangeError(BinformError):
    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(code=ErrorCode.RANGE_ERROR, message=message, details=details)


class PreconditionError(BinformError):
    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(code=ErrorCode.PRECONDITION_ERROR, message=message, details=details)


class ExpressionSyntaxError(BinformError):
    def __init__(self, message: str, line: int, column: int):
        self.line = line
        self.column = column
        super().__init__(
            code=ErrorCode.SYNTAX_ERROR,
            message=f"{message} at line {line}, column {column}",
            details={"line": line, "column": column}
        )


class UnknownVariableError(BinformError):
    def __init__(self, name: str, line: int, column: int, hint: str = ""):
        self.name = name
        self.line = line
        self.column = column
        message = f"unknown variable '{name}' at line {line}, column {column}"
        if hint:
            message = f"{message} ({hint})"
        super().__init__(
            code=ErrorCode.UNKNOWN_VARIABLE,
            message=message,
            details={"name": name, "line": line, "column": column}
        )


class IndexOutOfRangeError(BinformError):
    def __init__(self, name: str, index: int, max_index: int):
        super().__init__(
            code=ErrorCode.INDEX_OUT_OF_RANGE,
            message=f"index {index} of '{name}' is outside the declared range 0..{max_index}",
            details={"name": name, "index": index, "max_index": max_index}
        )


class InexactDivisionError(BinformError):
    """A division that must be exact left a remainder. Always a bug."""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(code=ErrorCode.INTERNAL_ERROR, message=message, details=details)


class UsageError(BinformError):
    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(code=ErrorCode.USAGE_ERROR, message=message, details=details)


def log_error(
    error: Exception,
    logger: logging.Logger,
    level: int = logging.ERROR,
    extra: Optional[Dict[str, Any]] = None
) -> None:
    """
    Helper function to log errors with structured context.

    Args:
        error: The exception to log
        logger: Logger instance to use
        level: Log level (default: ERROR)
        extra: Additional context to include in the log
    """
    extra = dict(extra or {})

    if isinstance(error, BinformError):
        extra.update({
            "error_code": error.code.value,
            "exit_code": error.exit_code,
            **{f"detail_{key}": value for key, value in error.details.items()}
        })
        if error.cause:
            extra["cause"] = str(error.cause)
    else:
        extra.update({
            "error_type": error.__class__.__name__,
            "error_message": str(error)
        })

    logger.log(level, str(error), extra=extra, exc_info=level >= logging.ERROR)
