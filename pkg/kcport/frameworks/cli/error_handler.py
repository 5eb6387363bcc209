"""Mapping of exceptions to process exit codes and stderr messages."""

import sys
from typing import TextIO

import structlog
from pydantic import ValidationError

logger = structlog.get_logger(__name__)

EXIT_SUCCESS = 0
EXIT_VALIDATION_ERROR = 1
EXIT_RUNTIME_ERROR = 2


class UsageError(ValueError):
    """Command line does not parse."""

    def __init__(self, message: str, usage: str) -> None:
        """Initialize usage error.

        Args:
            message: What was wrong with the arguments.
            usage: Usage text of the offending parser.
        """
        super().__init__(message)
        self.usage = usage


def describe(exc: BaseException) -> str:
    """One-line description of an error for stderr."""
    if isinstance(exc, ValidationError):
        return "; ".join(
            f"{'.'.join(str(part) for part in error['loc']) or 'input'}: {error['msg']}"
            for error in exc.errors()
        )
    if isinstance(exc, FileNotFoundError) and exc.filename:
        return f"input file not found: {exc.filename}"
    return str(exc) or type(exc).__name__


def handle_error(exc: BaseException, stream: TextIO | None = None) -> int:
    """Report an exception on stderr and choose the exit code.

    Validation failures (the ValueError family, usage errors and missing
    files) exit with 1; everything else is a runtime error and exits with 2.

    Args:
        exc: Exception raised by the run.
        stream: Destination of the message, stderr by default.

    Returns:
        Process exit code.
    """
    stream = stream or sys.stderr
    if isinstance(exc, UsageError):
        stream.write(exc.usage)
        stream.write(f"kcport: error: {exc}\n")
        return EXIT_VALIDATION_ERROR
    if isinstance(exc, ValueError | FileNotFoundError):
        stream.write(f"kcport: error: {describe(exc)}\n")
        return EXIT_VALIDATION_ERROR
    logger.error("run_failed", error_type=type(exc).__name__, exc_info=exc)
    stream.write(f"kcport: runtime error: {describe(exc)}\n")
    return EXIT_RUNTIME_ERROR
