# app/core/exception.py

import logging
from typing import Optional

logger = logging.getLogger("fasthaar.exceptions")

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_IO = 2
EXIT_INTERNAL = 3


# ------------------------------------------------------------------------------
# Base
# ------------------------------------------------------------------------------

class FastHaarError(Exception):
    """
    Root of every error raised on purpose by the engine.
    Not a ValueError, so pydantic validators re-raise it unchanged.
    """

    code: str = "FASTHAAR_ERROR"
    exit_code: int = EXIT_DOMAIN

    def __init__(self, message: str):
        self.message = message
        super().__init__(message)


# ------------------------------------------------------------------------------
# Domain errors (exit 1)
# ------------------------------------------------------------------------------

class DomainError(FastHaarError):
    exit_code = EXIT_DOMAIN


class OddLength(DomainError):
    code = "ODD_LENGTH"


class EmptySignal(DomainError):
    code = "EMPTY_SIGNAL"


class LengthMismatch(DomainError):
    code = "LENGTH_MISMATCH"


class NonFiniteValue(DomainError):
    code = "NON_FINITE_VALUE"


class InsufficientLength(DomainError):
    code = "INSUFFICIENT_LENGTH"


class InvalidLevels(DomainError):
    code = "INVALID_LEVELS"


class MalformedTree(DomainError):
    code = "MALFORMED_TREE"


class OddDimension(DomainError):
    code = "ODD_DIMENSION"


class DimensionMismatch(DomainError):
    code = "DIMENSION_MISMATCH"


class EmptySeries(DomainError):
    code = "EMPTY_SERIES"


class InvalidRepeats(DomainError):
    code = "INVALID_REPEATS"


# ------------------------------------------------------------------------------
# I/O and parse errors (exit 2)
# ------------------------------------------------------------------------------

class IOFailure(FastHaarError):
    exit_code = EXIT_IO


class FileNotFound(IOFailure):
    code = "FILE_NOT_FOUND"


class ParseError(IOFailure):
    code = "PARSE_ERROR"

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class UnsupportedFormat(IOFailure):
    code = "UNSUPPORTED_FORMAT"


class MalformedHeader(IOFailure):
    code = "MALFORMED_HEADER"


class TruncatedData(IOFailure):
    code = "TRUNCATED_DATA"


class InvalidPixel(IOFailure):
    code = "INVALID_PIXEL"


class IoError(IOFailure):
    code = "IO_ERROR"


# ------------------------------------------------------------------------------
# Reporting
# ------------------------------------------------------------------------------

def format_error(exc: BaseException) -> str:
    """One stable line for stderr: `error[CODE]: message`."""
    if isinstance(exc, FastHaarError):
        message = " ".join(exc.message.split())
        return f"error[{exc.code}]: {message}"
    message = " ".join(str(exc).split())
    return f"error[INTERNAL_ERROR]: {type(exc).__name__}: {message}"


def handle_exception(exc: BaseException, *, command: str = "") -> int:
    """
    Logs the failure and maps it to the documented exit code.
    """
    if isinstance(exc, FastHaarError):
        log_level = logging.WARNING if exc.exit_code == EXIT_DOMAIN else logging.ERROR
        logger.log(
            log_level,
            "Command failed",
            extra={"command": command, "code": exc.code, "detail": exc.message},
        )
        return exc.exit_code

    logger.exception("Unhandled exception", extra={"command": command})
    return EXIT_INTERNAL
