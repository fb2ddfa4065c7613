"""
Simplified exception handling.

Every error carries a stable machine code and a process exit code so the CLI
and the HTTP routes report failures the same way.
"""
from typing import Any, Dict, Optional

from fastapi.responses import JSONResponse


class MatpowException(Exception):
    """Base exception for the matpow toolkit."""

    code = "error"
    exit_code = 1

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        self.message = message
        self.details = details or {}
        super().__init__(self.message)


class UsageError(MatpowException):
    """Raised when command-line or request arguments are malformed."""
    code = "usage"
    exit_code = 2


class ValidationError(MatpowException):
    """Raised when input validation fails."""
    code = "validation"
    exit_code = 3


class DuplicateEntryError(ValidationError):
    """A value occurs more than once in a permutation grid."""
    code = "duplicate_entry"

    def __init__(self, value: int):
        self.value = value
        super().__init__(f"Duplicate entry {value}", {"value": value})


class OutOfRangeError(ValidationError):
    """A value lies outside 1..n^2."""
    code = "out_of_range"

    def __init__(self, value: int, n: int):
        self.value = value
        super().__init__(f"Entry {value} outside 1..{n * n}", {"value": value, "n": n})


class WrongLengthError(ValidationError):
    """Entry count does not match n^2."""
    code = "wrong_length"

    def __init__(self, n: int, length: int):
        super().__init__(f"Expected {n * n} entries for n={n}, got {length}", {"n": n, "length": length})


class NotPermutationError(ValidationError):
    """An operation requiring a permutation grid received something else."""
    code = "not_permutation"


class IndexOutOfRangeError(ValidationError):
    """A row/column/cell index lies outside the grid."""
    code = "index_out_of_range"


class MatrixFormatError(ValidationError):
    """Matrix text or JSON could not be parsed."""
    code = "matrix_format"


class ArithmeticOverflowError(MatpowException):
    """An exact quantity exceeded the configured ExactInt width."""
    code = "overflow"
    exit_code = 4


class TooLargeError(MatpowException):
    """Exhaustive enumeration refused for this n."""
    code = "too_large"
    exit_code = 5

    def __init__(self, n: int, limit: int):
        self.n = n
        super().__init__(f"Exhaustive search refused for n={n} (limit {limit})", {"n": n, "limit": limit})


class NonIntegralResultError(MatpowException):
    """A closed form that must be an integer was not; signals a formula bug."""
    code = "non_integral"
    exit_code = 1


_HTTP_STATUS = {2: 400, 3: 400, 4: 422, 5: 413}


def format_error_line(exc: MatpowException) -> str:
    """One-line machine-parsable error for the CLI."""
    message = " ".join(exc.message.split())
    return f"error {exc.code}: {message}"


def create_error_response(exc: MatpowException) -> JSONResponse:
    """Create a standardized JSON error response."""
    return JSONResponse(
        status_code=_HTTP_STATUS.get(exc.exit_code, 500),
        content={
            "error": exc.code,
            "message": exc.message,
            "details": exc.details,
        },
    )
