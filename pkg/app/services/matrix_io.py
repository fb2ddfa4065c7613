"""
Matrix interchange formats.

Text: first line "n", then n lines of n whitespace-separated integers.
JSON: {"n": <int>, "rows": [[...], ...]}.
"""
import json
from pathlib import Path
from typing import List, Union

from pydantic import ValidationError as PydanticValidationError

from core.exceptions import MatrixFormatError
from models.schemas import Grid, MatrixPayload, RealMatrix, RealMatrixPayload


def parse_text(text: str) -> Grid:
    """Parse the plain text matrix format."""
    lines = [line for line in text.strip().splitlines() if line.strip()]
    if not lines:
        raise MatrixFormatError("Empty matrix text")
    try:
        n = int(lines[0].strip())
        rows = [[int(tok) for tok in line.split()] for line in lines[1:]]
    except ValueError as e:
        raise MatrixFormatError(f"Non-integer token in matrix text: {e}")
    if n < 1 or len(rows) != n or any(len(row) != n for row in rows):
        raise MatrixFormatError(f"Matrix text does not contain {n} rows of {n} integers")
    return Grid.from_rows(rows)


def parse_json(text: str) -> Grid:
    """Parse the JSON matrix format."""
    try:
        payload = MatrixPayload.model_validate_json(text)
    except PydanticValidationError as e:
        raise MatrixFormatError(f"Invalid matrix JSON: {e.errors()[0]['msg']}")
    return Grid.from_rows(payload.rows)


def parse_matrix(text: str) -> Grid:
    """Parse either format, sniffing JSON by its leading brace."""
    if text.lstrip().startswith("{"):
        return parse_json(text)
    return parse_text(text)


def load_matrix(path: Union[str, Path]) -> Grid:
    """Read a matrix file ("-" is not special; callers handle stdin)."""
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise MatrixFormatError(f"Cannot read {path}: {e.strerror}")
    return parse_matrix(text)


def format_text(grid: Union[Grid, List[List[int]]]) -> str:
    """Render the plain text format (trailing newline included)."""
    rows = grid.rows if isinstance(grid, Grid) else grid
    lines = [str(len(rows))] + [" ".join(str(v) for v in row) for row in rows]
    return "\n".join(lines) + "\n"


def format_json(grid: Grid) -> str:
    """Render the JSON format."""
    return json.dumps({"n": grid.n, "rows": grid.rows})


def parse_real(text: str) -> RealMatrix:
    """Parse either format with real-valued entries."""
    if text.lstrip().startswith("{"):
        try:
            payload = RealMatrixPayload.model_validate_json(text)
        except PydanticValidationError as e:
            raise MatrixFormatError(f"Invalid real matrix JSON: {e.errors()[0]['msg']}")
        return RealMatrix.from_array(payload.rows)
    lines = [line for line in text.strip().splitlines() if line.strip()]
    try:
        rows = [[float(tok) for tok in line.split()] for line in lines[1:]]
        if not lines or int(lines[0]) != len(rows):
            raise ValueError("row count does not match header")
    except ValueError as e:
        raise MatrixFormatError(f"Invalid real matrix: {e}")
    if not rows or any(len(row) != len(rows) for row in rows):
        raise MatrixFormatError("Real matrix is not square")
    return RealMatrix.from_array(rows)


def load_real_matrix(path: Union[str, Path]) -> RealMatrix:
    """Read a real-valued matrix file."""
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise MatrixFormatError(f"Cannot read {path}: {e.strerror}")
    return parse_real(text)
