"""
Exact grid arithmetic: entry sums, margins and the squared-matrix objective.

The objective s(A^2) depends only on the margins, since
s(A^2) = sum_k R_k(A) * C_k(A).
"""
from typing import List, Union

import numpy as np

from core.arithmetic import checked
from core.exceptions import (
    DuplicateEntryError, IndexOutOfRangeError, NotPermutationError, OutOfRangeError,
    ValidationError,
)
from models.schemas import Grid, Margins, RealMatrix

Matrix = Union[Grid, RealMatrix]


class GridService:
    """Service for exact grid operations."""

    @staticmethod
    def validate_grid(grid: Grid) -> None:
        """Raise unless the entries are exactly 1..n^2."""
        size = grid.n * grid.n
        seen = bytearray(size + 1)
        for value in grid.entries:
            if value < 1 or value > size:
                raise OutOfRangeError(value, grid.n)
            if seen[value]:
                raise DuplicateEntryError(value)
            seen[value] = 1

    def is_permutation(self, grid: Grid) -> bool:
        """True iff grid holds each of 1..n^2 once."""
        try:
            self.validate_grid(grid)
        except ValidationError:
            return False
        return True

    def require_permutation(self, grid: Grid) -> None:
        """Like validate_grid, but reports a single NotPermutation error."""
        try:
            self.validate_grid(grid)
        except ValidationError as e:
            raise NotPermutationError(f"Not a permutation grid: {e.message}", e.details)

    @staticmethod
    def entry_sum(matrix: Matrix) -> Union[int, float]:
        """s(A)."""
        if isinstance(matrix, RealMatrix):
            return float(np.sum(matrix.to_array()))
        return checked(sum(matrix.entries), "entry sum")

    @staticmethod
    def square_entry_sum(matrix: Matrix) -> Union[int, float]:
        """q(A)."""
        if isinstance(matrix, RealMatrix):
            array = matrix.to_array()
            return float(np.sum(array * array))
        return checked(sum(v * v for v in matrix.entries), "square entry sum")

    @staticmethod
    def margins(grid: Grid) -> Margins:
        """Row sums and column sums."""
        n = grid.n
        entries = grid.entries
        rows = tuple(checked(sum(entries[i * n:(i + 1) * n]), "row sum") for i in range(n))
        cols = tuple(checked(sum(entries[j::n]), "column sum") for j in range(n))
        return Margins(rows=rows, cols=cols)

    def objective(self, grid: Grid) -> int:
        """s(A^2) through the margin identity."""
        m = self.margins(grid)
        return checked(sum(r * c for r, c in zip(m.rows, m.cols)), "objective")

    @staticmethod
    def matrix_square(grid: Grid) -> List[List[int]]:
        """A @ A with exact integer entries."""
        rows = grid.rows
        n = grid.n
        cols = [[rows[k][j] for k in range(n)] for j in range(n)]
        return [
            [checked(sum(a * b for a, b in zip(rows[i], cols[j])), "matrix square entry") for j in range(n)]
            for i in range(n)
        ]

    @staticmethod
    def transpose(grid: Grid) -> Grid:
        """A^T."""
        n = grid.n
        return Grid(n=n, entries=tuple(grid.entries[j * n + i] for i in range(n) for j in range(n)))

    @staticmethod
    def swapped(grid: Grid, pos1: int, pos2: int) -> Grid:
        """Copy of grid with the values at two row-major cells exchanged."""
        size = grid.n * grid.n
        for pos in (pos1, pos2):
            if not 0 <= pos < size:
                raise IndexOutOfRangeError(f"Cell index {pos} outside 0..{size - 1}", {"pos": pos})
        entries = list(grid.entries)
        entries[pos1], entries[pos2] = entries[pos2], entries[pos1]
        return Grid(n=grid.n, entries=tuple(entries))


# Global service instance
grid_service = GridService()
