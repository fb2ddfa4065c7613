"""
Exhaustive maximum of s(A^2) over all arrangements of 1..n^2, for n <= 3.
"""
from itertools import permutations
from typing import Iterable, List, Optional, Tuple

from core.config import settings
from core.exceptions import TooLargeError, ValidationError
from core.logging import app_logger
from core.workers import process_pool
from models.schemas import Grid, OracleResult

PartialMax = Tuple[int, Optional[Tuple[int, ...]], int]


def _scan(n: int, first_values: Iterable[int]) -> PartialMax:
    """Enumerate every grid whose first cell is in first_values, lexicographically."""
    size = n * n
    best, witness, count = -1, None, 0
    row_slices = [slice(i * n, (i + 1) * n) for i in range(n)]
    col_slices = [slice(j, size, n) for j in range(n)]
    for first in sorted(first_values):
        rest = [v for v in range(1, size + 1) if v != first]
        for tail in permutations(rest):
            entries = (first,) + tail
            value = sum(sum(entries[r]) * sum(entries[c]) for r, c in zip(row_slices, col_slices))
            if value > best:
                best, witness, count = value, entries, 1
            elif value == best:
                count += 1
    return best, witness, count


def _merge(parts: Iterable[PartialMax]) -> PartialMax:
    """max + count; the witness is the smallest grid among the maxima."""
    best, witness, count = -1, None, 0
    for value, entries, hits in parts:
        if value > best:
            best, witness, count = value, entries, hits
        elif value == best:
            count += hits
            witness = min(witness, entries)
    return best, witness, count


class OracleService:
    """Service for the exhaustive oracle."""

    @staticmethod
    def maximizers(n: int) -> List[Grid]:
        """Every maximizing grid, in lexicographic order (serial scan)."""
        if n < 1:
            raise ValidationError(f"n must be positive, got {n}", {"n": n})
        if n > settings.oracle_max_n:
            raise TooLargeError(n, settings.oracle_max_n)
        size = n * n
        best = -1
        found: List[Tuple[int, ...]] = []
        for entries in permutations(range(1, size + 1)):
            value = sum(sum(entries[i * n:(i + 1) * n]) * sum(entries[i::n]) for i in range(n))
            if value > best:
                best, found = value, [entries]
            elif value == best:
                found.append(entries)
        return [Grid(n=n, entries=entries) for entries in found]

    @staticmethod
    def exhaustive_pn(n: int, workers: Optional[int] = None) -> OracleResult:
        """p_n by brute force, with one maximizer and the number of maximizers."""
        if n < 1:
            raise ValidationError(f"n must be positive, got {n}", {"n": n})
        if n > settings.oracle_max_n:
            raise TooLargeError(n, settings.oracle_max_n)
        size = n * n
        workers = max(1, min(workers or settings.worker_count, size))

        app_logger.info(f"Oracle n={n}: enumerating {size}! grids on {workers} worker(s)")
        if workers == 1:
            best, witness, count = _scan(n, range(1, size + 1))
        else:
            # partition by value of the first cell
            groups = [list(range(1 + w, size + 1, workers)) for w in range(workers)]
            with process_pool(workers) as pool:
                best, witness, count = _merge(pool.map(_scan, [n] * workers, groups))

        return OracleResult(n=n, value=best, witness=Grid(n=n, entries=witness), maximizer_count=count)


# Global service instance
oracle_service = OracleService()
