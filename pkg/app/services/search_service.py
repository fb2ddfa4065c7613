"""
Seeded multi-restart hill climbing over permutation grids.

A move exchanges the values of two cells. Swapping values at cells p1, p2
with d = v(p2) - v(p1) shifts R[row(p1)] and C[col(p1)] by +d and
R[row(p2)] and C[col(p2)] by -d, so the objective changes by

    d * (C[r1] - C[r2] + R[c1] - R[c2])
    + d^2 * ([r1 == c1] - [r1 == c2] - [r2 == c1] + [r2 == c2])

which is O(1) per move and covers shared rows and columns.
"""
from typing import Callable, List, Optional, Tuple

import numpy as np

from core.config import settings
from core.exceptions import ArithmeticOverflowError, IndexOutOfRangeError, ValidationError
from core.logging import app_logger
from core.workers import process_pool
from models.schemas import (
    ClimbConfig, ClimbOutcome, Grid, InitStrategy, Margins, MovePolicy, SearchResult,
)
from services.bounds_service import bounds_service
from services.construction_service import construction_service
from services.grid_service import grid_service

# all-pairs scan runs in int64
INT64_SAFE = 1 << 62

RestartRecord = Tuple[int, Tuple[int, ...], int, bool]


def restart_rng(seed: int, restart: int) -> np.random.Generator:
    """Independent stream for one restart, derived from (seed, restart)."""
    return np.random.default_rng(np.random.SeedSequence([seed, restart]))


class _PairTables:
    """Index tables for all n^2(n^2-1)/2 transpositions, in lexicographic order."""

    def __init__(self, n: int):
        size = n * n
        cells = np.arange(size)
        self.first, self.second = np.triu_indices(size, 1)
        cell_rows, cell_cols = cells // n, cells % n
        self.r1, self.r2 = cell_rows[self.first], cell_rows[self.second]
        self.c1, self.c2 = cell_cols[self.first], cell_cols[self.second]
        self.incidence = (
            (self.r1 == self.c1).astype(np.int64)
            - (self.r1 == self.c2)
            - (self.r2 == self.c1)
            + (self.r2 == self.c2)
        )


class SearchService:
    """Service for hill-climbing search."""

    @staticmethod
    def swap_delta(grid: Grid, margins: Margins, current: int, pos1: int, pos2: int) -> int:
        """Objective after swapping the values at row-major cells pos1 and pos2."""
        n = grid.n
        size = n * n
        for pos in (pos1, pos2):
            if not 0 <= pos < size:
                raise IndexOutOfRangeError(f"Cell index {pos} outside 0..{size - 1}", {"pos": pos})
        if pos1 == pos2:
            raise ValidationError("A transposition needs two distinct cells", {"pos": pos1})
        r1, c1 = divmod(pos1, n)
        r2, c2 = divmod(pos2, n)
        d = grid.entries[pos2] - grid.entries[pos1]
        rows, cols = margins.rows, margins.cols
        linear = cols[r1] - cols[r2] + rows[c1] - rows[c2]
        incidence = (r1 == c1) - (r1 == c2) - (r2 == c1) + (r2 == c2)
        return current + d * linear + d * d * incidence

    @staticmethod
    def _check_range(n: int) -> None:
        if bounds_service.ub_pn(n) >= INT64_SAFE:
            raise ArithmeticOverflowError(f"Search objective for n={n} exceeds the int64 scan range", {"n": n})

    def climb(self, start: Grid, config: ClimbConfig, tables: Optional[_PairTables] = None) -> ClimbOutcome:
        """Climb from start until no transposition improves the objective."""
        grid_service.require_permutation(start)
        n = start.n
        self._check_range(n)
        if start.n == 1:
            return ClimbOutcome(grid=start, value=grid_service.objective(start), iterations=0)
        tables = tables or _PairTables(n)

        cells = np.array(start.entries, dtype=np.int64)
        square = cells.reshape(n, n)
        rows = square.sum(axis=1)
        cols = square.sum(axis=0)
        value = int(rows @ cols)

        iterations = 0
        capped = False
        while True:
            d = cells[tables.second] - cells[tables.first]
            linear = cols[tables.r1] - cols[tables.r2] + rows[tables.c1] - rows[tables.c2]
            delta = d * linear + d * d * tables.incidence

            if config.move_policy == MovePolicy.BEST:
                # argmax returns the first maximum, i.e. the smallest pair
                move = int(np.argmax(delta))
                if delta[move] <= 0:
                    break
            else:
                improving = np.flatnonzero(delta > 0)
                if improving.size == 0:
                    break
                move = int(improving[0])

            if config.max_iterations is not None and iterations >= config.max_iterations:
                capped = True
                break

            p1, p2 = int(tables.first[move]), int(tables.second[move])
            step = int(d[move])
            rows[p1 // n] += step
            cols[p1 % n] += step
            rows[p2 // n] -= step
            cols[p2 % n] -= step
            cells[p1], cells[p2] = cells[p2], cells[p1]
            value += int(delta[move])
            iterations += 1

            if settings.debug:
                recomputed = grid_service.objective(Grid(n=n, entries=tuple(cells.tolist())))
                if recomputed != value:
                    raise AssertionError(f"incremental objective {value} != recomputed {recomputed}")

        return ClimbOutcome(
            grid=Grid(n=n, entries=tuple(cells.tolist())),
            value=value,
            iterations=iterations,
            capped=capped,
        )

    def start_grid(self, n: int, config: ClimbConfig, restart: int) -> Grid:
        """Initial grid for one restart."""
        if config.init_strategy == InitStrategy.CONSTRUCTION and restart == 0:
            return construction_service.build(n)
        rng = restart_rng(config.seed, restart)
        return Grid(n=n, entries=tuple((rng.permutation(n * n) + 1).tolist()))

    def run_restart(self, n: int, config: ClimbConfig, restart: int,
                    tables: Optional[_PairTables] = None) -> RestartRecord:
        """One restart: build the start grid and climb."""
        outcome = self.climb(self.start_grid(n, config, restart), config, tables)
        app_logger.log_restart(restart, outcome.value, outcome.iterations, outcome.capped)
        return outcome.value, outcome.grid.entries, outcome.iterations, outcome.capped

    def _run_serial(self, n: int, config: ClimbConfig, restarts: List[int]) -> List[RestartRecord]:
        tables = _PairTables(n) if n > 1 else None
        return [self.run_restart(n, config, i, tables) for i in restarts]

    def search_best(self, n: int, config: ClimbConfig,
                    on_restart: Optional[Callable[[int, int, int], None]] = None,
                    workers: Optional[int] = None) -> SearchResult:
        """Best grid over config.restarts independent climbs.

        The winner is the largest value, ties going to the lexicographically
        smallest row-major grid and then to the earliest restart, so the
        result does not depend on the worker count.
        """
        if n < 1:
            raise ValidationError(f"n must be positive, got {n}", {"n": n})
        self._check_range(n)
        workers = min(workers or settings.worker_count, config.restarts)
        indices = list(range(config.restarts))

        if workers <= 1:
            records = self._run_serial(n, config, indices)
        else:
            chunks = [indices[w::workers] for w in range(workers)]
            app_logger.info(f"Search n={n}: {config.restarts} restarts on {workers} workers")
            with process_pool(workers) as pool:
                parts = list(pool.map(_restart_chunk, [n] * workers, [config] * workers, chunks))
            by_index = {}
            for chunk, part in zip(chunks, parts):
                by_index.update(zip(chunk, part))
            records = [by_index[i] for i in indices]

        if on_restart:
            for i, (value, _, iterations, _) in enumerate(records):
                on_restart(i, value, iterations)

        best_index = min(indices, key=lambda i: (-records[i][0], records[i][1], i))
        value, entries, _, capped = records[best_index]
        result = SearchResult(
            n=n,
            best=Grid(n=n, entries=entries),
            value=value,
            restart_index=best_index,
            total_iterations=sum(record[2] for record in records),
            seed=config.seed,
            capped=capped,
        )
        app_logger.log_search_result(n, result.value, result.restart_index, result.total_iterations)
        return result


def _restart_chunk(n: int, config: ClimbConfig, restarts: List[int]) -> List[RestartRecord]:
    """Process-pool entry point."""
    return search_service._run_serial(n, config, restarts)


# Global service instance
search_service = SearchService()
