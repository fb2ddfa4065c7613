import random

import pytest

from core.exceptions import IndexOutOfRangeError, NotPermutationError, ValidationError
from models.schemas import ClimbConfig, Grid, InitStrategy, MovePolicy
from services.bounds_service import bounds_service
from services.construction_service import construction_service
from services.grid_service import grid_service
from services.reference_data import BEST_KNOWN_VALUES, EXACT_VALUES
from services.search_service import restart_rng, search_service


def _is_local_optimum(grid: Grid) -> bool:
    value = grid_service.objective(grid)
    size = grid.n * grid.n
    return all(
        grid_service.objective(grid_service.swapped(grid, p1, p2)) <= value
        for p1 in range(size) for p2 in range(p1 + 1, size)
    )


def test_swap_delta_examples():
    grid = Grid.from_rows([[1, 4], [2, 3]])
    margins = grid_service.margins(grid)
    current = grid_service.objective(grid)
    assert current == 50
    # (1,2) <-> (2,1)
    assert search_service.swap_delta(grid, margins, current, 1, 2) == 50
    # (1,1) <-> (1,2): [[4,1],[2,3]]
    assert search_service.swap_delta(grid, margins, current, 0, 1) == 50
    # (1,1) <-> (2,2): [[3,4],[2,1]]
    assert search_service.swap_delta(grid, margins, current, 0, 3) == grid_service.objective(
        Grid.from_rows([[3, 4], [2, 1]])
    )


def test_swap_delta_rejects_bad_cells():
    grid = Grid.from_rows([[1, 4], [2, 3]])
    margins = grid_service.margins(grid)
    with pytest.raises(IndexOutOfRangeError):
        search_service.swap_delta(grid, margins, 50, 0, 4)
    with pytest.raises(ValidationError):
        search_service.swap_delta(grid, margins, 50, 2, 2)


def test_swap_delta_matches_recomputation():
    r = random.Random(12345)
    checked_swaps = 0
    while checked_swaps < 10_000:
        n = r.randint(2, 10)
        entries = list(range(1, n * n + 1))
        r.shuffle(entries)
        grid = Grid(n=n, entries=tuple(entries))
        margins = grid_service.margins(grid)
        current = grid_service.objective(grid)
        for _ in range(50):
            p1, p2 = r.sample(range(n * n), 2)
            expected = grid_service.objective(grid_service.swapped(grid, p1, p2))
            assert search_service.swap_delta(grid, margins, current, p1, p2) == expected
            checked_swaps += 1


def test_climb_reaches_two_by_two_optimum():
    outcome = search_service.climb(Grid.from_rows([[1, 4], [2, 3]]), ClimbConfig())
    assert outcome.value == 54
    assert outcome.iterations >= 1
    assert grid_service.objective(outcome.grid) == 54


@pytest.mark.parametrize("n, expected", [(2, 54), (3, 761)])
def test_climb_from_construction_stays(n, expected):
    outcome = search_service.climb(construction_service.build(n), ClimbConfig())
    assert outcome.value == expected
    assert outcome.iterations == 0


def test_climb_requires_permutation():
    with pytest.raises(NotPermutationError):
        search_service.climb(Grid.from_rows([[1, 1], [2, 3]]), ClimbConfig())


@pytest.mark.parametrize("policy", list(MovePolicy))
def test_climb_returns_local_optimum(policy, debug_mode):
    config = ClimbConfig(move_policy=policy)
    for restart in range(5):
        for n in (3, 4):
            start = search_service.start_grid(n, ClimbConfig(seed=99), restart)
            outcome = search_service.climb(start, config)
            assert not outcome.capped
            assert outcome.value >= grid_service.objective(start)
            assert outcome.value == grid_service.objective(outcome.grid)
            assert _is_local_optimum(outcome.grid)


def test_climb_iteration_cap_is_flagged():
    start = Grid.from_rows([[1, 4], [2, 3]])
    outcome = search_service.climb(start, ClimbConfig(max_iterations=0))
    assert outcome.capped
    assert outcome.value == 50
    assert outcome.iterations == 0


def test_climb_never_exceeds_exact_values():
    r = random.Random(3)
    for _ in range(100):
        n = r.randint(1, 3)
        entries = list(range(1, n * n + 1))
        r.shuffle(entries)
        outcome = search_service.climb(Grid(n=n, entries=tuple(entries)), ClimbConfig())
        assert outcome.value <= EXACT_VALUES[n]


def test_restart_streams_are_reproducible():
    a = restart_rng(42, 3).permutation(16)
    b = restart_rng(42, 3).permutation(16)
    c = restart_rng(42, 4).permutation(16)
    assert a.tolist() == b.tolist()
    assert a.tolist() != c.tolist()


def test_search_two(single_worker):
    for seed in (0, 1, 2**64 - 1):
        result = search_service.search_best(2, ClimbConfig(restarts=1, seed=seed))
        assert result.value == 54
        assert result.seed == seed


def test_search_one(single_worker):
    result = search_service.search_best(1, ClimbConfig(restarts=3))
    assert result.value == 1
    assert result.best.rows == [[1]]


def test_search_three_finds_exact_value(single_worker):
    result = search_service.search_best(3, ClimbConfig(restarts=200, seed=0))
    assert result.value == 761


@pytest.mark.parametrize("n", range(1, 8))
def test_construction_seeded_search_dominates_construction(n, single_worker):
    config = ClimbConfig(restarts=1, init_strategy=InitStrategy.CONSTRUCTION)
    result = search_service.search_best(n, config)
    assert result.value >= construction_service.closed_s_squared(n)
    assert result.value <= bounds_service.ub_pn(n)
    assert result.restart_index == 0


def test_search_is_independent_of_worker_count():
    config = ClimbConfig(restarts=12, seed=42)
    serial = search_service.search_best(4, config, workers=1)
    parallel = search_service.search_best(4, config, workers=3)
    assert serial.to_json_dict() == parallel.to_json_dict()


def test_search_progress_callback(single_worker):
    seen = []
    search_service.search_best(3, ClimbConfig(restarts=4, seed=5), on_restart=lambda *row: seen.append(row))
    assert [row[0] for row in seen] == [0, 1, 2, 3]


def test_search_tie_break_prefers_smallest_grid(single_worker):
    result = search_service.search_best(2, ClimbConfig(restarts=30, seed=8))
    # every n = 2 local optimum has value 54; the smallest one wins
    assert result.best.entries == min(
        tuple(search_service.climb(search_service.start_grid(2, ClimbConfig(seed=8), i), ClimbConfig()).grid.entries)
        for i in range(30)
    )


@pytest.mark.slow
@pytest.mark.parametrize("n", sorted(BEST_KNOWN_VALUES))
def test_search_reaches_published_values(n):
    config = ClimbConfig(restarts=1000, seed=2024, init_strategy=InitStrategy.CONSTRUCTION)
    result = search_service.search_best(n, config)
    assert result.value >= BEST_KNOWN_VALUES[n]
