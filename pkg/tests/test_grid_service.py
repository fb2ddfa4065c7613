import random

import pytest
from hypothesis import given

from core.exceptions import DuplicateEntryError, IndexOutOfRangeError, OutOfRangeError, WrongLengthError
from models.schemas import Grid, RealMatrix
from services.grid_service import grid_service
from services.reference_data import BEST_KNOWN_VALUES

from conftest import permutation_grids


def test_validate_grid_accepts_construction():
    grid_service.validate_grid(Grid.from_rows([[4, 3], [2, 1]]))


def test_validate_grid_rejects_duplicate():
    with pytest.raises(DuplicateEntryError) as e:
        grid_service.validate_grid(Grid.from_rows([[1, 2], [2, 3]]))
    assert e.value.value == 2


def test_validate_grid_rejects_out_of_range():
    with pytest.raises(OutOfRangeError) as e:
        grid_service.validate_grid(Grid.from_rows([[1, 2], [3, 5]]))
    assert e.value.value == 5


def test_wrong_length_rejected_at_construction():
    with pytest.raises(WrongLengthError):
        Grid(n=2, entries=(1, 2, 3))


def test_validate_published_n4(published):
    grid_service.validate_grid(published[4])
    assert grid_service.is_permutation(published[4])


def test_entry_sums():
    grid = Grid.from_rows([[4, 3], [2, 1]])
    assert grid_service.entry_sum(grid) == 10
    assert grid_service.square_entry_sum(grid) == 30
    assert grid_service.square_entry_sum(Grid(n=1, entries=(1,))) == 1


def test_entry_sum_real():
    matrix = RealMatrix.from_array([[1.5, -2.0], [0.0, 3.0]])
    assert grid_service.entry_sum(matrix) == pytest.approx(2.5)


@pytest.mark.parametrize("n", [1, 2, 3, 5])
def test_permutation_sums(n):
    grid = Grid(n=n, entries=tuple(range(1, n * n + 1)))
    size = n * n
    assert grid_service.entry_sum(grid) == size * (size + 1) // 2
    assert grid_service.square_entry_sum(grid) == size * (size + 1) * (2 * size + 1) // 6


def test_margins():
    m = grid_service.margins(Grid.from_rows([[4, 3], [2, 1]]))
    assert m.rows == (7, 3)
    assert m.cols == (6, 4)

    m = grid_service.margins(Grid.from_rows([[9, 8, 5], [7, 4, 3], [6, 2, 1]]))
    assert m.rows == (22, 14, 9)
    assert m.cols == (22, 14, 9)

    m = grid_service.margins(Grid(n=1, entries=(1,)))
    assert m.rows == (1,) and m.cols == (1,)


@pytest.mark.parametrize("rows, expected", [
    ([[4, 3], [2, 1]], 54),
    ([[1, 4], [2, 3]], 50),
])
def test_objective_small(rows, expected):
    assert grid_service.objective(Grid.from_rows(rows)) == expected


def test_matrix_square():
    assert grid_service.matrix_square(Grid.from_rows([[4, 3], [2, 1]])) == [[22, 15], [10, 7]]
    assert grid_service.matrix_square(Grid(n=1, entries=(1,))) == [[1]]


@pytest.mark.parametrize("n", sorted(BEST_KNOWN_VALUES))
def test_published_matrices_reach_published_values(published, n):
    grid = published[n]
    expected = BEST_KNOWN_VALUES[n]
    assert grid_service.objective(grid) == expected
    assert sum(map(sum, grid_service.matrix_square(grid))) == expected


@given(permutation_grids())
def test_objective_matches_explicit_square(grid):
    assert grid_service.objective(grid) == sum(map(sum, grid_service.matrix_square(grid)))


@given(permutation_grids())
def test_objective_transpose_invariant(grid):
    assert grid_service.objective(grid_service.transpose(grid)) == grid_service.objective(grid)


@given(permutation_grids())
def test_margin_totals_agree(grid):
    m = grid_service.margins(grid)
    assert sum(m.rows) == sum(m.cols) == grid_service.entry_sum(grid)


def test_objective_on_arbitrary_integers():
    grid = Grid.from_rows([[-3, 7, 0], [2, -5, 11], [4, 4, -1]])
    assert grid_service.objective(grid) == sum(map(sum, grid_service.matrix_square(grid)))


def test_swapped_exchanges_values():
    grid = Grid.from_rows([[1, 4], [2, 3]])
    assert grid_service.swapped(grid, 0, 1).rows == [[4, 1], [2, 3]]
    with pytest.raises(IndexOutOfRangeError):
        grid_service.swapped(grid, 0, 4)


def test_random_grids_are_permutations():
    r = random.Random(7)
    for n in range(1, 6):
        entries = list(range(1, n * n + 1))
        r.shuffle(entries)
        assert grid_service.is_permutation(Grid(n=n, entries=tuple(entries)))
    assert not grid_service.is_permutation(Grid(n=2, entries=(1, 1, 2, 3)))
