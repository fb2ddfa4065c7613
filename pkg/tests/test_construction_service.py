import pytest

from core.exceptions import IndexOutOfRangeError, NotPermutationError
from models.schemas import Grid
from services.construction_service import construction_service
from services.grid_service import grid_service
from services.reference_data import CONSTRUCTION_EXAMPLE_7

N_MAX = 60


def test_build_small():
    assert construction_service.build(1).rows == [[1]]
    assert construction_service.build(2).rows == [[4, 3], [2, 1]]
    assert construction_service.build(3).rows == [[9, 8, 5], [7, 4, 3], [6, 2, 1]]


def test_build_seven_matches_published_example():
    assert construction_service.build(7).rows == CONSTRUCTION_EXAMPLE_7


def test_build_prime_borders():
    assert construction_service.build_prime(1).rows == [[1]]
    assert construction_service.build_prime(2).rows == [[4, 3], [2, 1]]
    grid = construction_service.build_prime(7)
    assert grid.rows[0] == [49, 48, 46, 44, 42, 40, 38]
    assert [row[0] for row in grid.rows] == [49, 47, 45, 43, 41, 39, 37]


def test_build_is_nested_permutation():
    previous = None
    for n in range(1, N_MAX + 1):
        grid = construction_service.build(n)
        assert grid_service.is_permutation(grid)
        if previous is not None:
            inner = [row[1:] for row in grid.rows[1:]]
            assert inner == previous.rows
        previous = grid


def test_interchange_keeps_multiset_and_diagonal():
    for n in range(1, 20):
        prime, final = construction_service.build_prime(n), construction_service.build(n)
        assert sorted(prime.entries) == sorted(final.entries)
        assert [prime.at(i, i) for i in range(n)] == [final.at(i, i) for i in range(n)]


def test_objective_of_construction_matches_closed_form():
    for n in range(1, N_MAX + 1):
        value = grid_service.objective(construction_service.build(n))
        assert value == construction_service.closed_s_squared(n)


@pytest.mark.parametrize("n, expected", [(1, 1), (3, 761), (4, 5276), (5, 24227), (6, 84958), (7, 246587)])
def test_closed_s_squared_spot_values(n, expected):
    assert construction_service.closed_s_squared(n) == expected
    assert sum(map(sum, grid_service.matrix_square(construction_service.build(n)))) == expected


def test_closed_margin_examples():
    assert construction_service.closed_margin(2, 1, "row", True) == 3
    assert construction_service.closed_margin(2, 1, "col", True) == 4
    assert construction_service.closed_margin(3, 3, "row", True) == 23
    assert construction_service.closed_margin(3, 3, "row", False) == 22
    assert construction_service.correction(2, 2) == 0
    assert construction_service.closed_margin(2, 2, "row", False) == 7


def test_closed_margin_rejects_bad_index():
    with pytest.raises(IndexOutOfRangeError):
        construction_service.closed_margin(3, 0, "row", True)
    with pytest.raises(IndexOutOfRangeError):
        construction_service.closed_margin(3, 4, "col", False)


def test_closed_margins_match_direct_margins():
    for n in range(1, N_MAX + 1):
        assert construction_service.closed_margins(n, primed=False) == grid_service.margins(construction_service.build(n))
        assert construction_service.closed_margins(n, primed=True) == grid_service.margins(construction_service.build_plain(n))


def test_primed_closed_margins_match_build_prime_while_inner_block_is_unswapped():
    for n in range(1, 4):
        assert construction_service.closed_margins(n, primed=True) == grid_service.margins(construction_service.build_prime(n))


def test_build_prime_differs_from_plain_nest_from_four_on():
    # row 2 of build_prime(4) is 14 9 8 5 (inner block already interchanged)
    assert sum(construction_service.build_prime(4).rows[1]) == 36
    assert construction_service.closed_margin(4, 3, "row", True) == 37


def test_conditions_hold_for_construction():
    for n in range(1, N_MAX + 1):
        report = construction_service.check_conditions(construction_service.build(n))
        assert report.all_passed, (n, report.witnesses)
        assert (report.cond_b is None) == (n % 2 == 0)
        assert (report.cond_c is None) == (n % 2 == 1)


def test_conditions_seven():
    report = construction_service.check_conditions(construction_service.build(7))
    assert report.cond_a and report.cond_b and report.cond_d
    assert report.differences == [0] * 7


def test_condition_d_counterexample():
    report = construction_service.check_conditions(Grid.from_rows([[2, 1], [3, 4]]))
    assert report.cond_d is False
    assert report.witnesses["d"] == [1]


def test_condition_c_on_two():
    report = construction_service.check_conditions(Grid.from_rows([[4, 3], [2, 1]]))
    assert report.cond_c is True
    assert report.differences == [1, -1]


def test_conditions_need_permutation():
    with pytest.raises(NotPermutationError):
        construction_service.check_conditions(Grid.from_rows([[1, 1], [2, 3]]))
