"""
Border construction of grids with large s(A^2), its closed-form margins and
the extremality conditions (a)-(d).

Level m of the nest is the border of an m x m block in the bottom-right
corner: m^2 in the corner, m^2-1, m^2-3, ..., (m-1)^2+2 along its first row
and m^2-2, m^2-4, ..., (m-1)^2+1 down its first column. The interchanged
version swaps (1,k) and (k,1) of the block for every odd k >= 2.
"""
from typing import Dict, List, Literal

from core.arithmetic import checked, exact_div
from core.exceptions import IndexOutOfRangeError, ValidationError
from models.schemas import ConditionReport, Grid, Margins
from services.grid_service import grid_service

Which = Literal["row", "col"]


def _nest(n: int, swap_outer: bool, swap_inner: bool) -> Grid:
    """Fill all levels 1..n border by border, outermost last."""
    if n < 1:
        raise ValidationError(f"n must be positive, got {n}", {"n": n})
    cells = [0] * (n * n)
    for m in range(1, n + 1):
        o = n - m
        corner = o * n + o
        cells[corner] = m * m
        for j in range(2, m + 1):
            cells[corner + (j - 1)] = m * m - (2 * j - 3)
        for i in range(2, m + 1):
            cells[corner + (i - 1) * n] = m * m - 2 * (i - 1)
        interchange = swap_outer if m == n else swap_inner
        if interchange:
            for k in range(3, m + 1, 2):
                a, b = corner + (k - 1), corner + (k - 1) * n
                cells[a], cells[b] = cells[b], cells[a]
    return Grid(n=n, entries=tuple(cells))


class ConstructionService:
    """Service for the border construction."""

    @staticmethod
    def build(n: int) -> Grid:
        """A_n: every level interchanged."""
        return _nest(n, swap_outer=True, swap_inner=True)

    @staticmethod
    def build_prime(n: int) -> Grid:
        """A'_n: outer border left as is around A_{n-1}."""
        return _nest(n, swap_outer=False, swap_inner=True)

    @staticmethod
    def build_plain(n: int) -> Grid:
        """The nest with no level interchanged."""
        return _nest(n, swap_outer=False, swap_inner=False)

    @staticmethod
    def _plain_margin(n: int, k: int, which: Which) -> int:
        # double sums evaluated term by term
        offset = 1 if which == "col" else 0
        tail = 2 if which == "col" else 1
        outer = sum(
            offset + k * k + sum(2 * k - 1 + 2 * (l - 1) for l in range(1, j + 1))
            for j in range(1, n - k + 1)
        )
        own = sum(k * k - tail - 2 * (j - 1) for j in range(1, k))
        return outer + k * k + own

    @staticmethod
    def correction(n: int, k: int) -> int:
        """Shift of R_{n-k+1} caused by the interchanges (C moves the other way)."""
        if n % 2:
            return exact_div(n + 1 - 2 * k, 2, "odd-n correction")
        return exact_div(n + 1 - 2 * k + (-1) ** k, 2, "even-n correction")

    def closed_margin(self, n: int, k: int, which: Which, primed: bool) -> int:
        """R_{n-k+1} or C_{n-k+1} by closed form.

        primed=True gives the margins of the uninterchanged nest (build_plain),
        which coincide with build_prime for n <= 3; primed=False gives the
        margins of build(n).
        """
        if not 1 <= k <= n:
            raise IndexOutOfRangeError(f"k={k} outside 1..{n}", {"n": n, "k": k})
        if which not in ("row", "col"):
            raise ValidationError(f"which must be 'row' or 'col', got {which!r}")
        value = self._plain_margin(n, k, which)
        if not primed:
            shift = self.correction(n, k)
            value += shift if which == "row" else -shift
        return checked(value, "closed margin")

    def closed_margins(self, n: int, primed: bool = False) -> Margins:
        """All closed-form margins in natural row/column order."""
        rows = tuple(self.closed_margin(n, n - i, "row", primed) for i in range(n))
        cols = tuple(self.closed_margin(n, n - i, "col", primed) for i in range(n))
        return Margins(rows=rows, cols=cols)

    @staticmethod
    def closed_s_squared(n: int) -> int:
        """s(A_n^2) in closed form."""
        if n < 1:
            raise ValidationError(f"n must be positive, got {n}", {"n": n})
        constant = 13 if n % 2 else -92
        inner = 120 * n ** 6 + 14 * n ** 5 + 182 * n ** 4 + 105 * n ** 2 - 14 * n + constant
        return exact_div(checked(n * inner, "construction numerator"), 420, "construction value")

    @staticmethod
    def check_conditions(grid: Grid) -> ConditionReport:
        """Evaluate conditions (a)-(d); (b) for odd n, (c) for even n."""
        grid_service.require_permutation(grid)
        n = grid.n
        witnesses: Dict[str, List] = {}

        asymmetric = [
            [i, j] for i in range(n) for j in range(i + 1, n)
            if abs(grid.at(i, j) - grid.at(j, i)) > 1
        ]
        if asymmetric:
            witnesses["a"] = asymmetric

        m = grid_service.margins(grid)
        differences = [r - c for r, c in zip(m.rows, m.cols)]
        cond_b = cond_c = None
        if n % 2:
            unbalanced = [i for i, d in enumerate(differences) if d != 0]
            cond_b = not unbalanced
            if unbalanced:
                witnesses["b"] = unbalanced
        else:
            off_by_more = [i for i, d in enumerate(differences) if abs(d) != 1]
            positive = sum(1 for d in differences if d > 0)
            cond_c = not off_by_more and positive == n // 2
            if not cond_c:
                witnesses["c"] = off_by_more or [f"positive={positive}"]

        diagonal = {grid.at(i, i) for i in range(n)}
        missing = [v for v in (1, n * n) if v not in diagonal]
        if missing:
            witnesses["d"] = missing

        return ConditionReport(
            n=n,
            cond_a=not asymmetric,
            cond_b=cond_b,
            cond_c=cond_c,
            cond_d=not missing,
            differences=differences,
            witnesses=witnesses,
        )


# Global service instance
construction_service = ConstructionService()
