"""
Tabulation of bounds, construction values and search results over a range of n.
"""
import csv
import io
from fractions import Fraction
from typing import Any, Dict, List, Optional

from models.schemas import ClimbConfig, InitStrategy
from services.bounds_service import bounds_service
from services.construction_service import construction_service
from services.search_service import search_service


def format_rational(value: Fraction) -> str:
    """num/den, always with an explicit denominator."""
    return f"{value.numerator}/{value.denominator}"


class TableService:
    """Service for the summary table."""

    @staticmethod
    def columns(with_search: bool) -> List[str]:
        """Header row."""
        names = ["n", "trivial_lower", "lower", "construction_value"]
        if with_search:
            names.append("search_best")
        return names + ["upper", "known_exact", "best_known", "gap_to_upper"]

    def rows(self, n_max: int, restarts: Optional[int] = None, seed: int = 0) -> List[Dict[str, Any]]:
        """One row per n in 1..n_max."""
        table = []
        for n in range(1, n_max + 1):
            report = bounds_service.report(n)
            row: Dict[str, Any] = {
                "n": n,
                "trivial_lower": format_rational(report.trivial_lower),
                "lower": report.lower,
                "construction_value": construction_service.closed_s_squared(n),
            }
            best = report.lower if report.best_known is None else report.best_known
            if restarts:
                config = ClimbConfig(restarts=restarts, seed=seed, init_strategy=InitStrategy.CONSTRUCTION)
                row["search_best"] = search_service.search_best(n, config).value
                best = max(best, row["search_best"])
            row["upper"] = format_rational(report.upper)
            row["known_exact"] = "" if report.known_exact is None else report.known_exact
            row["best_known"] = "" if report.best_known is None else report.best_known
            # gap of the best value in this row, searched or recorded
            row["gap_to_upper"] = format_rational(bounds_service.bound_gap(n, best).below_upper)
            table.append(row)
        return table

    def render_csv(self, rows: List[Dict[str, Any]], with_search: bool) -> str:
        """CSV with header."""
        buffer = io.StringIO()
        writer = csv.DictWriter(buffer, fieldnames=self.columns(with_search), lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        return buffer.getvalue()

    def render_text(self, rows: List[Dict[str, Any]], with_search: bool) -> str:
        """Right-aligned plain text table."""
        names = self.columns(with_search)
        cells = [names] + [[str(row[name]) for name in names] for row in rows]
        widths = [max(len(line[i]) for line in cells) for i in range(len(names))]
        return "".join(
            "  ".join(value.rjust(width) for value, width in zip(line, widths)) + "\n"
            for line in cells
        )


# Global service instance
table_service = TableService()
