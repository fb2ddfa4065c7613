"""
Pydantic schemas for grids, bounds, search and oracle results.
"""
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, StrictInt, model_validator


class Grid(BaseModel):
    """n x n integer arrangement, stored row-major."""
    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=1)
    entries: Tuple[int, ...]

    @model_validator(mode="after")
    def check_length(self):
        """Entry count must be n^2."""
        if len(self.entries) != self.n * self.n:
            # local import keeps the schema module free of service imports
            from core.exceptions import WrongLengthError
            raise WrongLengthError(self.n, len(self.entries))
        return self

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "Grid":
        """Create from a list of rows."""
        n = len(rows)
        if any(len(row) != n for row in rows):
            from core.exceptions import WrongLengthError
            raise WrongLengthError(n, sum(len(row) for row in rows))
        return cls(n=n, entries=tuple(int(v) for row in rows for v in row))

    @property
    def rows(self) -> List[List[int]]:
        """Rows as nested lists."""
        n = self.n
        return [list(self.entries[i * n:(i + 1) * n]) for i in range(n)]

    def at(self, i: int, j: int) -> int:
        """Entry at 0-based (row, col)."""
        return self.entries[i * self.n + j]


class RealMatrix(BaseModel):
    """n x n real matrix, stored row-major."""
    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=1)
    entries: Tuple[float, ...]

    @model_validator(mode="after")
    def check_length(self):
        """Entry count must be n^2."""
        if len(self.entries) != self.n * self.n:
            from core.exceptions import WrongLengthError
            raise WrongLengthError(self.n, len(self.entries))
        return self

    @classmethod
    def from_array(cls, array: Any) -> "RealMatrix":
        """Create from a square numpy array (or nested sequence)."""
        array = np.asarray(array, dtype=np.float64)
        if array.ndim != 2 or array.shape[0] != array.shape[1]:
            from core.exceptions import ValidationError
            raise ValidationError(f"Expected a square matrix, got shape {array.shape}")
        return cls(n=array.shape[0], entries=tuple(float(v) for v in array.ravel()))

    @classmethod
    def from_grid(cls, grid: Grid) -> "RealMatrix":
        """Real view of an integer grid."""
        return cls(n=grid.n, entries=tuple(float(v) for v in grid.entries))

    def to_array(self) -> np.ndarray:
        """Square float64 array."""
        return np.array(self.entries, dtype=np.float64).reshape(self.n, self.n)


class Margins(BaseModel):
    """Row sums R_k and column sums C_k of a grid."""
    model_config = ConfigDict(frozen=True)

    rows: Tuple[int, ...]
    cols: Tuple[int, ...]

    @model_validator(mode="after")
    def check_totals(self):
        """Row and column totals both equal the entry sum."""
        if len(self.rows) != len(self.cols) or sum(self.rows) != sum(self.cols):
            raise ValueError("row and column margins disagree")
        return self


class BoundsReport(BaseModel):
    """Exact bounds on p_n for one n."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    n: int = Field(..., ge=1)
    lower: int
    trivial_lower: Fraction
    upper: Fraction
    known_exact: Optional[int] = None
    best_known: Optional[int] = None
    gap_to_upper: Fraction = Field(..., description="upper minus best_known, or minus lower when nothing is recorded")

    @model_validator(mode="after")
    def check_order(self):
        """trivial_lower <= lower <= upper."""
        if not (self.trivial_lower <= self.lower <= self.upper):
            raise ValueError(f"bounds out of order for n={self.n}")
        return self

    def to_json_dict(self) -> Dict[str, Any]:
        """JSON form with rationals split into num/den."""
        return {
            "n": self.n,
            "lower": self.lower,
            "trivial_lower_num": self.trivial_lower.numerator,
            "trivial_lower_den": self.trivial_lower.denominator,
            "upper_num": self.upper.numerator,
            "upper_den": self.upper.denominator,
            "known_exact": self.known_exact,
            "best_known": self.best_known,
            "gap_to_upper_num": self.gap_to_upper.numerator,
            "gap_to_upper_den": self.gap_to_upper.denominator,
        }


class BoundGap(BaseModel):
    """Distance of a value to the exact bounds of p_n."""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    n: int
    value: int
    above_lower: int
    below_upper: Fraction
    relative_to_upper: float


class StationarityProbe(BaseModel):
    """Candidate (X, lambda, mu) for the order-m Lagrange condition."""
    model_config = ConfigDict(frozen=True, populate_by_name=True)

    x: RealMatrix
    lam: float = Field(..., alias="lambda")
    mu: float
    m: int = Field(default=2, ge=2)


class ConditionReport(BaseModel):
    """Outcome of the extremality conditions (a)-(d) on one grid."""

    n: int
    cond_a: bool
    cond_b: Optional[bool] = None
    cond_c: Optional[bool] = None
    cond_d: bool
    differences: List[int] = Field(default_factory=list, description="rows[i] - cols[i]")
    witnesses: Dict[str, List[Any]] = Field(default_factory=dict)

    @model_validator(mode="after")
    def check_parity(self):
        """Exactly one of cond_b / cond_c is evaluated, by parity of n."""
        if self.n % 2 == 1 and (self.cond_b is None or self.cond_c is not None):
            raise ValueError("odd n evaluates condition (b) only")
        if self.n % 2 == 0 and (self.cond_c is None or self.cond_b is not None):
            raise ValueError("even n evaluates condition (c) only")
        return self

    @property
    def all_passed(self) -> bool:
        """Every evaluated condition holds."""
        checks = [self.cond_a, self.cond_d, self.cond_b if self.n % 2 else self.cond_c]
        return all(checks)


class MovePolicy(str, Enum):
    """Which improving transposition a climb accepts."""
    BEST = "best"
    FIRST = "first"


class InitStrategy(str, Enum):
    """How each restart picks its starting grid."""
    RANDOM = "random-shuffle"
    CONSTRUCTION = "construction-seeded"


class ClimbConfig(BaseModel):
    """Multi-restart hill-climbing parameters."""
    model_config = ConfigDict(frozen=True)

    restarts: int = Field(default=1, ge=1)
    seed: int = Field(default=0, ge=0, lt=1 << 64)
    move_policy: MovePolicy = MovePolicy.BEST
    init_strategy: InitStrategy = InitStrategy.RANDOM
    max_iterations: Optional[int] = Field(default=None, ge=0)


class ClimbOutcome(BaseModel):
    """Result of a single climb."""
    model_config = ConfigDict(frozen=True)

    grid: Grid
    value: int
    iterations: int = Field(..., ge=0)
    capped: bool = False


class SearchResult(BaseModel):
    """Best grid found by a multi-restart search."""
    model_config = ConfigDict(frozen=True)

    n: int
    best: Grid
    value: int
    restart_index: int = Field(..., ge=0)
    total_iterations: int = Field(..., ge=0)
    seed: int
    capped: bool = False

    @model_validator(mode="after")
    def check_value(self):
        """value == objective(best) and best is a permutation grid."""
        from services.grid_service import grid_service
        grid_service.validate_grid(self.best)
        if grid_service.objective(self.best) != self.value:
            raise ValueError("search value does not match its grid")
        return self

    def to_json_dict(self) -> Dict[str, Any]:
        """Stable JSON form (no timing, no host data)."""
        return {
            "n": self.n,
            "value": self.value,
            "restart_index": self.restart_index,
            "total_iterations": self.total_iterations,
            "seed": self.seed,
            "capped": self.capped,
            "rows": self.best.rows,
        }


class OracleResult(BaseModel):
    """Exhaustive maximum of the objective for small n."""
    model_config = ConfigDict(frozen=True)

    n: int
    value: int
    witness: Grid
    maximizer_count: int = Field(..., ge=1)

    def to_json_dict(self) -> Dict[str, Any]:
        """JSON form."""
        return {
            "n": self.n,
            "value": self.value,
            "maximizer_count": self.maximizer_count,
            "rows": self.witness.rows,
        }


def _check_square(n: int, rows: Sequence[Sequence[Any]]) -> None:
    if not rows:
        raise ValueError("rows must not be empty")
    if len(rows) != n or any(len(row) != n for row in rows):
        raise ValueError(f"rows do not form a {n}x{n} matrix")


class MatrixPayload(BaseModel):
    """JSON matrix interchange: {"n": <int>, "rows": [[...], ...]}.

    Entries are strict integers; 4.0 and true are rejected.
    """
    n: StrictInt = Field(..., ge=1)
    rows: List[List[StrictInt]]

    @model_validator(mode="after")
    def check_shape(self):
        """Shape must be n x n."""
        _check_square(self.n, self.rows)
        return self


class RealMatrixPayload(BaseModel):
    """JSON form of a real matrix; same shape rules as MatrixPayload."""
    n: StrictInt = Field(..., ge=1)
    rows: List[List[float]]

    @model_validator(mode="after")
    def check_shape(self):
        """Shape must be n x n."""
        _check_square(self.n, self.rows)
        return self


class SearchRequest(BaseModel):
    """HTTP body for a search run."""
    n: int = Field(..., ge=1)
    config: ClimbConfig = Field(default_factory=ClimbConfig)


class ResidualRequest(BaseModel):
    """HTTP body for a stationarity residual evaluation."""
    model_config = ConfigDict(populate_by_name=True)

    rows: List[List[float]]
    lam: float = Field(..., alias="lambda")
    mu: float
    m: int = Field(default=2, ge=2)
