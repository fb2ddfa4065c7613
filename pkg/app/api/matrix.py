"""
Matrix-related API routes, mirroring the CLI subcommands.
"""
from typing import Any, Dict, Optional

from fastapi import APIRouter, Query

from core.logging import app_logger
from models.schemas import (
    Grid, MatrixPayload, RealMatrix, ResidualRequest, SearchRequest, StationarityProbe,
)
from services.bounds_service import bounds_service
from services.construction_service import construction_service
from services.grid_service import grid_service
from services.oracle_service import oracle_service
from services.search_service import search_service
from services.table_service import table_service

router = APIRouter()


@router.get("/construct/{n}")
async def construct(n: int, primed: bool = False) -> Dict[str, Any]:
    """Border construction (A_n, or A'_n when primed)."""
    grid = construction_service.build_prime(n) if primed else construction_service.build(n)
    return {"n": grid.n, "rows": grid.rows}


@router.get("/bounds/{n}")
async def bounds(n: int) -> Dict[str, Any]:
    """Exact bounds on p_n."""
    return bounds_service.report(n).to_json_dict()


@router.post("/objective")
async def objective(payload: MatrixPayload) -> Dict[str, Any]:
    """Objective, margins, mu_implied and condition report of a permutation grid."""
    grid = Grid.from_rows(payload.rows)
    grid_service.validate_grid(grid)
    margins = grid_service.margins(grid)
    return {
        "n": grid.n,
        "objective": grid_service.objective(grid),
        "rows": list(margins.rows),
        "cols": list(margins.cols),
        "mu_implied": bounds_service.mu_implied(RealMatrix.from_grid(grid)),
        "conditions": construction_service.check_conditions(grid).model_dump(),
    }


@router.post("/search")
def search(request: SearchRequest) -> Dict[str, Any]:
    """Multi-restart hill climbing (runs in the threadpool, not the event loop)."""
    app_logger.info(f"Search requested: n={request.n}, restarts={request.config.restarts}, seed={request.config.seed}")
    return search_service.search_best(request.n, request.config).to_json_dict()


@router.get("/oracle/{n}")
def oracle(n: int) -> Dict[str, Any]:
    """Exhaustive p_n for n <= 3."""
    return oracle_service.exhaustive_pn(n).to_json_dict()


@router.get("/table/{n_max}")
def table(n_max: int, restarts: Optional[int] = Query(default=None, ge=1), seed: int = 0) -> Dict[str, Any]:
    """Summary rows for n = 1..n_max."""
    return {"rows": table_service.rows(n_max, restarts=restarts, seed=seed)}


@router.post("/residual")
async def residual(request: ResidualRequest) -> Dict[str, Any]:
    """Stationarity residual of a real matrix."""
    probe = StationarityProbe(x=RealMatrix.from_array(request.rows), lam=request.lam, mu=request.mu, m=request.m)
    return {
        "residual": bounds_service.stationarity_residual(probe),
        "stationary": bounds_service.is_stationary(probe),
    }
