"""
Command-line front end for the matpow toolkit.

Results go to stdout; logs and errors go to stderr. Failures print a single
line "error <code>: <message>" and exit with the error's exit code.
"""
import argparse
import json
import sys
from typing import List, Optional

from pydantic import ValidationError as PydanticValidationError

from core.exceptions import MatpowException, UsageError, format_error_line
from core.logging import app_logger
from models.schemas import ClimbConfig, InitStrategy, MovePolicy, RealMatrix, StationarityProbe
from services.bounds_service import bounds_service
from services.construction_service import construction_service
from services.grid_service import grid_service
from services.matrix_io import format_json, format_text, load_matrix, load_real_matrix
from services.oracle_service import oracle_service
from services.reference_data import BEST_KNOWN_VALUES, published_matrix
from services.search_service import search_service
from services.table_service import table_service


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that reports usage problems as UsageError."""

    def error(self, message):
        raise UsageError(message)


def _describe_validation(error: PydanticValidationError) -> str:
    first = error.errors()[0]
    field = ".".join(str(part) for part in first["loc"]) or error.title
    return f"{field}: {first['msg']}"


def _format_conditions(report) -> str:
    parts = [f"a={str(report.cond_a).lower()}"]
    if report.cond_b is not None:
        parts.append(f"b={str(report.cond_b).lower()}")
    if report.cond_c is not None:
        parts.append(f"c={str(report.cond_c).lower()}")
    parts.append(f"d={str(report.cond_d).lower()}")
    return " ".join(parts)


def cmd_construct(args) -> str:
    builder = construction_service.build_prime if args.primed else construction_service.build
    grid = builder(args.n)
    if args.format == "json":
        return format_json(grid) + "\n"
    return format_text(grid)


def cmd_bounds(args) -> str:
    report = bounds_service.report(args.n)
    if args.json:
        return json.dumps(report.to_json_dict()) + "\n"
    known = "" if report.known_exact is None else str(report.known_exact)
    best = "" if report.best_known is None else str(report.best_known)
    return (
        f"n {report.n}\n"
        f"trivial_lower {report.trivial_lower.numerator}/{report.trivial_lower.denominator}\n"
        f"lower {report.lower}\n"
        f"upper {report.upper.numerator}/{report.upper.denominator}\n"
        f"known_exact {known}\n"
        f"best_known {best}\n"
        f"gap_to_upper {report.gap_to_upper.numerator}/{report.gap_to_upper.denominator}\n"
    )


def cmd_objective(args) -> str:
    grid = load_matrix(args.file)
    grid_service.validate_grid(grid)
    value = grid_service.objective(grid)
    margins = grid_service.margins(grid)
    mu = bounds_service.mu_implied(RealMatrix.from_grid(grid))
    conditions = construction_service.check_conditions(grid)
    if args.json:
        return json.dumps({
            "n": grid.n,
            "objective": value,
            "rows": list(margins.rows),
            "cols": list(margins.cols),
            "mu_implied": mu,
            "conditions": conditions.model_dump(),
        }) + "\n"
    return (
        f"objective {value}\n"
        f"rows {' '.join(map(str, margins.rows))}\n"
        f"cols {' '.join(map(str, margins.cols))}\n"
        f"mu_implied {'undefined' if mu is None else repr(mu)}\n"
        f"conditions {_format_conditions(conditions)}\n"
    )


def cmd_search(args) -> str:
    config = ClimbConfig(
        restarts=args.restarts,
        seed=args.seed,
        move_policy=MovePolicy(args.policy),
        init_strategy=InitStrategy.CONSTRUCTION if args.construction_seed else InitStrategy.RANDOM,
        max_iterations=args.max_iter,
    )
    lines: List[str] = []

    def progress(restart: int, value: int, iterations: int):
        lines.append(json.dumps({"restart": restart, "value": value, "iterations": iterations}))

    result = search_service.search_best(args.n, config, on_restart=progress if args.progress else None)
    lines.append(json.dumps(result.to_json_dict()))
    return "\n".join(lines) + "\n" + format_text(result.best)


def cmd_oracle(args) -> str:
    result = oracle_service.exhaustive_pn(args.n)
    return f"{result.value}\nmaximizers {result.maximizer_count}\n" + format_text(result.witness)


def cmd_table(args) -> str:
    rows = table_service.rows(args.n_max, restarts=args.restarts, seed=args.seed)
    with_search = bool(args.restarts)
    if args.csv:
        return table_service.render_csv(rows, with_search)
    return table_service.render_text(rows, with_search)


def cmd_residual(args) -> str:
    matrix = load_real_matrix(args.file)
    probe = StationarityProbe(x=matrix, lam=args.lam, mu=args.mu, m=args.m)
    value = bounds_service.stationarity_residual(probe)
    stationary = str(bounds_service.is_stationary(probe)).lower()
    return f"{value!r}\nstationary {stationary}\n"


def cmd_known(args) -> str:
    out = []
    for n, target in sorted(BEST_KNOWN_VALUES.items()):
        grid = published_matrix(n)
        value = grid_service.objective(grid)
        conditions = construction_service.check_conditions(grid)
        status = "ok" if value == target else "mismatch"
        out.append(f"n={n} objective {value} published {target} {status} conditions {_format_conditions(conditions)}\n")
        out.append(format_text(grid))
    return "".join(out)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="matpow", description="Extremal arrangements of 1..n^2 maximizing s(A^2)")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("construct", help="print the border construction")
    p.add_argument("n", type=int)
    p.add_argument("--primed", action="store_true", help="outer border without interchanges")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(handler=cmd_construct)

    p = sub.add_parser("bounds", help="exact bounds on p_n")
    p.add_argument("n", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=cmd_bounds)

    p = sub.add_parser("objective", help="objective, margins and conditions of a matrix file")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=cmd_objective)

    p = sub.add_parser("search", help="multi-restart hill climbing")
    p.add_argument("n", type=int)
    p.add_argument("--restarts", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--policy", choices=[m.value for m in MovePolicy], default=MovePolicy.BEST.value)
    p.add_argument("--construction-seed", action="store_true", help="restart 0 starts from the construction")
    p.add_argument("--max-iter", type=int, default=None)
    p.add_argument("--progress", action="store_true", help="emit one JSON line per restart")
    p.set_defaults(handler=cmd_search)

    p = sub.add_parser("oracle", help="exhaustive p_n for n <= 3")
    p.add_argument("n", type=int)
    p.set_defaults(handler=cmd_oracle)

    p = sub.add_parser("table", help="bounds table for n = 1..n_max")
    p.add_argument("n_max", type=int)
    p.add_argument("--csv", action="store_true")
    p.add_argument("--restarts", type=int, default=None, help="add a search_best column")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(handler=cmd_table)

    p = sub.add_parser("residual", help="stationarity residual of a real matrix")
    p.add_argument("file")
    p.add_argument("--lambda", dest="lam", type=float, required=True)
    p.add_argument("--mu", type=float, required=True)
    p.add_argument("--m", type=int, default=2)
    p.set_defaults(handler=cmd_residual)

    p = sub.add_parser("known", help="published search matrices and their objectives")
    p.set_defaults(handler=cmd_known)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Run one subcommand; returns the process exit code."""
    try:
        args = build_parser().parse_args(argv)
        sys.stdout.write(args.handler(args))
    except MatpowException as e:
        app_logger.debug(f"{e.code}: {e.details}")
        sys.stderr.write(format_error_line(e) + "\n")
        return e.exit_code
    except PydanticValidationError as e:
        # out-of-range arguments (restarts < 1, m < 2, ...)
        sys.stderr.write(format_error_line(UsageError(_describe_validation(e))) + "\n")
        return UsageError.exit_code
    except ValueError as e:
        sys.stderr.write(format_error_line(UsageError(str(e).splitlines()[0])) + "\n")
        return UsageError.exit_code
    return 0


if __name__ == "__main__":
    sys.exit(main())
