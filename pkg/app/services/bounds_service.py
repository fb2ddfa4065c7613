"""
Exact bounds on p_n and the Lagrange stationarity diagnostics.

Every bound on p_n is an exact integer or rational; floats only appear in the
residual and mu diagnostics.
"""
from fractions import Fraction
from numbers import Rational
from typing import Optional, Union

import numpy as np

from core.arithmetic import as_fraction, checked, checked_fraction, exact_div
from core.config import settings
from core.exceptions import ValidationError
from models.schemas import BoundGap, BoundsReport, RealMatrix, StationarityProbe
from services.reference_data import best_known, known_exact

Number = Union[Rational, float]


def permutation_sums(n: int):
    """(s, q) of any permutation grid of side n."""
    size = n * n
    s = checked(size * (size + 1) // 2, "entry sum")
    q = checked(size * (size + 1) * (2 * size + 1) // 6, "square entry sum")
    return s, q


def _require_n(n: int) -> None:
    if n < 1:
        raise ValidationError(f"n must be positive, got {n}", {"n": n})


class BoundsService:
    """Service for the bound formulas on p_n."""

    @staticmethod
    def ub_general(s: Number, q: Number, n: int) -> Fraction:
        """s^2/n + (n/2)|q - s^2/n^2|, exactly.

        Bounds s(A^2) for every real n x n matrix with entry sum s and
        square sum q. Floats are converted to their exact binary value.
        """
        _require_n(n)
        s, q = as_fraction(s), as_fraction(q)
        mean_part = s * s / n
        spread = abs(q - s * s / (n * n))
        return checked_fraction(mean_part + Fraction(n, 2) * spread, "general upper bound")

    def ub_pn(self, n: int) -> Fraction:
        """n^3(n^2+1)(7n^2+5)/24."""
        _require_n(n)
        numerator = checked(n ** 3 * (n * n + 1) * (7 * n * n + 5), "upper bound numerator")
        return checked_fraction(Fraction(numerator, 24), "upper bound")

    @staticmethod
    def lb_pn(n: int) -> int:
        """n(240n^6+28n^5+364n^4+210n^2-28n+26-105((-1)^n+1))/840."""
        _require_n(n)
        parity_term = 105 * ((-1) ** n + 1)
        inner = 240 * n ** 6 + 28 * n ** 5 + 364 * n ** 4 + 210 * n ** 2 - 28 * n + 26 - parity_term
        return exact_div(checked(n * inner, "lower bound numerator"), 840, "lower bound")

    @staticmethod
    def trivial_lb(n: int) -> Fraction:
        """s^2/n - (n/2)(q - s^2/n^2) for permutation grids (mu = -n/2)."""
        _require_n(n)
        s, q = permutation_sums(n)
        s2 = Fraction(s * s)
        return checked_fraction(s2 / n - Fraction(n, 2) * (q - s2 / (n * n)), "trivial lower bound")

    @staticmethod
    def lambda_from_mu(s: Number, n: int, mu: float) -> float:
        """2s(n - mu)/n^2."""
        _require_n(n)
        return 2.0 * float(s) * (n - mu) / (n * n)

    @staticmethod
    def stationarity_residual(probe: StationarityProbe) -> float:
        """Frobenius norm of the order-m Lagrange condition's violation.

        sum_{r=0}^{m-1} (J (X^T)^{m-1-r}) o ((X^T)^r J) - lambda J - 2 mu X,
        where o is the Hadamard product.
        """
        x = probe.x.to_array()
        n = x.shape[0]
        xt = x.T
        ones = np.ones((n, n))
        # powers[p] = (X^T)^p
        powers = [np.eye(n)]
        for _ in range(probe.m - 1):
            powers.append(powers[-1] @ xt)
        total = np.zeros((n, n))
        for r in range(probe.m):
            total += (ones @ powers[probe.m - 1 - r]) * (powers[r] @ ones)
        residual = total - probe.lam * ones - 2.0 * probe.mu * x
        return float(np.linalg.norm(residual, "fro"))

    def is_stationary(self, probe: StationarityProbe) -> bool:
        """Residual within settings.real_tolerance."""
        return self.stationarity_residual(probe) <= settings.real_tolerance

    @staticmethod
    def mu_implied(matrix: RealMatrix) -> Optional[float]:
        """(s(A^2) - s^2/n) / (q - s^2/n^2), or None when the variance vanishes."""
        a = matrix.to_array()
        n = matrix.n
        s = float(a.sum())
        q = float((a * a).sum())
        square_sum = float((a @ a).sum())
        denominator = q - s * s / (n * n)
        if abs(denominator) <= settings.mu_denominator_eps:
            return None
        return (square_sum - s * s / n) / denominator

    def bound_gap(self, n: int, value: int) -> BoundGap:
        """How far a value sits above lb_pn and below ub_pn."""
        upper = self.ub_pn(n)
        below = upper - value
        return BoundGap(
            n=n,
            value=value,
            above_lower=value - self.lb_pn(n),
            below_upper=below,
            relative_to_upper=float(below / upper),
        )

    def report(self, n: int) -> BoundsReport:
        """All bounds for one n."""
        lower = self.lb_pn(n)
        best = best_known(n)
        return BoundsReport(
            n=n,
            lower=lower,
            trivial_lower=self.trivial_lb(n),
            upper=self.ub_pn(n),
            known_exact=known_exact(n),
            best_known=best,
            gap_to_upper=self.bound_gap(n, lower if best is None else best).below_upper,
        )


# Global service instance
bounds_service = BoundsService()
