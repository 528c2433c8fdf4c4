"""Closed-form beta-pack values for paths, cycles and complete (multi)partite graphs.

Each evaluator reports ``applicable=False`` instead of guessing when the
inputs fall outside the hypotheses the formula was proved under. The two
alpha-domination formulas at the bottom are the known values used when
comparing the two parameters.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .rational import ceil_mul, check_unit_ratio, floor_mul

__all__ = [
    "ClosedFormResult",
    "path_formula",
    "cycle_formula",
    "complete_bipartite_formula",
    "multipartite_beta1_formula",
    "naive_floor_sum",
    "gamma_path_one_third",
    "gamma_complete_bipartite",
]

FORMULA_IDS = ("path", "cycle", "complete_bipartite", "multipartite_beta1")


@dataclass(frozen=True)
class ClosedFormResult:
    value: int
    formula_id: str
    applicable: bool = True


def _three_regimes(n: int, beta: Fraction) -> int:
    if beta < Fraction(1, 2):
        return 0
    if beta < 1:
        return n - 2
    return n - 1


def path_formula(n: int, beta) -> ClosedFormResult:
    """P_n by order: 0 below 1/2, n-2 on [1/2, 1), n-1 at 1. Needs n >= 2."""
    beta = check_unit_ratio(beta)
    if n < 2:
        return ClosedFormResult(0, "path", applicable=False)
    return ClosedFormResult(_three_regimes(n, beta), "path")


def cycle_formula(n: int, beta) -> ClosedFormResult:
    beta = check_unit_ratio(beta)
    if n < 3:
        return ClosedFormResult(0, "cycle", applicable=False)
    return ClosedFormResult(_three_regimes(n, beta), "cycle")


def complete_bipartite_formula(m: int, n: int, beta) -> ClosedFormResult:
    """floor(beta*m) + floor(beta*n) for beta < 1, m + n - 1 at beta = 1."""
    beta = check_unit_ratio(beta)
    if m < 1 or n < 1:
        return ClosedFormResult(0, "complete_bipartite", applicable=False)
    if beta == 1:
        return ClosedFormResult(m + n - 1, "complete_bipartite")
    return ClosedFormResult(floor_mul(beta, m) + floor_mul(beta, n), "complete_bipartite")


def multipartite_beta1_formula(parts) -> ClosedFormResult:
    parts = [int(p) for p in parts]
    if len(parts) < 2 or min(parts) < 1:
        return ClosedFormResult(0, "multipartite_beta1", applicable=False)
    return ClosedFormResult(sum(parts) - 1, "multipartite_beta1")


def naive_floor_sum(parts, beta) -> int:
    """Sum of floor(beta * part) -- the bipartite formula applied blindly.

    Not a valid formula for three or more parts; kept for regression checks.
    """
    beta = check_unit_ratio(beta)
    return sum(floor_mul(beta, p) for p in parts)


def gamma_path_one_third(n: int) -> int:
    """1/3-domination number of P_n: ceil(n / 3)."""
    if n < 1:
        raise ValueError("path order must be >= 1")
    return -(-n // 3)


def gamma_complete_bipartite(m: int, n: int, alpha) -> int:
    """alpha-domination number of K_{m,n}: min(ceil(alpha m) + ceil(alpha n), m), m <= n."""
    alpha = check_unit_ratio(alpha, "alpha")
    if not 1 <= m <= n:
        raise ValueError("need 1 <= m <= n")
    return min(ceil_mul(alpha, m) + ceil_mul(alpha, n), m)
