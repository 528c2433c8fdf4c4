"""Alpha-domination number and the side-by-side comparison with beta-pack.

Unlike packing sets, alpha-dominating sets need not be proper: ``S = V``
is allowed and always qualifies.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable

from .config import METHODS, check_cap
from .errors import InputError, InvariantViolation
from .graph import Graph, as_vertex_set, mask_of, members_of
from .packing import beta_pack_number
from .rational import check_unit_ratio, format_ratio

__all__ = [
    "DominationSolveResult",
    "ComparisonRecord",
    "satisfies_alpha_domination",
    "alpha_domination_number",
    "compare_parameters",
    "verdict_of",
]

VERDICTS = ("less", "equal", "greater")


@dataclass(frozen=True)
class DominationSolveResult:
    value: int
    witness: frozenset[int]
    alpha: Fraction
    method: str
    n: int

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "alpha": format_ratio(self.alpha),
            "value": self.value,
            "witness": sorted(self.witness),
            "method": self.method,
        }


def verdict_of(pack: int, gamma: int) -> str:
    """How beta-pack compares to gamma: ``less`` means pack < gamma."""
    if pack < gamma:
        return "less"
    if pack > gamma:
        return "greater"
    return "equal"


@dataclass(frozen=True)
class ComparisonRecord:
    value: Fraction
    gamma: int
    pack: int
    verdict: str
    gamma_witness: frozenset[int]
    pack_witness: frozenset[int]

    def to_dict(self) -> dict:
        return {
            "value": format_ratio(self.value),
            "gamma": self.gamma,
            "pack": self.pack,
            "verdict": self.verdict,
            "gamma_witness": sorted(self.gamma_witness),
            "pack_witness": sorted(self.pack_witness),
        }


def _dominates_mask(G: Graph, smask: int, num: int, den: int) -> bool:
    masks, degs = G.masks, G.degrees
    for v in range(G.n):
        if not (smask >> v) & 1 and den * (masks[v] & smask).bit_count() < num * degs[v]:
            return False
    return True


def satisfies_alpha_domination(G: Graph, S: Iterable[int], alpha) -> bool:
    """Every vertex outside ``S`` has at least ``alpha`` of its neighbours in ``S``."""
    alpha = check_unit_ratio(alpha, "alpha")
    S = as_vertex_set(G, S)
    return _dominates_mask(G, mask_of(S), alpha.numerator, alpha.denominator)


def _dom_brute_force(G: Graph, num: int, den: int) -> int:
    for k in range(G.n + 1):
        for combo in combinations(range(G.n), k):
            smask = mask_of(combo)
            if _dominates_mask(G, smask, num, den):
                return smask
    raise InvariantViolation("V itself must be alpha-dominating")


def _dom_branch_and_bound(G: Graph, num: int, den: int) -> int:
    n = G.n
    masks, degs = G.masks, G.degrees
    best_size = n + 1
    best_mask = G.full_mask

    def hopeless(v: int, smask: int, undecided: int) -> bool:
        # supersets of S stay dominating, so v fails for good only if even
        # taking every undecided neighbour leaves it short
        reach = (masks[v] & (smask | undecided)).bit_count()
        return den * reach < num * degs[v]

    def search(i: int, smask: int, out: int, size: int) -> None:
        nonlocal best_size, best_mask
        if size >= best_size:
            return
        if i == n:
            best_size, best_mask = size, smask
            return
        rest = G.full_mask & ~((1 << (i + 1)) - 1)
        search(i + 1, smask | (1 << i), out, size + 1)
        if size >= best_size:
            return
        out2 = out | (1 << i)
        touched = (masks[i] & out) | (1 << i)
        while touched:
            u = touched.bit_length() - 1
            touched &= ~(1 << u)
            if hopeless(u, smask, rest):
                return
        search(i + 1, smask, out2, size)

    search(0, 0, 0, 0)
    return best_mask


def alpha_domination_number(
    G: Graph, alpha, method: str = "branch_and_bound", cap: int | None = None
) -> DominationSolveResult:
    """Minimum size of an alpha-dominating set, lexicographically smallest witness."""
    if G.n == 0:
        raise InputError("alpha-domination is undefined for the empty graph")
    alpha = check_unit_ratio(alpha, "alpha")
    if method not in METHODS:
        raise InputError(f"unknown method {method!r}; choose from {METHODS}")
    check_cap(G.n, cap, "alpha_domination_number")
    num, den = alpha.numerator, alpha.denominator
    if method == "brute_force":
        smask = _dom_brute_force(G, num, den)
    else:
        smask = _dom_branch_and_bound(G, num, den)
    if not _dominates_mask(G, smask, num, den):
        raise InvariantViolation(f"{method} returned a non-dominating witness")
    witness = members_of(smask)
    return DominationSolveResult(len(witness), witness, alpha, method, G.n)


def compare_parameters(
    G: Graph, value, method: str = "branch_and_bound", cap: int | None = None
) -> ComparisonRecord:
    """Solve both problems at alpha = beta = ``value``."""
    value = check_unit_ratio(value, "value")
    dom = alpha_domination_number(G, value, method=method, cap=cap)
    pack = beta_pack_number(G, value, method=method, cap=cap)
    return ComparisonRecord(
        value=value,
        gamma=dom.value,
        pack=pack.value,
        verdict=verdict_of(pack.value, dom.value),
        gamma_witness=dom.witness,
        pack_witness=pack.witness,
    )
