"""Beta-packing sets: the property, maximality, exact solvers and the beta-profile.

A proper set ``S`` has the beta-packing property when every vertex outside
it has at most a ``beta`` fraction of its neighbours in ``S``. The
property is neither upward nor downward closed, so maximality has to be
decided by searching over multi-vertex extensions.

Internally sets are bitmasks over vertex indices. All ratio comparisons
are integer cross-multiplications.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable

from .config import METHODS, check_cap
from .errors import InputError, InvariantViolation
from .graph import Graph, as_vertex_set, is_connected_induced, mask_of, members_of
from .rational import check_unit_ratio, format_ratio

__all__ = [
    "PackingSolveResult",
    "PackingProfile",
    "satisfies_packing",
    "threshold",
    "is_packing_set",
    "beta_pack_number",
    "enumerate_maximal_packings",
    "interesting_betas",
    "packing_profile",
    "complement_connected",
]


def _sorted_key(S) -> tuple[int, ...]:
    return tuple(sorted(S))


@dataclass(frozen=True)
class PackingSolveResult:
    value: int
    witness: frozenset[int]
    beta: Fraction
    method: str
    n: int

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "beta": format_ratio(self.beta),
            "value": self.value,
            "witness": sorted(self.witness),
            "method": self.method,
        }


@dataclass(frozen=True)
class PackingProfile:
    """Right-continuous step function beta -> beta-pack(G) on (0, 1].

    Only jump points are stored. The value is 0 below the first breakpoint.
    A breakpoint at 0 appears only for graphs where nonempty sets already
    have threshold 0 (graphs with an isolated component).
    """

    breakpoints: tuple[Fraction, ...]
    values: tuple[int, ...]

    def value_at(self, beta) -> int:
        beta = Fraction(beta)
        i = bisect_right(self.breakpoints, beta)
        return self.values[i - 1] if i else 0

    def to_dict(self) -> dict:
        return {
            "breakpoints": [format_ratio(b) for b in self.breakpoints],
            "values": list(self.values),
        }


# ---------------------------------------------------------------------------
# mask-level primitives

def _violates(G: Graph, smask: int, num: int, den: int, v: int) -> bool:
    return den * (G.masks[v] & smask).bit_count() > num * G.degrees[v]


def _satisfies_mask(G: Graph, smask: int, num: int, den: int) -> bool:
    masks, degs = G.masks, G.degrees
    for v in range(G.n):
        if not (smask >> v) & 1 and den * (masks[v] & smask).bit_count() > num * degs[v]:
            return False
    return True


def _threshold_mask(G: Graph, smask: int) -> tuple[int, int]:
    """Largest outside ratio as an unreduced ``(num, den)`` pair."""
    best_a, best_b = 0, 1
    masks, degs = G.masks, G.degrees
    for v in range(G.n):
        if (smask >> v) & 1 or not degs[v]:
            continue
        a = (masks[v] & smask).bit_count()
        if a * best_b > best_a * degs[v]:
            best_a, best_b = a, degs[v]
    return best_a, best_b


def _outside_disconnected(G: Graph, outside: int) -> bool:
    if outside & (outside - 1) == 0:
        return False
    start = outside & -outside
    seen = start
    frontier = start
    while frontier:
        v = frontier.bit_length() - 1
        frontier &= ~(1 << v)
        new = G.masks[v] & outside & ~seen
        seen |= new
        frontier |= new
    return seen != outside


def _has_proper_extension(G: Graph, smask: int, num: int, den: int) -> bool:
    """Is there a T with S < T < V that keeps the property?

    Adding a whole component of V-S never changes the counts seen by the
    other components, so a disconnected complement answers immediately.
    Otherwise search every split of V-S into (added, left outside), pruning
    as soon as a left-outside vertex already sees too much: its count can
    only grow as more vertices are added.
    """
    outside = G.full_mask & ~smask
    if _outside_disconnected(G, outside):
        return True
    verts = [v for v in range(G.n) if (outside >> v) & 1]
    k = len(verts)

    def search(i: int, cur: int, kept_out: int) -> bool:
        if i == k:
            return cur != smask and kept_out != 0
        v = verts[i]
        # add v: every kept-out neighbour of v gains one
        nxt = cur | (1 << v)
        ok = True
        pending = G.masks[v] & kept_out
        while pending:
            u = pending.bit_length() - 1
            pending &= ~(1 << u)
            if _violates(G, nxt, num, den, u):
                ok = False
                break
        if ok and search(i + 1, nxt, kept_out):
            return True
        # leave v outside
        if not _violates(G, cur, num, den, v) and search(i + 1, cur, kept_out | (1 << v)):
            return True
        return False

    return search(0, smask, 0)


# ---------------------------------------------------------------------------
# public operations

def satisfies_packing(G: Graph, S: Iterable[int], beta) -> bool:
    """Whether every vertex outside ``S`` has at most ``beta`` of its neighbours in ``S``.

    Properness is not checked here.
    """
    beta = check_unit_ratio(beta)
    S = as_vertex_set(G, S)
    return _satisfies_mask(G, mask_of(S), beta.numerator, beta.denominator)


def threshold(G: Graph, S: Iterable[int]) -> Fraction:
    """The least beta at which ``S`` has the packing property.

    ``0`` when no outside vertex has a neighbour in ``S``.
    """
    S = as_vertex_set(G, S)
    if len(S) == G.n:
        raise InputError("threshold needs at least one vertex outside S")
    a, b = _threshold_mask(G, mask_of(S))
    return Fraction(a, b)


def is_packing_set(G: Graph, S: Iterable[int], beta, cap: int | None = None) -> bool:
    """Proper, has the property, and no proper strict superset has it."""
    beta = check_unit_ratio(beta)
    S = as_vertex_set(G, S)
    if len(S) >= G.n:
        return False
    num, den = beta.numerator, beta.denominator
    smask = mask_of(S)
    if not _satisfies_mask(G, smask, num, den):
        return False
    check_cap(G.n - len(S), cap, "maximality check")
    return not _has_proper_extension(G, smask, num, den)


def _pack_brute_force(G: Graph, num: int, den: int) -> int:
    # combinations() yields lexicographic order, so the first hit is the witness
    for k in range(G.n - 1, -1, -1):
        for combo in combinations(range(G.n), k):
            smask = mask_of(combo)
            if _satisfies_mask(G, smask, num, den):
                return smask
    raise InvariantViolation("the empty set always has the packing property")


def _pack_branch_and_bound(G: Graph, num: int, den: int) -> int:
    n = G.n
    masks, degs = G.masks, G.degrees
    best_size = -1
    best_mask = 0

    def over(v: int, smask: int) -> bool:
        return den * (masks[v] & smask).bit_count() > num * degs[v]

    # include-first DFS visits equal-size sets in lexicographic order;
    # only strict improvements are kept, so the first maximum wins
    def search(i: int, smask: int, out: int, size: int) -> None:
        nonlocal best_size, best_mask
        if min(size + n - i, n - 1) <= best_size:
            return
        if i == n:
            if size < n:
                best_size, best_mask = size, smask
            return
        nxt = smask | (1 << i)
        pending = masks[i] & out
        ok = True
        while pending:
            u = pending.bit_length() - 1
            pending &= ~(1 << u)
            if over(u, nxt):
                ok = False
                break
        if ok:
            search(i + 1, nxt, out, size + 1)
        if not over(i, smask):
            search(i + 1, smask, out | (1 << i), size)

    search(0, 0, 0, 0)
    if best_size < 0:
        raise InvariantViolation("branch and bound found no proper property set")
    return best_mask


def beta_pack_number(
    G: Graph, beta, method: str = "branch_and_bound", cap: int | None = None
) -> PackingSolveResult:
    """Maximum cardinality of a beta-packing set of ``G``.

    Any maximum-cardinality proper set with the property is automatically
    maximal, so neither method checks maximality. The witness is the
    lexicographically smallest maximum set.
    """
    if G.n == 0:
        raise InputError("beta-pack is undefined for the empty graph")
    beta = check_unit_ratio(beta)
    if method not in METHODS:
        raise InputError(f"unknown method {method!r}; choose from {METHODS}")
    check_cap(G.n, cap, "beta_pack_number")
    num, den = beta.numerator, beta.denominator
    if method == "brute_force":
        smask = _pack_brute_force(G, num, den)
    else:
        smask = _pack_branch_and_bound(G, num, den)
    witness = members_of(smask)
    if len(witness) >= G.n or not _satisfies_mask(G, smask, num, den):
        raise InvariantViolation(f"{method} returned an invalid witness {sorted(witness)}")
    return PackingSolveResult(len(witness), witness, beta, method, G.n)


def _property_sets(G: Graph, num: int, den: int) -> list[int]:
    """All proper sets with the property, as masks."""
    n = G.n
    masks, degs = G.masks, G.degrees
    found: list[int] = []

    def over(v: int, smask: int) -> bool:
        return den * (masks[v] & smask).bit_count() > num * degs[v]

    def search(i: int, smask: int, out: int) -> None:
        if i == n:
            if out:
                found.append(smask)
            return
        nxt = smask | (1 << i)
        pending = masks[i] & out
        while pending:
            u = pending.bit_length() - 1
            pending &= ~(1 << u)
            if over(u, nxt):
                break
        else:
            search(i + 1, nxt, out)
        if not over(i, smask):
            search(i + 1, smask, out | (1 << i))

    search(0, 0, 0)
    return found


def enumerate_maximal_packings(G: Graph, beta, cap: int | None = None) -> list[frozenset[int]]:
    """Every maximal beta-packing set, largest first, ties in lexicographic order."""
    if G.n == 0:
        raise InputError("graph has no vertices")
    beta = check_unit_ratio(beta)
    check_cap(G.n, cap, "enumerate_maximal_packings")
    family = _property_sets(G, beta.numerator, beta.denominator)
    family.sort(key=lambda m: -m.bit_count())
    # a non-maximal set sits below some maximal one, so comparing against
    # maximal sets found at larger sizes is enough
    maximal: list[int] = []
    for smask in family:
        if not any(smask & t == smask and t != smask for t in maximal):
            maximal.append(smask)
    out = [members_of(m) for m in maximal]
    out.sort(key=lambda s: (-len(s), _sorted_key(s)))
    return out


def interesting_betas(G: Graph) -> list[Fraction]:
    """Candidate jump points ``k/d`` for each positive vertex degree ``d``, plus 1."""
    if G.n == 0:
        raise InputError("graph has no vertices")
    vals = {Fraction(1)}
    for d in set(G.degrees):
        if d >= 1:
            vals.update(Fraction(k, d) for k in range(1, d + 1))
    return sorted(vals)


def packing_profile(G: Graph, cap: int | None = None) -> PackingProfile:
    """The exact step function beta -> beta-pack(G) from a single subset sweep.

    For each cardinality k the smallest threshold over k-sets is the point
    from which k becomes attainable.
    """
    if G.n == 0:
        raise InputError("graph has no vertices")
    check_cap(G.n, cap, "packing_profile")
    n = G.n
    best: list[tuple[int, int] | None] = [None] * n
    for smask in range(G.full_mask):
        k = smask.bit_count()
        a, b = _threshold_mask(G, smask)
        cur = best[k]
        if cur is None or a * cur[1] < cur[0] * b:
            best[k] = (a, b)
    first_at = {k: Fraction(*t) for k, t in enumerate(best) if t is not None}
    breakpoints: list[Fraction] = []
    values: list[int] = []
    current = 0
    for t in sorted(set(first_at.values())):
        reach = max(k for k, tk in first_at.items() if tk <= t)
        if reach > current:
            breakpoints.append(t)
            values.append(reach)
            current = reach
    return PackingProfile(tuple(breakpoints), tuple(values))


def complement_connected(G: Graph, S: Iterable[int]) -> bool:
    S = as_vertex_set(G, S)
    return is_connected_induced(G, set(range(G.n)) - S)
