"""Text, JSON and DOT renderings of solver results."""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable

from .graph import Graph


def dumps(payload) -> str:
    return json.dumps(payload, separators=(", ", ": "))


def show(r) -> str:
    """Human-facing ratio: ``1/2``, but ``1`` rather than ``1/1``."""
    return str(Fraction(r))


def fmt_set(S: Iterable[int]) -> str:
    return "{" + ", ".join(map(str, sorted(S))) + "}"


def table(rows: list[tuple[str, object]]) -> str:
    width = max(len(k) for k, _ in rows)
    return "\n".join(f"{k.ljust(width)}  {v}" for k, v in rows)


def outside_ratio(G: Graph, S: frozenset[int], v: int) -> Fraction:
    deg = G.degrees[v]
    if deg == 0:
        return Fraction(0)
    return Fraction(len(G.adj[v] & S), deg)


def to_dot(G: Graph, S: Iterable[int], name: str = "G", ratios: bool = True) -> str:
    """DOT source with ``S`` filled black.

    Vertices outside ``S`` carry their neighbourhood ratio as an external
    label when ``ratios`` is set.
    """
    S = frozenset(S)
    lines = [f"graph {name} {{", "  node [shape=circle];"]
    for v in range(G.n):
        if v in S:
            lines.append(f'  {v} [style=filled, fillcolor=black, fontcolor=white];')
        elif ratios:
            r = outside_ratio(G, S, v)
            lines.append(f'  {v} [xlabel="{show(r)}"];')
        else:
            lines.append(f"  {v};")
    for u, v in G.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines)


def profile_rows(profile) -> list[tuple[str, str]]:
    """Segments of a step function as (beta interval, value) rows."""
    rows = []
    edges = list(profile.breakpoints)
    vals = list(profile.values)
    if not edges or edges[0] > 0:
        upper = show(edges[0]) if edges else None
        rows.append((f"(0, {upper})" if upper else "(0, 1]", "0"))
    for i, (b, val) in enumerate(zip(edges, vals)):
        if i + 1 < len(edges):
            rows.append((f"[{show(b)}, {show(edges[i + 1])})", str(val)))
        elif b == 1:
            rows.append(("1", str(val)))
        else:
            rows.append((f"[{show(b)}, 1]", str(val)))
    return rows
