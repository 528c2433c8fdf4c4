"""Simple undirected graphs on dense vertex indices ``0..n-1``.

Graphs are immutable. Besides the neighbour sets, each graph carries the
neighbourhoods as integer bitmasks; the exhaustive solvers work on those.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator

from .errors import GraphFormatError, InputError

__all__ = [
    "Graph",
    "GraphClassSpec",
    "CLASS_KINDS",
    "as_vertex_set",
    "mask_of",
    "members_of",
    "parse_edge_list",
    "to_edge_list",
    "parse_graph6",
    "to_graph6",
    "parse_generator_spec",
    "generate",
    "is_connected_induced",
    "max_degree",
    "distinct_degrees",
]


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph.

    ``adj[v]`` is the open neighbourhood N(v). Construct with
    :meth:`from_edges` unless you already hold validated neighbour sets.
    """

    n: int
    adj: tuple[frozenset[int], ...] = field(repr=False)

    def __post_init__(self):
        if self.n < 0:
            raise InputError(f"vertex count must be nonnegative, got {self.n}")
        adj = tuple(frozenset(nb) for nb in self.adj)
        if len(adj) != self.n:
            raise InputError(f"expected {self.n} neighbour sets, got {len(adj)}")
        for v, nb in enumerate(adj):
            if v in nb:
                raise InputError(f"self-loop at vertex {v}")
            for u in nb:
                if not 0 <= u < self.n:
                    raise InputError(f"neighbour {u} of vertex {v} out of range")
                if v not in adj[u]:
                    raise InputError(f"asymmetric adjacency between {v} and {u}")
        object.__setattr__(self, "adj", adj)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) out of range for n={n}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(frozenset(s) for s in nbrs))

    @cached_property
    def masks(self) -> tuple[int, ...]:
        return tuple(sum(1 << u for u in nb) for nb in self.adj)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(nb) for nb in self.adj)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def m(self) -> int:
        return sum(self.degrees) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges as sorted ``(u, v)`` pairs with ``u < v``."""
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    def degree(self, v: int) -> int:
        return self.degrees[v]

    def __iter__(self) -> Iterator[int]:
        return iter(range(self.n))

    def __len__(self) -> int:
        return self.n


# ---------------------------------------------------------------------------
# vertex sets

def as_vertex_set(G: Graph, S: Iterable[int]) -> frozenset[int]:
    """Validate ``S`` against ``G`` and return it as a frozenset."""
    out = frozenset(S)
    for v in out:
        if not isinstance(v, int) or not 0 <= v < G.n:
            raise InputError(f"vertex {v!r} not in graph with n={G.n}")
    return out


def mask_of(S: Iterable[int]) -> int:
    mask = 0
    for v in S:
        mask |= 1 << v
    return mask


def members_of(mask: int) -> frozenset[int]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return frozenset(out)


# ---------------------------------------------------------------------------
# edge-list text

def parse_edge_list(text: str) -> Graph:
    """Parse whitespace-separated ``u v`` lines (0-indexed).

    An optional first data line holding a single integer fixes the vertex
    count; otherwise ``n`` is one more than the largest index seen. ``#``
    comment lines and blank lines are skipped. Duplicate and reversed
    edges collapse.
    """
    declared = None
    edges: list[tuple[int, int]] = []
    seen_data = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        try:
            values = [int(t) for t in tokens]
        except ValueError:
            raise GraphFormatError(f"non-numeric token in {line!r}", lineno) from None
        if any(x < 0 for x in values):
            raise GraphFormatError(f"negative vertex index in {line!r}", lineno)
        if len(values) == 1 and not seen_data:
            declared = values[0]
            seen_data = True
            continue
        seen_data = True
        if len(values) != 2:
            raise GraphFormatError(f"expected two vertex indices, got {line!r}", lineno)
        u, v = values
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", lineno)
        if declared is not None and max(u, v) >= declared:
            raise GraphFormatError(
                f"vertex {max(u, v)} out of range for declared n={declared}", lineno
            )
        edges.append((u, v))
    if declared is not None:
        n = declared
    else:
        n = max((max(e) for e in edges), default=-1) + 1
    return Graph.from_edges(n, edges)


def to_edge_list(G: Graph) -> str:
    """Serialize with an explicit vertex-count header so isolated vertices survive."""
    lines = [str(G.n)]
    lines.extend(f"{u} {v}" for u, v in G.edges())
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# graph6

_G6_HEADER = ">>graph6<<"


def _g6_values(s: str) -> list[int]:
    out = []
    for ch in s:
        c = ord(ch)
        if not 63 <= c <= 126:
            raise GraphFormatError(f"character {ch!r} outside the graph6 range")
        out.append(c - 63)
    return out


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 string (optional ``>>graph6<<`` header)."""
    s = line.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    if not s:
        raise GraphFormatError("empty graph6 string")
    data = _g6_values(s)
    if data[0] != 63:
        n, pos = data[0], 1
    elif len(data) >= 2 and data[1] != 63:
        if len(data) < 4:
            raise GraphFormatError("truncated graph6 size field")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        pos = 4
    else:
        if len(data) < 8:
            raise GraphFormatError("truncated graph6 size field")
        n = 0
        for x in data[2:8]:
            n = (n << 6) | x
        pos = 8
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    payload = data[pos:]
    if len(payload) < need:
        raise GraphFormatError(
            f"truncated graph6 payload: need {need} characters for n={n}, got {len(payload)}"
        )
    if len(payload) > need:
        raise GraphFormatError(f"trailing characters after graph6 payload for n={n}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (payload[k // 6] >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


def to_graph6(G: Graph) -> str:
    n = G.n
    if n <= 62:
        head = [n]
    elif n <= 258047:
        head = [63, (n >> 12) & 63, (n >> 6) & 63, n & 63]
    else:
        head = [63, 63] + [(n >> s) & 63 for s in (30, 24, 18, 12, 6, 0)]
    bits = [1 if i in G.adj[j] else 0 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = [int("".join(map(str, bits[k:k + 6])), 2) for k in range(0, len(bits), 6)]
    return "".join(chr(x + 63) for x in head + body)


# ---------------------------------------------------------------------------
# generators

CLASS_KINDS = ("path", "cycle", "complete", "star", "complete_bipartite", "complete_multipartite")


@dataclass(frozen=True)
class GraphClassSpec:
    """A named graph class with its order parameters, e.g. ``path:6``.

    ``star:k`` is K_{1,k}: centre 0 and ``k`` leaves.
    """

    kind: str
    params: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "params", tuple(int(p) for p in self.params))
        kind, p = self.kind, self.params
        if kind not in CLASS_KINDS:
            raise InputError(f"unknown graph class {kind!r}; choose from {', '.join(CLASS_KINDS)}")
        if kind in ("path", "complete", "cycle", "star") and len(p) != 1:
            raise InputError(f"{kind} takes exactly one order parameter")
        if kind in ("path", "complete") and p[0] < 1:
            raise InputError(f"{kind} order must be >= 1")
        if kind == "cycle" and p[0] < 3:
            raise InputError("cycle order must be >= 3")
        if kind == "star" and p[0] < 1:
            raise InputError("star needs at least one leaf")
        if kind == "complete_bipartite" and (len(p) != 2 or min(p) < 1):
            raise InputError("complete_bipartite takes two part sizes, each >= 1")
        if kind == "complete_multipartite" and (len(p) < 2 or min(p) < 1):
            raise InputError("complete_multipartite takes at least two part sizes, each >= 1")

    def __str__(self) -> str:
        return f"{self.kind}:{','.join(map(str, self.params))}"


def parse_generator_spec(text: str) -> GraphClassSpec:
    """``"complete_bipartite:4,5"`` -> GraphClassSpec."""
    kind, sep, rest = text.strip().partition(":")
    if not sep or not rest:
        raise InputError(f"generator spec {text!r} must look like kind:params")
    try:
        params = tuple(int(x) for x in rest.split(","))
    except ValueError:
        raise InputError(f"non-integer parameter in generator spec {text!r}") from None
    return GraphClassSpec(kind.strip(), params)


def _multipartite(parts) -> Graph:
    labels = []
    for idx, size in enumerate(parts):
        labels.extend([idx] * size)
    n = len(labels)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if labels[u] != labels[v]]
    return Graph.from_edges(n, edges)


def generate(spec: GraphClassSpec | str) -> Graph:
    if isinstance(spec, str):
        spec = parse_generator_spec(spec)
    kind, p = spec.kind, spec.params
    if kind == "path":
        n = p[0]
        return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])
    if kind == "cycle":
        n = p[0]
        return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])
    if kind == "complete":
        return _multipartite([1] * p[0])
    if kind == "star":
        return _multipartite([1, p[0]])
    return _multipartite(p)


# ---------------------------------------------------------------------------
# structural queries

def is_connected_induced(G: Graph, W: Iterable[int]) -> bool:
    """Whether the subgraph induced by ``W`` is connected (true for ``|W| <= 1``)."""
    W = as_vertex_set(G, W)
    if len(W) <= 1:
        return True
    start = min(W)
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for u in G.adj[v]:
            if u in W and u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == len(W)


def _require_vertices(G: Graph) -> None:
    if G.n == 0:
        raise InputError("graph has no vertices")


def max_degree(G: Graph) -> int:
    _require_vertices(G)
    return max(G.degrees)


def distinct_degrees(G: Graph) -> list[int]:
    _require_vertices(G)
    return sorted(set(G.degrees))
