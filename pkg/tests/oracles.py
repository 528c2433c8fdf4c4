"""Reference implementations used only by tests.

Deliberately naive: Python sets, Fraction ratios, full enumeration and a
full superset scan for maximality. Nothing here imports the solver paths
it is used to check.
"""

import random
from fractions import Fraction
from itertools import combinations


def all_subsets(n):
    for k in range(n + 1):
        for c in combinations(range(n), k):
            yield frozenset(c)


def ratio(adj, v, S):
    return Fraction(len(adj[v] & S), len(adj[v]))


def has_packing_property(adj, S, beta):
    return all(ratio(adj, v, S) <= beta for v in range(len(adj)) if v not in S and adj[v])


def is_dominating(adj, S, alpha):
    return all(ratio(adj, v, S) >= alpha for v in range(len(adj)) if v not in S and adj[v])


def maximal_family(adj, beta):
    n = len(adj)
    prop = [S for S in all_subsets(n) if len(S) < n and has_packing_property(adj, S, beta)]
    fam = [S for S in prop if not any(S < T for T in prop)]
    return sorted(fam, key=lambda s: (-len(s), sorted(s)))


def pack_value(adj, beta):
    n = len(adj)
    return max(len(S) for S in all_subsets(n) if len(S) < n and has_packing_property(adj, S, beta))


def gamma_value(adj, alpha):
    return min(len(S) for S in all_subsets(len(adj)) if is_dominating(adj, S, alpha))


def random_connected_edges(rng: random.Random, n: int, p: float):
    """Random spanning tree plus independent extra edges with probability ``p``."""
    edges = set()
    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):
        u, v = order[i], order[rng.randrange(i)]
        edges.add((min(u, v), max(u, v)))
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.add((u, v))
    return sorted(edges)


def midpoints(values):
    vals = sorted(set(values))
    return [(a + b) / 2 for a, b in zip(vals, vals[1:])]
