import json

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from betapack import (
    Graph,
    GraphClassSpec,
    GraphFormatError,
    InputError,
    distinct_degrees,
    generate,
    is_connected_induced,
    max_degree,
    parse_edge_list,
    parse_generator_spec,
    parse_graph6,
    to_edge_list,
    to_graph6,
)


def check_valid(G: Graph):
    for v in range(G.n):
        assert v not in G.adj[v]
        for u in G.adj[v]:
            assert 0 <= u < G.n
            assert v in G.adj[u]


def test_parse_edge_list_path():
    G = parse_edge_list("0 1\n1 2")
    assert G.n == 3 and G.edges() == [(0, 1), (1, 2)]


def test_parse_edge_list_header_only():
    G = parse_edge_list("5\n")
    assert G.n == 5 and G.m == 0


def test_parse_edge_list_dedup():
    G = parse_edge_list("0 1\n1 0\n0 1")
    assert G.m == 1 and G.n == 2


def test_parse_edge_list_comments_and_blanks():
    G = parse_edge_list("# hello\n\n4\n0 1\n\n# tail\n2 3\n")
    assert G.n == 4 and G.m == 2


@pytest.mark.parametrize(
    "text, line",
    [("0 1\n2 2\n", 2), ("3\n0 3\n", 2), ("0 x\n", 1), ("0 1 2\n", 1), ("0 -1\n", 1)],
)
def test_parse_edge_list_rejects(text, line):
    with pytest.raises(GraphFormatError) as err:
        parse_edge_list(text)
    assert err.value.line == line


@pytest.mark.parametrize("g6, n, edges", [("A_", 2, [(0, 1)]), ("D??", 5, []), ("B?", 3, [])])
def test_parse_graph6_examples(g6, n, edges):
    G = parse_graph6(g6)
    assert G.n == n and G.edges() == edges
    ref = nx.from_graph6_bytes(g6.encode())
    assert sorted(tuple(sorted(e)) for e in ref.edges()) == edges


def test_parse_graph6_header_stripped():
    assert parse_graph6(">>graph6<<A_").edges() == [(0, 1)]


@pytest.mark.parametrize("bad", ["A", "D?", "A_?", "A\x7f", "", "B "])
def test_parse_graph6_rejects(bad):
    with pytest.raises(GraphFormatError):
        parse_graph6(bad)


def test_graph6_large_size_field():
    ref = nx.path_graph(70)
    s = nx.to_graph6_bytes(ref, header=False).decode().strip()
    G = parse_graph6(s)
    assert G.n == 70 and G.m == 69
    assert to_graph6(G) == s


def test_dual_encoded_fixtures_agree(data_dir):
    for item in json.loads((data_dir / "dual_encoded.json").read_text()):
        a = parse_graph6(item["graph6"])
        b = parse_edge_list(item["edges"])
        assert (a.n, a.edges()) == (b.n, b.edges()), item["name"]
        assert to_graph6(b) == item["graph6"]


def test_corpus_matches_reference_decoder(data_dir):
    for line in (data_dir / "connected_le5.g6").read_text().splitlines():
        if line.startswith("#"):
            continue
        G = parse_graph6(line)
        ref = nx.from_graph6_bytes(line.encode())
        assert G.n == ref.number_of_nodes()
        assert set(G.edges()) == {tuple(sorted(e)) for e in ref.edges()}


@st.composite
def graphs(draw, max_n=12):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, edges)


@given(graphs())
def test_edge_list_roundtrip(G):
    H = parse_edge_list(to_edge_list(G))
    assert (H.n, H.edges()) == (G.n, G.edges())


@given(graphs(max_n=20))
def test_graph6_roundtrip(G):
    H = parse_graph6(to_graph6(G))
    assert (H.n, H.edges()) == (G.n, G.edges())


def test_generate_examples():
    P6 = generate("path:6")
    assert P6.m == 5 and P6.degrees == (1, 2, 2, 2, 2, 1)
    K45 = generate("complete_bipartite:4,5")
    assert K45.m == 20 and K45.degrees == (5,) * 4 + (4,) * 5
    K3333 = generate("complete_multipartite:3,3,3,3")
    assert K3333.n == 12 and set(K3333.degrees) == {9}


@pytest.mark.parametrize("n", range(1, 13))
def test_generated_edge_counts(n):
    assert generate(GraphClassSpec("path", (n,))).m == n - 1
    if n >= 3:
        assert generate(GraphClassSpec("cycle", (n,))).m == n
    for m in range(1, 5):
        assert generate(GraphClassSpec("complete_bipartite", (m, n))).m == m * n


@pytest.mark.parametrize(
    "spec",
    ["path:6", "cycle:7", "complete:5", "star:4", "complete_bipartite:2,3", "complete_multipartite:1,2,3"],
)
def test_generated_graphs_valid(spec):
    G = generate(spec)
    check_valid(G)
    assert str(parse_generator_spec(spec)) == spec


def test_star_is_k1n():
    S = generate("star:10")
    assert S.n == 11 and S.degrees[0] == 10 and set(S.degrees[1:]) == {1}


@pytest.mark.parametrize(
    "spec", ["path:0", "cycle:2", "complete_bipartite:0,3", "complete_multipartite:3", "wheel:5", "path", "path:a"]
)
def test_generate_rejects(spec):
    with pytest.raises(InputError):
        generate(spec)


def test_graph_constructor_rejects_asymmetry():
    with pytest.raises(InputError):
        Graph(2, (frozenset({1}), frozenset()))
    with pytest.raises(InputError):
        Graph(1, (frozenset({0}),))


def test_is_connected_induced():
    P4 = generate("path:4")
    assert is_connected_induced(P4, {0, 1})
    assert not is_connected_induced(P4, {0, 2})
    assert is_connected_induced(P4, set())
    assert is_connected_induced(P4, {3})
    with pytest.raises(InputError):
        is_connected_induced(P4, {4})


@pytest.mark.parametrize(
    "spec, delta, distinct",
    [("path:6", 2, [1, 2]), ("complete_bipartite:4,5", 5, [4, 5]), ("cycle:5", 2, [2])],
)
def test_degree_queries(spec, delta, distinct):
    G = generate(spec)
    assert max_degree(G) == delta
    assert distinct_degrees(G) == distinct


def test_degree_queries_reject_empty():
    with pytest.raises(InputError):
        max_degree(Graph.from_edges(0, []))
    with pytest.raises(InputError):
        distinct_degrees(Graph.from_edges(0, []))
