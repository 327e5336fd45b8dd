import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from iasi_powers import INF, FamilySpec, Graph, all_pairs_distance, diameter, graph_power
from iasi_powers.families import Family, FamilyError, generate
from iasi_powers.graph import EdgeListError, GraphError, format_edge_list, parse_edge_list

S = FamilySpec.of


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, k in zip(pairs, keep) if k])


def test_graph_rejects_bad_edges():
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 0)])
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 1), (1, 0)])
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 3)])


def test_wheel3_is_k4():
    g = generate(S("wheel", 3))
    assert (g.n, g.m) == (4, 6)
    assert g.is_complete()


@pytest.mark.parametrize("n", range(3, 9))
def test_helm_counts(n):
    g = generate(S("helm", n))
    assert (g.n, g.m) == (2 * n + 1, 3 * n)
    # pendant n+i hangs off rim i, hub is 2n
    assert g.adj[n + 1] == {1}
    assert g.degree(2 * n) == n


def test_complete_sun3_edge_count():
    # count by the adjacency rule: w_j ~ u_i iff j == i or j == i + 1 (mod n), plus the U clique
    n = 3
    rim = sum(1 for j in range(n) for i in range(n) if j == i or j == (i + 1) % n)
    clique = n * (n - 1) // 2
    g = generate(S("complete-sun", n))
    assert g.n == 6 and g.m == rim + clique == 9


def test_complete_split_joins_everything():
    g = generate(S("complete-split", 3, 2))
    assert g.m == 3 + 6
    assert all(g.has_edge(a, b) for a in range(3) for b in (3, 4))
    assert not g.has_edge(3, 4)


@pytest.mark.parametrize(
    "spec, expected",
    [
        (S("ladder", 4), (8, 10)),
        (S("prism", 5), (10, 15)),
        (S("grid", 2, 3), (6, 7)),
        (S("grid", 3, 4), (12, 17)),
        (S("complete-bipartite", 2, 3), (5, 6)),
    ],
)
def test_family_sizes(spec, expected):
    g = generate(spec)
    assert (g.n, g.m) == expected
    assert g.is_connected()


@pytest.mark.parametrize(
    "family, params",
    [("cycle", (2,)), ("wheel", (2,)), ("helm", (2,)), ("complete-sun", (2,)), ("path", (0,)),
     ("complete-split", (0, 1)), ("grid", (3,)), ("complete", (3, 3))],
)
def test_invalid_family_parameters(family, params):
    with pytest.raises(FamilyError):
        FamilySpec(Family(family), params)


def test_distances():
    p4 = generate(S("path", 4))
    assert all_pairs_distance(p4)[0, 3] == 3
    two = Graph.from_edges(4, [(0, 1), (2, 3)])
    assert all_pairs_distance(two)[0, 2] == INF
    c7 = generate(S("cycle", 7))
    dm = all_pairs_distance(c7)
    assert dm[0, 3] == 3 and dm[0, 4] == 3
    for k in range(7):
        assert dm[0, k] == min(k, 7 - k)


def test_diameters():
    assert diameter(Graph.complete(6)) == 1
    assert diameter(generate(S("complete-bipartite", 3, 4))) == 2
    assert diameter(generate(S("cycle", 9))) == 4
    assert diameter(Graph.from_edges(3, [(0, 1)])) == INF


def test_power_examples():
    assert graph_power(generate(S("cycle", 4)), 2) == Graph.complete(4)
    p4 = generate(S("path", 4))
    assert graph_power(p4, 1) == p4
    assert graph_power(p4, 3) == Graph.complete(4)
    with pytest.raises(GraphError):
        graph_power(p4, 0)


@settings(max_examples=150, deadline=None)
@given(graphs(), st.integers(1, 5))
def test_power_matches_networkx(g, r):
    ref = nx.power(to_nx(g), r)
    got = graph_power(g, r)
    assert got.edges == frozenset(tuple(sorted(e)) for e in ref.edges)


@settings(max_examples=150, deadline=None)
@given(graphs())
def test_distance_matrix_properties(g):
    dm = all_pairs_distance(g).dist
    ref = dict(nx.all_pairs_shortest_path_length(to_nx(g)))
    for u in range(g.n):
        assert dm[u][u] == 0
        for v in range(g.n):
            assert dm[u][v] == dm[v][u]
            assert dm[u][v] == ref[u].get(v, INF)
            for w in range(g.n):
                assert dm[u][w] <= dm[u][v] + dm[v][w]


@settings(max_examples=100, deadline=None)
@given(graphs(), st.integers(1, 6))
def test_power_monotone(g, r):
    assert graph_power(g, r).edges <= graph_power(g, r + 1).edges


@settings(max_examples=100, deadline=None)
@given(graphs())
def test_power_saturates_at_diameter(g):
    if g.n < 2 or not g.is_connected():
        return
    d = diameter(g)
    for r in range(d, d + 3):
        assert graph_power(g, r).is_complete()
    if d > 1:
        assert not graph_power(g, d - 1).is_complete()


@pytest.mark.parametrize("n", range(3, 15))
def test_power_edge_counts(n):
    for r in range(1, n - 1):
        assert graph_power(generate(S("path", n)), r).m * 2 == r * (2 * n - 1 - r)
    for r in range(1, n // 2):
        assert graph_power(generate(S("cycle", n)), r).m == r * n


@pytest.mark.parametrize("n", range(3, 12))
def test_square_edge_counts_helm_sun(n):
    assert S("helm", n, power=2).graph().m * 2 == n * (n + 9)
    assert S("complete-sun", n, power=2).graph().m * 2 == n * (3 * n + 1)


@pytest.mark.parametrize("n", range(5, 14))
def test_cycle_square_is_4_regular(n):
    assert set(S("cycle", n, power=2).graph().degrees()) == {4}


@settings(max_examples=100, deadline=None)
@given(graphs())
def test_edge_list_round_trip(g):
    assert parse_edge_list(format_edge_list(g)) == g


@pytest.mark.parametrize(
    "text, lineno",
    [
        ("", 1),
        ("3\n", 1),
        ("3 2\n0 1\n", 2),
        ("3 1\n0 0\n", 2),
        ("3 2\n0 1\n1 0\n", 3),
        ("3 1\n0 5\n", 2),
        ("3 1\n0 x\n", 2),
    ],
)
def test_edge_list_errors(text, lineno):
    with pytest.raises(EdgeListError) as info:
        parse_edge_list(text)
    assert info.value.lineno == lineno


def test_edge_list_format_is_exact():
    assert format_edge_list(generate(S("cycle", 3))) == "3 3\n0 1\n0 2\n1 2\n"
