import itertools
import json
import random

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from oracles import naive_twins, nx_distances, nx_graph
from zdlab.graph import (UNREACHABLE, FamilyClass, Graph, GraphError, all_pairs_distances,
                         classify_family, cut_vertices, degree_sequence, diameter, export,
                         family_matches, girth, has_degree_one_vertex, import_edge_list,
                         import_json, is_connected, min_degree, random_connected_graph,
                         twin_classes)


@st.composite
def graphs(draw, max_n=9, connected=False):
    n = draw(st.integers(1 if connected else 0, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    edges = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    if connected:
        tree = [(draw(st.integers(0, v - 1)), v) for v in range(1, n)]
        edges = sorted(set(edges) | set(tree))
    return Graph.from_edges(n, edges)


def path(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n):
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def complete_bipartite(a, b):
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def test_construction_errors():
    with pytest.raises(GraphError, match="self-loop"):
        Graph.from_edges(2, [(1, 1)])
    with pytest.raises(GraphError):
        Graph.from_edges(2, [(0, 2)])
    with pytest.raises(GraphError, match="asymmetric"):
        Graph(2, [0b10, 0])
    with pytest.raises(GraphError):
        Graph(2, [0, 0], ["a"])


def test_from_matrix_matches_edges():
    mat = np.zeros((70, 70), dtype=bool)
    for u, v in [(0, 69), (3, 64), (10, 11)]:
        mat[u, v] = mat[v, u] = True
    assert Graph.from_matrix(mat) == Graph.from_edges(70, [(0, 69), (3, 64), (10, 11)])


def test_distance_examples():
    d = all_pairs_distances(path(3))
    assert d.tolist() == [[0, 1, 2], [1, 0, 1], [2, 1, 0]]
    G = Graph.from_edges(2, [])
    assert all_pairs_distances(G)[0, 1] == UNREACHABLE
    assert not is_connected(G) and diameter(G) == UNREACHABLE


def test_small_cases():
    one = Graph(1, [0])
    assert diameter(one) == 0 and girth(one) is None and is_connected(one)
    with pytest.raises(GraphError):
        diameter(Graph(0, []))
    with pytest.raises(GraphError):
        min_degree(Graph(0, []))
    assert classify_family(Graph(0, [])) == FamilyClass("Empty")
    assert classify_family(one) == FamilyClass("SingleVertex")


@settings(max_examples=200, deadline=None)
@given(graphs())
def test_invariants_match_networkx(G):
    H = nx_graph(G)
    d = nx_distances(H)
    D = G.distances
    for u in range(G.n):
        for v in range(G.n):
            assert D[u, v] == d[u].get(v, UNREACHABLE)
    assert is_connected(G) == (G.n == 0 or nx.is_connected(H))
    if G.n and nx.is_connected(H):
        assert diameter(G) == nx.diameter(H)
    g = nx.girth(H)
    assert girth(G) == (None if g == float("inf") else g)
    assert (girth(G) is None) == (G.n == 0 or nx.is_forest(H))
    assert cut_vertices(G) == set(nx.articulation_points(H))
    assert degree_sequence(G) == sorted((deg for _, deg in H.degree), reverse=True)
    assert has_degree_one_vertex(G) == any(deg == 1 for _, deg in H.degree)
    assert sorted(G.edges()) == sorted(tuple(sorted(e)) for e in H.edges)


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=8, connected=True))
def test_twin_classes_match_definition(G):
    classes = twin_classes(G)
    assert sorted(v for c in classes for v in c) == list(range(G.n))
    pairs = naive_twins(nx_graph(G))
    for c in classes:
        for u, v in itertools.combinations(c, 2):
            assert frozenset((u, v)) in pairs
    for cu, cv in itertools.combinations(classes, 2):
        assert frozenset((cu[0], cv[0])) not in pairs


def test_twin_examples():
    assert all(len(c) == 1 for c in twin_classes(path(5)))
    assert twin_classes(complete(4)) == [[0, 1, 2, 3]]
    assert twin_classes(complete_bipartite(2, 3)) == [[0, 1], [2, 3, 4]]


@pytest.mark.parametrize("G, want", [
    (path(2), "Path(2)"),
    (path(3), "Path(3)"),
    (path(6), "Path(6)"),
    (cycle(3), "Cycle(3)"),
    (cycle(4), "Cycle(4)"),
    (cycle(7), "Cycle(7)"),
    (complete(4), "Complete(4)"),
    (complete_bipartite(4, 2), "CompleteBipartite(2,4)"),
    (complete_bipartite(1, 5), "CompleteBipartite(1,5)[star]"),
    (Graph.from_edges(4, [(0, 1), (2, 3)]), "Other"),
    (Graph.from_edges(4, [(0, 1), (1, 2), (2, 0), (2, 3)]), "Other"),
])
def test_classify(G, want):
    assert str(classify_family(G)) == want


def test_family_matches_ignores_precedence():
    assert family_matches(cycle(3)) == {"Cycle", "Complete"}
    assert family_matches(cycle(4)) == {"Cycle", "CompleteBipartite"}
    assert family_matches(path(3)) == {"Path", "CompleteBipartite"}


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=9))
def test_export_round_trip(G):
    H = import_json(export(G, "json"))
    assert H == G
    if G.edge_count:
        E = import_edge_list(export(G, "edge-list"))
        relabel = lambda K: {frozenset((K.labels[u], K.labels[v])) for u, v in K.edges()}
        assert relabel(E) == relabel(G)
    dot = export(G, "dot", "g")
    assert dot.count(" -- ") == G.edge_count
    assert dot.count("[label=") == G.n


def test_export_examples():
    one = export(Graph(1, [0], ["x"]), "dot", "single")
    assert one == 'graph "single" {\n  0 [label="x"];\n}\n'
    G = Graph.from_edges(3, [(0, 1), (1, 2)], ["2", "4", "6"])
    assert export(G, "edge-list") == "2 4\n4 6\n"
    data = json.loads(export(G, "json"))
    assert data == {"n": 3, "labels": ["2", "4", "6"], "edges": [[0, 1], [1, 2]]}
    with pytest.raises(GraphError):
        export(G, "png")


def test_import_errors():
    with pytest.raises(GraphError):
        import_edge_list("a b c\n")
    with pytest.raises(GraphError):
        import_json('{"edges": []}')
    G = import_edge_list("# comment\nx y\n\ny z  # trailing\n")
    assert G.labels == ("x", "y", "z") and G.edges() == [(0, 1), (1, 2)]


def test_random_connected_graph():
    rng = random.Random(7)
    for _ in range(50):
        n = rng.randint(1, 12)
        G = random_connected_graph(n, rng)
        assert G.n == n and is_connected(G)
    a = random_connected_graph(9, random.Random(3))
    b = random_connected_graph(9, random.Random(3))
    assert a == b
