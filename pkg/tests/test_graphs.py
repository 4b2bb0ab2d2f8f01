import pytest

from graphbraid.families import (complete, complete_bipartite, cycle_graph,
                                 path_graph, rose, star3, star4, sun, theta,
                                 tripod, two_triangle_wedge, build_family)
from graphbraid.graphs import (Graph, GraphError, Subgraph, abrams_sufficient,
                               chordless_cycles, disjoint_cycle_pairs, ekey,
                               graph_to_dot, graph_to_text, load_dot,
                               load_graph_text, recognize_shape,
                               subdivide_for)


def test_ekey_is_sorted():
    assert ekey("b", "a") == ("a", "b") == ekey("a", "b")


def test_loop_edge_rejected():
    with pytest.raises(GraphError):
        Graph({"a": ("u", "u")})


def test_parallel_edges_rejected():
    with pytest.raises(GraphError):
        Graph({"a": ("u", "v"), "b": ("v", "u")})


def test_basic_queries():
    g = star3()
    assert g.num_vertices() == 4
    assert g.num_edges() == 3
    assert g.degree("w") == 3
    assert sorted(g.neighbors("w")) == ["x", "y", "z"]
    assert g.essential_vertices() == ("w",)
    assert sorted(g.leaves()) == ["x", "y", "z"]
    assert g.betti1() == 0
    assert g.is_connected()


def test_betti_and_girth():
    assert complete(5).betti1() == 6
    assert complete(5).girth() == 3
    assert cycle_graph(7).girth() == 7
    assert path_graph(4).girth() is None
    assert theta().betti1() == 2


def test_components():
    g = Graph({"a": ("u1", "u2"), "b": ("v1", "v2")})
    comps = g.components()
    assert sorted(sorted(c) for c in comps) == [["u1", "u2"], ["v1", "v2"]]


def test_distances():
    g = path_graph(5)
    assert g.distance("0", "4") == 4
    assert g.distance("2", "2") == 0


def test_subdivide_turns_triangle_into_hexagon():
    g = cycle_graph(3).subdivide(1)
    assert g.num_vertices() == 6
    assert g.num_edges() == 6
    assert "cycle" in recognize_shape(g)


def test_subdivide_keeps_original_vertices():
    g = star3().subdivide(2)
    assert {"w", "x", "y", "z"} <= set(g.vertices)
    assert g.num_edges() == 9


@pytest.mark.parametrize("g,n,changed", [
    (complete(5), 2, False),
    (cycle_graph(3), 2, False),
    (cycle_graph(3), 3, True),
    (star3(), 2, False),
    (star3(), 3, True),
])
def test_subdivide_for(g, n, changed):
    gg = subdivide_for(g, n)
    assert abrams_sufficient(gg, n)
    assert (gg.num_vertices() != g.num_vertices()) == changed


def test_subdivide_for_triangle_three_particles():
    gg = subdivide_for(cycle_graph(3), 3)
    assert gg.num_vertices() >= 4
    assert "cycle" in recognize_shape(gg)


def test_too_few_vertices_rejected():
    lone = Graph({}, vertices=["v"])
    with pytest.raises(GraphError):
        subdivide_for(lone, 2)


def test_segment_grows_to_host_particles():
    gg = subdivide_for(path_graph(2), 3)
    assert gg.num_vertices() >= 3
    assert "segment" in recognize_shape(gg)


def test_chordless_cycles():
    assert len(chordless_cycles(complete(4))) == 4
    assert len(chordless_cycles(cycle_graph(6))) == 1
    assert len(chordless_cycles(theta())) == 3
    assert chordless_cycles(path_graph(4)) == []


def test_disjoint_cycle_pairs():
    assert not disjoint_cycle_pairs(complete(4))
    assert not disjoint_cycle_pairs(complete(5))
    assert disjoint_cycle_pairs(complete(6))
    two = Graph({"a1": ("u1", "v1"), "a2": ("v1", "w1"), "a3": ("w1", "u1"),
                 "b1": ("u2", "v2"), "b2": ("v2", "w2"), "b3": ("w2", "u2"),
                 "m": ("u1", "u2")})
    assert disjoint_cycle_pairs(two)


@pytest.mark.parametrize("g,expected", [
    (path_graph(4), {"segment", "tree", "rose"}),
    (cycle_graph(5), {"cycle", "rose", "sun", "pulsar"}),
    (star3(), {"star3", "tree", "rose"}),
    (rose(2), {"rose", "pulsar"}),
    (sun(4, arms=2), {"sun", "pulsar"}),
    (theta(), {"pulsar"}),
    (complete(5), {"other"}),
])
def test_recognize_shape(g, expected):
    assert set(recognize_shape(g)) == expected


def test_h_tree_is_only_a_tree():
    g = Graph({"m": ("u", "v"), "a1": ("u", "x1"), "a2": ("u", "x2"),
               "b1": ("v", "y1"), "b2": ("v", "y2")})
    assert set(recognize_shape(g)) == {"tree"}


def test_text_round_trip():
    g = two_triangle_wedge()
    h = load_graph_text(graph_to_text(g))
    assert set(h.vertices) == set(g.vertices)
    assert set(h.edge_keys) == set(g.edge_keys)


def test_dot_round_trip():
    g = tripod()
    h = load_dot(graph_to_dot(g))
    assert set(h.vertices) == set(g.vertices)
    assert set(h.edge_keys) == set(g.edge_keys)


def test_dot_highlights_essential_vertices():
    dot = graph_to_dot(star4())
    assert 'fillcolor' in dot
    assert dot.count("--") == 4


def test_subgraph_validation():
    g = complete(4)
    sub = Subgraph.induced_on(g, {"0", "1", "2"})
    assert len(sub.edges) == 3
    with pytest.raises(GraphError):
        Subgraph(g, frozenset({"0"}), frozenset({ekey("0", "1")}))
    with pytest.raises(GraphError):
        Subgraph.induced_on(g, {"0", "9"})


def test_subgraph_algebra():
    g = complete(5)
    a = Subgraph.induced_on(g, {"0", "1", "2"})
    b = Subgraph.induced_on(g, {"2", "3", "4"})
    assert a.union(b).vertices == frozenset("01234")
    assert a.intersection(b).vertices == frozenset({"2"})
    assert not a.intersection(b).edges
    assert Subgraph.induced_on(g, g.vertices).is_whole_parent()


def test_build_family_aliases():
    assert build_family("K5").num_vertices() == 5
    assert build_family("K3,3").num_edges() == 9
    assert build_family("P4").num_vertices() == 4
    assert build_family("C6").num_edges() == 6
    assert build_family("@rose(2, 1)").betti1() == 2
    with pytest.raises(GraphError):
        build_family("@nosuch(1)")
    with pytest.raises(GraphError):
        build_family("whatever")


def test_complete_bipartite_shape():
    g = complete_bipartite(3, 3)
    assert g.num_vertices() == 6
    assert g.num_edges() == 9
    assert g.girth() == 4
