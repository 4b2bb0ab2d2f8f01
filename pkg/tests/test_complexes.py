import pytest

from graphbraid.complexes import (build_uc, complex_to_dot, crossing_graph,
                                  hyperplanes, summary_dict, verify_npc)
from graphbraid.families import (complete, complete_bipartite, cycle_graph,
                                 path_graph, rose, star3)
from graphbraid.graphs import Graph, GraphError, subdivide_for
from graphbraid.oracle import cube_counts, euler_characteristic_full


def test_k5_two_particles():
    c = build_uc(complete(5), 2)
    assert c.counts() == {0: 10, 1: 30, 2: 15}
    assert c.euler_characteristic() == -5
    assert c.dimension() == 2
    assert len(c.components()) == 1
    ok, witness = verify_npc(c)
    assert ok, witness


def test_k33_two_particles():
    c = build_uc(complete_bipartite(3, 3), 2)
    assert c.counts() == {0: 15, 1: 36, 2: 18}
    assert c.euler_characteristic() == -3
    ok, _ = verify_npc(c)
    assert ok


def test_segment_two_particles_is_contractible_strip():
    c = build_uc(path_graph(3), 2)
    assert c.counts() == {0: 3, 1: 2}
    assert c.euler_characteristic() == 1
    assert len(c.components()) == 1


def test_hexagon_for_star3():
    c = build_uc(star3(), 2)
    assert c.counts() == {0: 6, 1: 6}
    assert c.euler_characteristic() == 0


def test_square_cylinder_for_c4():
    c = build_uc(cycle_graph(4), 2)
    assert c.counts() == {0: 6, 1: 8, 2: 2}
    assert c.euler_characteristic() == 0
    ok, _ = verify_npc(c)
    assert ok


def test_disconnected_graph_distributions():
    g = Graph({"a": ("u1", "u2"), "b": ("v1", "v2")})
    c = build_uc(g, 2)
    sizes = sorted(len(comp) for comp in c.components())
    assert sizes == [1, 1, 4]


def test_cube_cells_have_consistent_faces():
    c = build_uc(complete(4), 3)
    for k in c.cubes:
        for cube in c.cubes[k]:
            faces = c.cube_faces(cube)
            assert len(faces) == 2 * k
            for face in faces:
                held = c.cubes[k - 1] if k > 1 else c.edges
                assert face in held


def test_max_dim_caps_enumeration():
    full = build_uc(complete(6), 3)
    capped = build_uc(complete(6), 3, max_dim=2)
    assert capped.capped
    assert capped.counts()[2] == full.counts()[2]
    assert 3 not in capped.cubes
    with pytest.raises(GraphError):
        capped.euler_characteristic()


@pytest.mark.parametrize("g,n", [
    (complete(5), 2),
    (complete_bipartite(3, 3), 2),
    (complete(4), 3),
    (star3(), 2),
    (rose(2, 1), 2),
    (cycle_graph(6), 3),
])
def test_cube_counts_match_built_complex(g, n):
    c = build_uc(g, n)
    counts = cube_counts(g, n)
    assert {k: v for k, v in enumerate(counts) if v} == c.counts()
    assert euler_characteristic_full(g, n) == c.euler_characteristic()


def test_restriction_can_break_flag_condition():
    c = build_uc(complete(5), 2)
    sq = next(iter(c.cubes[2]))
    (e, f), residual = sq
    corner = tuple(sorted((e[1], f[1]) + residual))
    keep = [v for v in c.vertices if v != corner]
    ok, witness = verify_npc(c.restricted_to(keep))
    assert not ok
    assert witness is not None


def test_hyperplane_labels_partition_edges():
    c = build_uc(complete(5), 2)
    hps = hyperplanes(c)
    assert sum(len(h.members) for h in hps) == c.counts()[1]
    assert len(hps) == 10


def test_crossing_graph_squares():
    c = build_uc(cycle_graph(4), 2)
    cg, hps = crossing_graph(c)
    assert cg.num_vertices() == len(hps)
    assert cg.num_edges() >= 1


def test_summary_and_dot_exports():
    c = build_uc(star3(), 2)
    data = summary_dict(c)
    assert data["cells"] == {"0": 6, "1": 6}
    assert data["components"] == 1
    dot = complex_to_dot(c)
    assert dot.startswith("graph")
    assert "{w,x}" in dot


def test_build_rejects_bad_n():
    with pytest.raises(GraphError):
        build_uc(path_graph(3), 0)
