import pytest

from graphbraid.families import (complete, complete_bipartite, cycle_graph,
                                 path_graph, rose)
from graphbraid.graphs import Graph, GraphError, Subgraph
from graphbraid.relhyp import (PeripheralCollection, check_collection,
                               generate_collection, simple_cycles,
                               triangle_pair_collection)


def test_simple_cycle_counts():
    assert len(simple_cycles(complete(4))) == 7
    assert len(simple_cycles(complete(6))) == 197
    assert len(simple_cycles(complete_bipartite(4, 4))) == 204
    assert len(simple_cycles(cycle_graph(5))) == 1
    assert len(simple_cycles(path_graph(4))) == 0


def test_k6_generated_collection_is_proper_and_applies():
    g = complete(6)
    coll, quality = generate_collection(g)
    assert quality == "proper"
    assert len(coll) == 10
    verdict = check_collection(g, coll)
    assert verdict.applies is True
    assert verdict.proper and not verdict.degenerate
    assert all(c.ok is True for c in verdict.conditions)


def test_k44_generated_collection_is_proper_and_applies():
    g = complete_bipartite(4, 4)
    coll, quality = generate_collection(g)
    assert quality == "proper"
    assert len(coll) == 18
    verdict = check_collection(g, coll)
    assert verdict.applies is True
    assert verdict.proper


def test_k7_collapses_to_degenerate_whole_graph():
    g = complete(7)
    coll, quality = generate_collection(g)
    assert quality == "degenerate"
    assert len(coll) == 1
    assert coll.members[0].is_whole_parent()
    verdict = check_collection(g, coll)
    assert verdict.degenerate
    assert verdict.applies is True  # conditions hold vacuously/trivially


@pytest.mark.slow
def test_k55_collapses_to_degenerate_whole_graph():
    g = complete_bipartite(5, 5)
    coll, quality = generate_collection(g)
    assert quality == "degenerate"
    assert len(coll) == 1


def test_cycle_and_tree_need_no_members():
    for g in (cycle_graph(5), path_graph(4)):
        coll, quality = generate_collection(g)
        assert quality == "proper"
        assert len(coll) == 0
        assert check_collection(g, coll).applies is True


def test_k7_triangle_pairs_fail_every_condition():
    g = complete(7)
    coll = triangle_pair_collection(g)
    assert len(coll) > 0
    verdict = check_collection(g, coll)
    assert verdict.applies is False
    assert [c.ok for c in verdict.conditions].count(False) == 3


def test_k6_triangle_pairs_pass():
    g = complete(6)
    coll = triangle_pair_collection(g)
    assert len(coll) == 10
    assert check_collection(g, coll).applies is True


def test_rose_needs_no_peripherals_despite_many_cycles():
    g = rose(3)
    coll, quality = generate_collection(g)
    assert quality == "proper"
    assert len(coll) == 0
    assert check_collection(g, coll).applies is True


def test_collection_builder_rejects_foreign_members():
    g = complete(5)
    other = Graph({"a": ("p", "q"), "b": ("q", "r"), "c": ("r", "p")})
    member = Subgraph.induced_on(other, ["p", "q", "r"])
    with pytest.raises(GraphError):
        PeripheralCollection.of(g, [member])


def test_collection_builder_adopts_compatible_members():
    g = complete(5)
    h = complete(5)
    member = Subgraph.induced_on(h, ["0", "1", "2"])
    coll = PeripheralCollection.of(g, [member])
    assert len(coll) == 1
    assert coll.members[0].parent is g


def test_collection_builder_dedupes():
    g = complete(5)
    m = Subgraph.induced_on(g, ["0", "1", "2"])
    coll = PeripheralCollection.of(g, [m, m])
    assert len(coll) == 1


def test_collection_builder_rejects_non_subgraphs():
    with pytest.raises(GraphError):
        PeripheralCollection.of(complete(4), [{"0", "1"}])


def test_verdict_serialization_round_trip():
    import json
    g = complete(6)
    coll, _ = generate_collection(g)
    verdict = check_collection(g, coll)
    blob = json.dumps(verdict.to_dict(), sort_keys=True)
    data = json.loads(blob)
    assert data["applies"] is True
    assert len(data["conditions"]) == 3
    cd = json.loads(json.dumps(coll.to_dict(), sort_keys=True))
    assert len(cd["members"]) == 10


def test_failed_condition_reports_violations():
    g = complete(7)
    verdict = check_collection(g, triangle_pair_collection(g))
    failed = [c for c in verdict.conditions if c.ok is False]
    assert failed and all(c.violations for c in failed)


def test_budget_exhaustion_reports_none():
    g = Graph({"a1": ("u1", "v1"), "a2": ("v1", "w1"), "a3": ("w1", "u1"),
               "b1": ("u2", "v2"), "b2": ("v2", "w2"), "b3": ("w2", "u2"),
               "m1": ("u1", "s1"), "m2": ("s1", "u2")})
    member = Subgraph.induced_on(g, ["u1", "v1", "w1", "u2", "v2", "w2"])
    coll = PeripheralCollection.of(g, [member])
    full = check_collection(g, coll)
    assert full.applies is True and full.proper
    starved = check_collection(g, coll, budget=1)
    assert starved.applies is None
    assert any(c.ok is None for c in starved.conditions)
