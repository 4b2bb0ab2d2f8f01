import random

import pytest

from graphbraid import oracle
from graphbraid.complexes import build_uc
from graphbraid.families import (complete, complete_bipartite, cycle_graph,
                                 path_graph, rose, star3, star4)
from graphbraid.graphs import Graph
from graphbraid.words import Diagram, parse_word
from graphbraid import words


# -- integer Smith normal form -------------------------------------------------

def cols_from_dense(rows):
    ncols = len(rows[0])
    return [{r: rows[r][c] for r in range(len(rows)) if rows[r][c]}
            for c in range(ncols)]


def test_snf_small_dense_matrices():
    rank, factors = oracle.snf_invariants(cols_from_dense([[2, 4], [6, 8]]))
    assert (rank, factors) == (2, (2, 4))
    rank, factors = oracle.snf_invariants(cols_from_dense([[1, 0], [0, 1]]))
    assert (rank, factors) == (2, ())
    rank, factors = oracle.snf_invariants(cols_from_dense([[2, 0], [0, 3]]))
    assert (rank, factors) == (2, (6,))  # diag(2,3) ~ diag(1,6)
    rank, factors = oracle.snf_invariants(cols_from_dense([[0, 0], [0, 0]]))
    assert (rank, factors) == (0, ())
    rank, factors = oracle.snf_invariants(cols_from_dense([[6]]))
    assert (rank, factors) == (1, (6,))


def test_snf_matches_dense_reference_on_random_sparse():
    try:
        from sympy import Matrix
        from sympy.matrices.normalforms import smith_normal_form
    except ImportError:
        pytest.skip("sympy unavailable")
    rng = random.Random(3)
    for _ in range(25):
        nr, nc = rng.randrange(1, 6), rng.randrange(1, 6)
        dense = [[rng.choice((0, 0, 0, 1, -1, 2, -3)) for _ in range(nc)]
                 for _ in range(nr)]
        rank, factors = oracle.snf_invariants(cols_from_dense(dense))
        m = Matrix(dense)
        snf = smith_normal_form(m)
        diag = [abs(snf[i, i]) for i in range(min(nr, nc))]
        ref_rank = sum(1 for d in diag if d)
        ref_factors = tuple(d for d in diag if d > 1)
        assert rank == ref_rank and factors == ref_factors, dense


def test_gf2_rank():
    assert oracle.rank_gf2(cols_from_dense([[1, 1], [1, 1]])) == 1
    assert oracle.rank_gf2(cols_from_dense([[2, 0], [0, 2]])) == 0


# -- skeleton and collapse ------------------------------------------------------

def test_two_skeleton_counts_match_complex():
    c = build_uc(complete(5), 2)
    sk = oracle.two_skeleton(c)
    assert (len(sk.vertices), len(sk.edges), len(sk.squares)) == (10, 30, 15)


def test_collapse_shrinks_contractible_complex_to_a_point():
    c = build_uc(path_graph(4), 2)
    sk = oracle.two_skeleton(c)
    small = oracle.collapse(sk)
    assert (len(small.vertices), len(small.edges), len(small.squares)) == (1, 0, 0)


def test_collapse_cannot_shrink_a_closed_surface():
    sk = oracle.two_skeleton(build_uc(complete(5), 2))
    small = oracle.collapse(sk)
    assert len(small.vertices) == len(sk.vertices)


def test_homology_agrees_with_and_without_collapse():
    c = build_uc(complete(5), 2)
    h = oracle.homology(c)
    h2 = oracle.homology(c, use_collapse=False)
    assert (h2.betti0, h2.betti1, h2.torsion, h2.betti2) == \
        (h.betti0, h.betti1, h.torsion, h.betti2) == (1, 6, (2,), 0)


# -- homology anchors -----------------------------------------------------------

def test_homology_k5_two_particles():
    h = oracle.homology(build_uc(complete(5), 2))
    assert (h.betti0, h.betti1, h.betti2) == (1, 6, 0)
    assert h.torsion == (2,)
    assert h.euler == -5


def test_homology_k33_two_particles():
    h = oracle.homology(build_uc(complete_bipartite(3, 3), 2))
    assert (h.betti0, h.betti1, h.betti2) == (1, 4, 0)
    assert h.torsion == (2,)
    assert h.euler == -3


def test_homology_c4_two_particles():
    h = oracle.homology(build_uc(cycle_graph(4), 2))
    assert (h.betti0, h.betti1, h.torsion) == (1, 1, ())


def test_homology_k4_two_particles_free_of_rank_4():
    h = oracle.homology(build_uc(complete(4), 2))
    assert (h.betti0, h.betti1, h.torsion, h.betti2) == (1, 4, (), 0)


def test_betti1_gf2_sees_torsion():
    # over GF(2) the torsion class contributes an extra rank
    c = build_uc(complete(5), 2)
    assert oracle.betti1_gf2(c) == oracle.homology(c).betti1 + 1


def test_homology_of_disconnected_complex_component():
    g = cycle_graph(6)
    c = build_uc(g, 2)
    h = oracle.homology(c)
    assert h.betti0 == 1 and h.betti1 == 1


# -- surface recognition ---------------------------------------------------------

def test_k5_surface_nonorientable_with_both_genus_conventions():
    surf = oracle.surface_check(build_uc(complete(5), 2))
    assert surf["closed_surface"] is True
    assert surf["orientable"] is False
    assert surf["euler"] == -5
    assert surf["crosscap_number"] == 7
    assert surf["h1_rank"] == 6
    assert "genus_note" in surf


def test_k33_surface_nonorientable():
    surf = oracle.surface_check(build_uc(complete_bipartite(3, 3), 2))
    assert surf["closed_surface"] is True
    assert surf["orientable"] is False
    assert surf["euler"] == -3
    assert surf["crosscap_number"] == 5
    assert surf["h1_rank"] == 4


def test_k4_not_a_closed_surface():
    surf = oracle.surface_check(build_uc(complete(4), 2))
    assert surf["closed_surface"] is False
    assert "1 squares" in surf["reason"]


def test_torus_from_two_disjoint_triangles():
    g = Graph({"a1": ("u1", "v1"), "a2": ("v1", "w1"), "a3": ("w1", "u1"),
               "b1": ("u2", "v2"), "b2": ("v2", "w2"), "b3": ("w2", "u2")})
    c = build_uc(g, 2)
    comp = c.component_of(("u1", "u2"))
    surf = oracle.surface_check(c, component=comp)
    assert surf["closed_surface"] is True
    assert surf["orientable"] is True
    assert surf["euler"] == 0
    assert surf["orientable_genus"] == 1


# -- fundamental group presentations ---------------------------------------------

def test_p4_two_particles_presentation_collapses_to_nothing():
    c = build_uc(path_graph(4), 2)
    assert oracle.pi1_presentation(c).counts() == (1, 1)
    assert oracle.pi1_presentation(c, collapse_first=True).counts() == (0, 0)


def test_tietze_trivializes_contractible_presentations():
    c = build_uc(path_graph(4), 2)
    pres = oracle.pi1_presentation(c)
    ok, note = oracle.tietze_trivialize(pres)
    assert ok is True


def test_tietze_rejects_free_group():
    pres = oracle.Presentation(generators=("a", "b"), relators=())
    ok, note = oracle.tietze_trivialize(pres)
    assert ok is False


def test_group_trivial_matches_classifier_anchors():
    assert oracle.group_trivial(path_graph(6), 3, ("0", "1", "2")) is True
    assert oracle.group_trivial(cycle_graph(3), 1, ("0",)) is False
    assert oracle.group_trivial(star3(), 2, ("x", "y")) is False


def test_hexagon_presentation_is_one_free_generator():
    c = build_uc(star3(), 2)
    pres = oracle.pi1_presentation(c, collapse_first=True)
    ngen, nrel = pres.counts()
    assert ngen - nrel == 1  # abelianized rank, and here honestly free


# -- words against presentations ---------------------------------------------------

def test_hexagon_word_maps_to_single_generator():
    g = star3()
    c = build_uc(g, 2)
    w = parse_word(g, "c a' b c' a b'")
    img, final = oracle.word_in_presentation(c, ("x", "y"), w)
    assert final == ("x", "y")
    assert len(img) == 1 and img[0][1] in (1, -1)


def test_word_times_inverse_maps_to_identity():
    g = star3()
    w = parse_word(g, "c a' b c' a b'")
    inv = tuple((k, -s) for k, s in reversed(w))
    c = build_uc(g, 2)
    img, final = oracle.word_in_presentation(c, ("x", "y"), w + inv)
    assert img == () and final == ("x", "y")


def test_open_path_word_reports_final_configuration():
    g = star3()
    c = build_uc(g, 2)
    w = parse_word(g, "c a'")
    img, final = oracle.word_in_presentation(c, ("x", "y"), w)
    assert final != ("x", "y")


def test_vankampen_accepts_single_relator():
    pres = oracle.pi1_presentation(build_uc(complete(5), 2),
                                   collapse_first=True)
    assert pres.relators
    assert oracle.vankampen_trivial(pres, pres.relators[0]) is True


def test_two_particles_on_hexagon_collapse_to_free_rank_one():
    pres = oracle.pi1_presentation(build_uc(cycle_graph(6), 2),
                                   collapse_first=True)
    assert pres.counts() == (1, 0)


def test_vankampen_free_group_rejects_nontrivial_word():
    pres = oracle.Presentation(generators=("a",), relators=())
    assert oracle.vankampen_trivial(pres, ((0, 1),)) is False


def test_vankampen_budget_gives_none():
    pres = oracle.Presentation(
        generators=("a", "b"),
        relators=(((0, 1), (1, 1), (0, -1), (1, -1)),))
    probe = ((0, 1), (1, 1), (0, 1), (1, 1))
    assert oracle.vankampen_trivial(pres, probe, max_area=1, budget=50) in (False, None)


# -- rewriting and growth -----------------------------------------------------------

def test_rewrite_trivial_agrees_with_normal_form():
    g = star3()
    base = ("x", "y")
    rng = random.Random(5)
    for _ in range(40):
        letters = []
        config = base
        for _ in range(rng.randrange(0, 8)):
            options = oracle.legal_letters_at(g, config)
            if not options:
                break
            pick = rng.choice(sorted(options))
            letters.append(pick)
            config = words.apply_letter(g, config, pick)
        if config != base:
            continue
        letters = tuple(letters)
        d = Diagram.make(g, base, letters)
        assert oracle.rewrite_trivial(g, base, letters) is d.is_identity


def test_ball_growth_star3_is_linear():
    sizes, complete_ = oracle.ball_growth(star3(), 2, ("x", "y"), 4)
    assert complete_ is True
    assert sizes == [1, 3, 5, 7, 9]


def test_ball_growth_two_petal_rose():
    sizes, complete_ = oracle.ball_growth(rose(2), 1, ("w",), 4)
    assert complete_ is True
    assert sizes == [1, 5, 9, 13, 25]


def test_ball_growth_budget_exhaustion():
    sizes, complete_ = oracle.ball_growth(rose(2), 1, ("w",), 6, budget=20)
    assert complete_ is False


def test_ball_growth_trivial_group_stabilizes():
    sizes, complete_ = oracle.ball_growth(path_graph(5), 2, ("0", "1"), 8)
    assert complete_ is True
    assert sizes[-1] == sizes[-2] == 10  # one diagram per configuration


# -- enumerative cross-checks ---------------------------------------------------------

@pytest.mark.parametrize("maker,n", [
    (lambda: complete(5), 2),
    (lambda: complete_bipartite(3, 3), 2),
    (lambda: star4(), 3),
    (lambda: cycle_graph(5), 2),
    (lambda: path_graph(4), 2),
])
def test_cube_counts_match_complex(maker, n):
    g = maker()
    counts = oracle.cube_counts(g, n)
    by_dim = build_uc(g, n).counts()
    assert counts == [by_dim.get(d, 0) for d in range(len(counts))]


def test_euler_characteristic_full_matches_alternating_sum():
    counts = oracle.cube_counts(complete(5), 2)
    chi = sum((-1) ** d * k for d, k in enumerate(counts))
    assert oracle.euler_characteristic_full(complete(5), 2) == chi == -5
