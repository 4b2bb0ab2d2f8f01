"""Property suites: exhaustive catalog sweeps and randomized word checks."""

import random

import pytest

from graphbraid import words
from graphbraid.classify import default_config
from graphbraid.families import complete, complete_bipartite, rose, sun
from graphbraid.words import Diagram

from _sweeps import (coloring_axiom_sweep, f2xz_master_sweep,
                     flat_witness_sweep, random_legal_word, scramble_word,
                     shape_equivalence_sweep, trivial_oracle_sweep,
                     word_test_instances)


# -- exhaustive catalog sweeps ---------------------------------------------------

def test_coloring_axioms_all_connected_graphs_up_to_6_vertices():
    count, bad = coloring_axiom_sweep(6, 3)
    assert count == 426
    assert bad == ()


def test_shape_recognizer_matches_condition_lists_up_to_8_vertices(catalog8):
    count, bad3, bad4 = shape_equivalence_sweep(8)
    assert count == 12113
    assert bad3 == ()
    assert bad4 == ()


def test_triviality_matches_oracle_up_to_6_vertices():
    count, bad = trivial_oracle_sweep(6, 3)
    assert count == 426
    assert bad == ()


@pytest.mark.slow
def test_triviality_matches_oracle_up_to_7_vertices():
    count, bad = trivial_oracle_sweep(7, 3)
    assert count == 2985
    assert bad == ()


def test_f2xz_fast_paths_match_master_search_up_to_6_vertices():
    count, bad = f2xz_master_sweep(6, 5)
    assert bad == ()


@pytest.mark.slow
def test_f2xz_fast_paths_match_master_search_up_to_7_vertices():
    count, bad = f2xz_master_sweep(7, 5)
    assert bad == ()


def test_every_nonhyperbolic_verdict_verifies_its_flat_witness():
    count, checked, bad = flat_witness_sweep(6, 4)
    assert checked > 50  # the sweep genuinely exercises witnesses
    assert bad == ()


def test_flat_witnesses_on_family_spot_checks():
    from graphbraid.classify import is_hyperbolic, verify_flat_witness
    cases = [(complete(6), 2), (complete(7), 3), (complete_bipartite(4, 4), 2),
             (sun(4, 2), 3), (rose(3), 4), (complete_bipartite(3, 3), 3)]
    for g, n in cases:
        v = is_hyperbolic(g, n)
        if v.no:
            assert v.witness is not None, (g.name, n)
            assert verify_flat_witness(v.witness), (g.name, n)


# -- randomized word suites --------------------------------------------------------

def test_normal_form_confluence_ten_thousand_cases():
    rng = random.Random(20250819)
    instances = word_test_instances()
    cases = 0
    while cases < 10_000:
        g, base = instances[cases % len(instances)]
        w = random_legal_word(g, base, rng)
        trace = scramble_word(g, base, w, rng)
        d0 = Diagram.make(g, base, trace[0])
        dN = Diagram.make(g, base, trace[-1])
        assert d0.letters == dN.letters, (g.name, base, trace[0], trace[-1])
        cases += 1


def test_legality_preserved_under_rewrites_ten_thousand_cases():
    rng = random.Random(77)
    instances = word_test_instances()
    cases = 0
    while cases < 10_000:
        g, base = instances[cases % len(instances)]
        w = random_legal_word(g, base, rng)
        for step in scramble_word(g, base, w, rng, rounds=4):
            assert words.is_legal(g, base, step), (g.name, base, step)
            cases += 1


def test_normal_form_idempotent_and_legal_randomized():
    rng = random.Random(4242)
    instances = word_test_instances()
    for i in range(2_000):
        g, base = instances[i % len(instances)]
        w = random_legal_word(g, base, rng)
        d = Diagram.make(g, base, w)
        assert words.is_legal(g, base, d.letters)
        again = Diagram.make(g, base, d.letters)
        assert again.letters == d.letters


def test_diagram_group_laws_randomized():
    rng = random.Random(99)
    instances = [(g, b) for g, b in word_test_instances()]
    checked = 0
    for i in range(4_000):
        g, base = instances[i % len(instances)]
        w = random_legal_word(g, base, rng)
        d = Diagram.make(g, base, w)
        if d.terminus != d.base:
            continue
        inv = d.inverse()
        assert (d * inv).is_identity
        assert (inv * d).is_identity
        checked += 1
    assert checked > 500


def test_spherical_words_compose_associatively_randomized():
    rng = random.Random(123)
    g, base = word_test_instances()[0], None
    g, base = g
    pool = []
    while len(pool) < 12:
        w = random_legal_word(g, base, rng)
        d = Diagram.make(g, base, w)
        if d.terminus == base:
            pool.append(d)
    for _ in range(600):
        a, b, c = rng.choice(pool), rng.choice(pool), rng.choice(pool)
        assert ((a * b) * c).letters == (a * (b * c)).letters
