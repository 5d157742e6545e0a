"""Folding, membership, intersection, canonical form."""

import random
from pathlib import Path

import pytest

import helpers
from oracles import short_products
from stallings import (Alphabet, LabeledGraph, StallingsGraph, fold,
                       graph_from_generators, intersect, load_graph_file,
                       load_words_file, membership, parse_graph_text,
                       wedge_of_cycles)

A2 = Alphabet(2)
FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def words(*texts):
    return [A2.word(t) for t in texts]


def test_bouquet_shape():
    b = StallingsGraph.bouquet(2)
    assert b.num_vertices == 1
    assert b.edges == ((0, 1, 0), (0, 2, 0))
    assert b.cycle_rank == 2


def test_fold_collapses_redundant_generators_to_bouquet():
    g = graph_from_generators(words("xy", "xyy", "y"))
    assert g == StallingsGraph.bouquet(2)


def test_identity_generators_are_dropped():
    g = graph_from_generators(words("e", "x"), rank=2)
    assert g == graph_from_generators(words("x"), rank=2)


def test_wedge_needs_rank_when_empty():
    with pytest.raises(ValueError):
        wedge_of_cycles([])
    g = fold(wedge_of_cycles([], rank=2))
    assert g.num_vertices == 1 and g.edges == ()


def test_fold_is_idempotent_on_folded_graphs():
    g = graph_from_generators(words("xxy", "Xyy"))
    assert fold(g) == g


def test_membership_spot_checks():
    g = graph_from_generators(words("xx", "y"))
    assert not membership(g, A2.word("x"))
    assert membership(g, A2.word("xx"))
    assert membership(g, A2.word("y"))
    assert not membership(g, A2.word("xy"))
    assert membership(g, A2.word("xxxxy"))
    assert membership(g, A2.identity())


def test_membership_closed_under_inverse_and_products():
    rng = random.Random(402)
    for _ in range(30):
        gens = helpers.random_gens(rng, A2)
        g = graph_from_generators(gens)
        for s in gens:
            assert membership(g, s)
            assert membership(g, s.inverse())
        a, b = rng.choice(gens), rng.choice(gens)
        assert membership(g, a * b.inverse() * a)


def test_every_short_product_is_a_member():
    # one-sided sanity: products of generators always trace to the basepoint
    rng = random.Random(403)
    for _ in range(20):
        gens = helpers.random_gens(rng, A2)
        g = graph_from_generators(gens)
        for letters in short_products([w.letters for w in gens], 6, 6):
            assert g.trace(letters) == 0


def test_canonical_form_ignores_generator_presentation():
    rng = random.Random(404)
    for _ in range(40):
        gens = helpers.random_gens(rng, A2)
        shuffled = gens[:]
        rng.shuffle(shuffled)
        extra = shuffled + [shuffled[0] * shuffled[-1]]
        assert graph_from_generators(gens) == graph_from_generators(extra)


def test_fold_confluent_across_random_orders():
    rng = random.Random(405)
    for _ in range(25):
        raw = helpers.random_labeled_graph(rng)
        baseline = fold(raw)
        for seed in range(8):
            assert fold(raw, rng=random.Random(seed)) == baseline


def test_unfolded_constructor_rejected():
    with pytest.raises(ValueError, match="not folded"):
        StallingsGraph(2, 3, ((0, 1, 1), (0, 1, 2)))


def test_trace_and_contains_agree():
    g = graph_from_generators(words("xyX"))
    w = A2.word("xyX")
    assert g.contains(w)
    assert g.trace(w.letters) == 0
    assert g.trace((1,)) != 0 or not g.contains(A2.word("x"))


def test_intersection_of_powers():
    a = graph_from_generators(words("x"))
    b = graph_from_generators(words("xx"))
    g = intersect(a, b)
    assert membership(g, A2.word("xx"))
    assert not membership(g, A2.word("x"))


def test_intersection_membership_is_pointwise_and():
    rng = random.Random(406)
    from stallings import enumerate_reduced
    probes = list(enumerate_reduced(A2, 5))
    for _ in range(15):
        a = graph_from_generators(helpers.random_gens(rng, A2))
        b = graph_from_generators(helpers.random_gens(rng, A2))
        g = intersect(a, b)
        for w in probes:
            assert membership(g, w) == (membership(a, w) and membership(b, w))


def test_intersection_with_whole_group():
    a = graph_from_generators(words("xxy", "Xyy"))
    assert intersect(a, StallingsGraph.bouquet(2)) == a


def test_to_dot_is_deterministic_and_marks_basepoint():
    g = graph_from_generators(words("xxy", "Xyy"))
    dot = g.to_dot()
    assert dot == g.to_dot()
    assert "doublecircle" in dot
    assert dot.startswith("digraph")


def test_parse_graph_text_round_trip():
    text = "rank 2\n0 x 1\n1 y 0\n# comment\n0 y 0\n"
    raw = parse_graph_text(text)
    assert raw.rank == 2
    assert fold(raw).cycle_rank == 2


def test_parse_graph_text_rejects_bad_labels():
    with pytest.raises(ValueError):
        parse_graph_text("0 q 1\n")
    with pytest.raises(ValueError):
        parse_graph_text("rank 2\n0 xy 1\n")
    with pytest.raises(ValueError):
        parse_graph_text("rank 2\n0 X 1\n")


def test_load_fixture_graph_and_words(tmp_path):
    raw = load_graph_file(FIXTURES / "basis_xxy_Xyy.txt")
    g = fold(raw)
    assert g.cycle_rank == 2
    ws = load_words_file(FIXTURES / "factor_n_gens.txt", A2)
    assert ws == words("xyXY", "xyyx")

    p = tmp_path / "words.txt"
    p.write_text("x\n# c\nyy\n")
    assert load_words_file(p, A2) == words("x", "yy")


def test_disconnected_pieces_outside_base_component_are_dropped():
    raw = LabeledGraph(2, 4, ((0, 1, 0), (2, 1, 3), (3, 2, 2)))
    g = fold(raw)
    assert g.num_vertices == 1
    assert g.edges == ((0, 1, 0),)


def test_core_trim_removes_hanging_trees():
    raw = LabeledGraph(2, 4, ((0, 1, 1), (1, 1, 2), (2, 2, 3)))
    g = fold(raw)
    # nothing but the basepoint survives: the whole graph is a hanging path
    assert g.num_vertices == 1 and g.edges == ()
