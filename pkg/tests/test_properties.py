"""Property tests over random word graphs and random multi-level graphs."""
from __future__ import annotations

import random

from hypothesis import HealthCheck, given, settings, strategies as st

from distgraph import (
    Relation, SignedWord, are_related, canonical_key, euler_characteristic, graph_to_word,
    mirror, negate, orientation_assignment, parse_text, serialize_text, smooth, subdivide_loops,
    surface_report, validate, vertex_report, word_mirror, word_negate, word_rename, word_to_graph,
)

import graphgen

OC, CJ, EQ = Relation.ORIENTED_CONJUGACY, Relation.CONJUGACY, Relation.EQUIVALENCE

seeds = st.integers(min_value=0, max_value=2**32 - 1)
fast = settings(max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])


def multilevel(seed: int):
    rng = random.Random(seed)
    return smooth(graphgen.random_multilevel(rng, saddle_levels=rng.randint(1, 3), max_vertices=2,
                                             max_k=3, max_edges=5)), rng


def positive_word(seed: int, m_choices=(3, 5, 7)):
    rng = random.Random(seed)
    return graphgen.random_word(rng, rng.choice(m_choices), signed=False, planar=False)


@fast
@given(seeds)
def test_random_graphs_are_valid_and_round_trip(seed):
    g, _ = multilevel(seed)
    assert validate(g) == []
    text = serialize_text(g)
    assert parse_text(text).graph == g
    assert serialize_text(parse_text(text).graph) == text


@fast
@given(seeds)
def test_index_sum_is_euler_characteristic(seed):
    g, _ = multilevel(seed)
    assert sum(vertex_report(g, v).index for v in g.vertex_level) == euler_characteristic(g)


@fast
@given(seeds)
def test_orientation_is_coherent_when_found(seed):
    g, _ = multilevel(seed)
    o = orientation_assignment(g)
    r = surface_report(g)
    assert (o is not None) == r.orientable
    assert r.genus >= 0 and (2 - r.euler_characteristic) % (2 if r.orientable else 1) == 0
    if o is not None:
        for c in g.cycles:
            for d in c.darts:
                assert o.cycle_sign[c.name] * d.sign == o.edge_sign[d.edge]


@fast
@given(seeds)
def test_presentation_does_not_change_class(seed):
    g, rng = multilevel(seed)
    h = graphgen.shuffle_presentation(g, rng)
    assert are_related(g, h, OC)
    assert canonical_key(g, OC) == canonical_key(h, OC)


@fast
@given(seeds)
def test_mirror_and_negate_move_within_classes(seed):
    g, _ = multilevel(seed)
    assert mirror(mirror(g)) == g and negate(negate(g)) == g
    assert canonical_key(mirror(g), CJ) == canonical_key(g, CJ)
    assert canonical_key(negate(g), EQ) == canonical_key(g, EQ)
    assert are_related(g, negate(g), EQ)


@fast
@given(seeds)
def test_subdivide_smooth_preserves_surface(seed):
    g, _ = multilevel(seed)
    back = smooth(subdivide_loops(g))
    r1, r2 = surface_report(g), surface_report(back)
    assert (r1.euler_characteristic, r1.orientable, r1.genus) == (r2.euler_characteristic, r2.orientable, r2.genus)
    assert canonical_key(back, OC) == canonical_key(g, OC)


@settings(max_examples=200, deadline=None)
@given(seeds)
def test_word_transforms_are_involutions(seed):
    w = positive_word(seed)
    assert word_mirror(word_mirror(w)) == w
    assert word_negate(word_negate(w)) == w
    assert word_negate(w) == graph_to_word(negate(word_to_graph(w)))


@settings(max_examples=100, deadline=None)
@given(seeds, st.integers(min_value=0, max_value=6))
def test_rename_preserves_oriented_class(seed, shift):
    rng = random.Random(seed)
    w = graphgen.random_word(rng, 7, signed=False)
    renamed = word_rename(w, shift % w.m)
    assert are_related(word_to_graph(w), word_to_graph(renamed), OC)


@settings(max_examples=100, deadline=None)
@given(seeds)
def test_signed_word_graph_round_trip(seed):
    rng = random.Random(seed)
    w = graphgen.random_word(rng, rng.randint(1, 6), signed=None, planar=False)
    assert graph_to_word(word_to_graph(w)) == w
    assert SignedWord.parse(str(w)) == w
