from __future__ import annotations

import pytest

from distgraph import (
    PreconditionError, UnknownVertexError, VertexKind, classify_vertex, euler_characteristic,
    is_connected, is_orientable, is_realizable, locally_equivalent, orientation_assignment,
    parse_text, smooth, subdivide_loops, surface_report, vertex_link, vertex_report, word_to_graph,
)
from distgraph.topology import is_smooth

from conftest import SPHERE, two_saddle_torus


def link_strings(g, v="saddle"):
    return [" ".join(str(end) for end in comp) for comp in vertex_link(g, v)]


def test_torus_link(torus):
    assert link_strings(torus) == ["a- c+ b- a+ c- b+"]


def test_genus3_planar_link():
    assert link_strings(word_to_graph("acbedgf")) == ["a- g+ f- e+ d- c+ b- a+ c- b+ e- d+ g- f+"]


def test_genus3_conic_link():
    comps = link_strings(word_to_graph("acbdgfe"))
    assert sorted(comps) == sorted(["a+ b- c+ d- b+ c-", "a- g+ f- e+", "d+ e- f+ g-"])
    assert classify_vertex(word_to_graph("acbdgfe"), "saddle") is VertexKind.CONIC


def test_projective_plane_link(rp2):
    assert link_strings(rp2) == ["a- b+ a+ b-"]


def test_extremum_link_is_empty(torus):
    assert vertex_link(torus, "min") == []
    assert classify_vertex(torus, "min") is VertexKind.PLANAR


def test_unknown_vertex(torus):
    with pytest.raises(UnknownVertexError):
        vertex_link(torus, "nope")


def test_torus_saddle_report(torus):
    r = vertex_report(torus, "saddle")
    assert (r.level, r.degree, r.local_degree_k, r.index, r.kind) == (2, 6, 3, -2, VertexKind.PLANAR)


def test_local_equivalence(torus, rp2):
    assert locally_equivalent(torus, "min", rp2, "max")
    assert not locally_equivalent(torus, "saddle", rp2, "saddle")
    assert locally_equivalent(torus, "saddle", word_to_graph("ab-c-"), "saddle")


@pytest.mark.parametrize("word,chi", [("ab", 1), ("acb", 0), ("acbed", -2), ("ab-c-d-", -1)])
def test_euler_characteristic(word, chi):
    assert euler_characteristic(word_to_graph(word)) == chi


def test_sphere_report(sphere):
    r = surface_report(sphere)
    assert (r.connected, r.realizable, r.orientable, r.euler_characteristic, r.genus) == (True, True, True, 2, 0)


def test_torus_report(torus):
    assert surface_report(torus).as_dict()["genus"] == 1
    assert is_orientable(torus)


def test_non_orientable(rp2, klein):
    assert not is_orientable(rp2)
    assert orientation_assignment(klein) is None
    assert surface_report(klein).genus == 2


def test_orientation_is_coherent(torus):
    o = orientation_assignment(torus)
    for c in torus.cycles:
        for d in c.darts:
            assert o.cycle_sign[c.name] * d.sign == o.edge_sign[d.edge]


def test_conic_word_is_not_realizable():
    g = word_to_graph("ab")
    r = surface_report(g)
    assert not is_realizable(g)
    assert (r.orientable, r.genus) == (None, None)
    with pytest.raises(PreconditionError):
        orientation_assignment(g)


@pytest.mark.parametrize("flip,upper,orientable", [
    (False, "a+ b-", True), (True, "a+ b-", False), (False, "a+ b+", False), (True, "a+ b+", True),
])
def test_two_saddle_gluings(flip, upper, orientable):
    g = parse_text(two_saddle_torus(flip, upper)).graph
    r = surface_report(g)
    assert r.euler_characteristic == 0
    assert r.orientable is orientable
    assert r.genus == (1 if orientable else 2)


def test_disconnected_graph_detected():
    text = """\
dg 1
levels 2
level 1
vertex m1
vertex m2
cycle c1 lower @m1
cycle c2 lower @m2
level 2
vertex M1
vertex M2
cycle d1 upper @M1
cycle d2 upper @M2
pair c1 d1
pair c2 d2
"""
    g = parse_text(text).graph
    assert not is_connected(g)
    r = surface_report(g)
    assert r.euler_characteristic == 4 and r.genus is None


def test_subdivide_then_smooth(torus):
    sub = subdivide_loops(torus)
    assert not is_smooth(sub)
    assert len(sub.edge_map) == 6
    assert {v for v in sub.vertex_level if sub.degree[v] == 2} == {"a.v", "b.v", "c.v"}
    assert euler_characteristic(sub) == euler_characteristic(torus)
    back = smooth(sub)
    assert is_smooth(back)
    assert sorted(back.edge_map) == ["a.1", "b.1", "c.1"]
    assert all(e.is_loop for e in back.edge_map.values())


def test_smooth_bare_circle_keeps_one_vertex():
    text = """\
dg 1
levels 3
level 1
vertex m
cycle c1 lower @m
level 2
vertex p
vertex q
edge e p q
edge f q p
cycle u upper e+ f+
cycle l lower e+ f+
level 3
vertex M
cycle c3 upper @M
pair c1 u
pair l c3
"""
    g = smooth(parse_text(text).graph)
    assert g.level(2).vertices == ("q",)
    assert g.cycle_map["u"].darts == g.cycle_map["l"].darts
    assert [d.edge for d in g.cycle_map["u"].darts] == ["e"]
    assert surface_report(g).genus == 0


def test_sphere_is_smooth(sphere):
    assert smooth(sphere) == sphere
    assert smooth(parse_text(SPHERE).graph) == sphere
