from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from braidkit.presentations import Presentation, builtin_presentation, verify_homomorphism
from braidkit.presentations.graphs import (
    VARIANTS,
    GraphError,
    PlanarGraph,
    annulus_standard_graph,
    arc_diagram,
    band_assignment,
    format_power_word,
    graph_pseudocycles,
    line_graph,
    maximal_trees,
    pseudocycle_figure_graph,
    random_arc_diagram,
    sergiescu,
    star_graph,
    star_relations,
    tree_circuit,
    tree_figure_graph,
    triangle_graph,
)

PLANE_VARIANTS = ["plane", "singular-plane", "inverse-plane", "sphere"]


def relation_texts(p: Presentation, kind: str | None = None) -> list[str]:
    return [str(r) for r in p.relations if kind is None or r.kind == kind]


# -- validation ------------------------------------------------------------------------


def test_loop_and_multi_edge_rejected():
    with pytest.raises(GraphError):
        PlanarGraph((1, 2), (("a", 1, 1),), {1: ("a", "a"), 2: ()})
    with pytest.raises(GraphError):
        arc_diagram(2, [("a", 1, 2), ("b", 1, 2)])


def test_disconnected_rejected():
    with pytest.raises(GraphError):
        arc_diagram(4, [("a", 1, 2), ("b", 3, 4)])


def test_rotation_must_match_incidences():
    with pytest.raises(GraphError):
        PlanarGraph((1, 2), (("a", 1, 2),), {1: ("a",), 2: ()})


def test_crossing_arcs_rejected():
    with pytest.raises(GraphError):
        arc_diagram(4, [("a", 1, 3), ("b", 2, 4), ("c", 1, 2)])
    # the same pair is fine when one arc goes above the line
    g = arc_diagram(4, [("a", 1, 3), ("b", 2, 4), ("c", 1, 2)], upper=["b"])
    assert len(g.faces()) == 1


def test_puncture_must_not_disconnect():
    g = arc_diagram(3, [("a", 1, 2), ("b", 2, 3)], distinguished=[2])
    with pytest.raises(GraphError):
        g.check_punctured()
    with pytest.raises(GraphError):
        sergiescu(g, "annulus")


def test_unknown_variant():
    assert "plane" in VARIANTS
    with pytest.raises(ValueError):
        sergiescu(line_graph(3), "torus")


# -- file format -------------------------------------------------------------------------


@pytest.mark.parametrize(
    "g", [triangle_graph(), star_graph(3), annulus_standard_graph(4), pseudocycle_figure_graph()]
)
def test_yaml_round_trip(g, tmp_path):
    path = tmp_path / "g.yaml"
    path.write_text(g.dump(), encoding="utf-8")
    h = PlanarGraph.load(path)
    assert h.to_dict() == g.to_dict()
    assert graph_pseudocycles(h) == graph_pseudocycles(g)


def test_from_dict_coordinates_and_arcs():
    tri = PlanarGraph.from_dict(
        {"vertices": ["a", "b", "c"], "edges": [[1, "a", "b"], [2, "b", "c"], [3, "c", "a"]],
         "coordinates": {"a": [0, 0], "b": [1, 0], "c": [0, 1]}}
    )
    assert len(graph_pseudocycles(tri)) == 1
    arcs = PlanarGraph.from_dict({"vertices": [1, 2, 3], "edges": [["1", 1, 3], ["2", 2, 3], ["3", 1, 2]]})
    assert arcs.to_dict() == triangle_graph().to_dict()
    with pytest.raises(GraphError):
        PlanarGraph.from_dict({"vertices": [1]})


# -- pseudocycles --------------------------------------------------------------------------


def test_triangle_and_path_pseudocycles():
    assert [len(c) for c in graph_pseudocycles(triangle_graph())] == [3]
    assert graph_pseudocycles(line_graph(5)) == []


def test_figure_pseudocycle_doubles_the_pendant_edge():
    g = pseudocycle_figure_graph()
    assert graph_pseudocycles(g) == [("1", "2", "3", "3", "4")]
    assert relation_texts(sergiescu(g), "PR") == [
        "s1 s2 s3 s3 = s2 s3 s3 s4",
        "s2 s3 s3 s4 = s3 s3 s4 s1",
        "s3 s4 s1 s2 = s4 s1 s2 s3",
    ]


@settings(max_examples=40)
@given(st.integers(3, 7), st.integers(0, 5), st.integers(0, 10**6))
def test_faces_satisfy_euler_and_use_each_dart_once(n, extra, seed):
    g = random_arc_diagram(n, extra, random.Random(seed), 0.3)
    faces = g.faces()
    darts = [d for f in faces for d in f]
    assert len(darts) == len(set(darts)) == 2 * len(g.edges)
    assert len(g.vertices) - len(g.edges) + len(faces) == 2
    cycles = graph_pseudocycles(g)
    assert len(cycles) == len(faces) - 1
    # an edge is used at most twice, once per side
    for face in g.bounded_faces():
        used = [d[0] for d in face]
        for e in set(used):
            assert used.count(e) in (1, 2)


# -- tree circuits ---------------------------------------------------------------------------


def test_single_edge_circuit():
    g = line_graph(2)
    e = g.edge_ids[0]
    assert tree_circuit(g, [e], *g.ends(e)) == (e, e)
    assert relation_texts(sergiescu(g, "sphere")) == ["s1 s1 = 1"]


def test_figure_tree_circuits():
    t = tree_figure_graph()
    assert format_power_word(tree_circuit(t, t.edge_ids, "x", "y")) == "σα²β²σγδ²ε²γζ²"
    assert format_power_word(tree_circuit(t, t.edge_ids, "y", "x")) == "σγδ²ε²γζ²σα²β²"


def test_tree_circuit_needs_a_maximal_tree():
    g = triangle_graph()
    with pytest.raises(GraphError):
        tree_circuit(g, g.edge_ids, 1, 3)
    with pytest.raises(GraphError):
        tree_circuit(g, ["1"], 1, 3)


@pytest.mark.parametrize("g", [triangle_graph(), star_graph(4), annulus_standard_graph(3)])
def test_every_maximal_tree_circuit_has_even_length(g):
    trees = maximal_trees(g)
    assert trees
    for tree in trees:
        e = tree[0]
        word = tree_circuit(g, tree, *g.ends(e))
        assert len(word) == 2 * len(tree)
        assert all(word.count(x) == 2 for x in tree)


# -- Sergiescu presentations ---------------------------------------------------------------------


@pytest.mark.parametrize("n", range(2, 8))
def test_line_graph_gives_artin(n):
    a, b = sergiescu(line_graph(n)), builtin_presentation("artin", n=n)
    assert a.labels == b.labels
    assert set(relation_texts(a)) == set(relation_texts(b))


def test_star_nodal_relation():
    texts = relation_texts(sergiescu(star_graph(3)), "NR")
    assert "s1 s2 s3 s1 = s2 s3 s1 s2" in texts


def test_triangle_pseudocycle_relation():
    assert "s1 s2 = s2 s3" in relation_texts(sergiescu(triangle_graph()), "PR")


def test_minimal_sphere_uses_one_tree():
    g = triangle_graph()
    full, small = sergiescu(g, "sphere"), sergiescu(g, "sphere", minimal=True)
    assert small.kinds()["TR"] < full.kinds()["TR"]


# a triangle with a pendant edge, drawn as arcs
PENDANT = arc_diagram(4, [("1", 1, 2), ("2", 2, 3), ("3", 1, 3), ("4", 3, 4)])


@pytest.mark.parametrize("g", [triangle_graph(), star_graph(4), line_graph(5), PENDANT])
@pytest.mark.parametrize("variant", PLANE_VARIANTS)
def test_variants_verify_in_band_models(g, variant):
    p = sergiescu(g, variant)
    assert not p.structural_errors()
    report = verify_homomorphism(p, band_assignment(g, variant))
    assert report.ok and report.fails == 0, report.summary()


@pytest.mark.parametrize("n", [3, 4, 5])
@pytest.mark.parametrize("variant", ["annulus", "singular-annulus"])
def test_annulus_standard_graph_verifies(n, variant):
    g = annulus_standard_graph(n)
    report = verify_homomorphism(sergiescu(g, variant), band_assignment(g, variant))
    assert report.ok, [str(v.relation) for v in report.failures()]


@settings(max_examples=40)
@given(st.integers(2, 6), st.integers(0, 4), st.integers(0, 10**6), st.sampled_from([0.0, 0.4]))
def test_random_arc_diagrams_verify(n, extra, seed, upper_prob):
    g = random_arc_diagram(n, extra, random.Random(seed), upper_prob)
    assert len(g.edges) <= 9
    report = verify_homomorphism(sergiescu(g), band_assignment(g))
    assert report.fails == 0 and report.holds == len(report.verdicts), [str(v.relation) for v in report.failures()]


@pytest.mark.parametrize("k", [2, 3, 4])
def test_star_relations_hold(k):
    g = star_graph(k)
    a = band_assignment(g)
    for r in star_relations(g, 1):
        assert a.model.equal(a.evaluate(r.lhs), a.evaluate(r.rhs)), str(r)


def test_star_band_images():
    g = star_graph(3)
    a = band_assignment(g)
    assert {str(w) for w in a.images.values()} == {"s1", "s2 s1 s2'", "s3 s2 s1 s2' s3'"}
