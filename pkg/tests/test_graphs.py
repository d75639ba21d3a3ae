import json
from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from parikhgraph import graphs
from parikhgraph.errors import CapacityError, DomainError
from parikhgraph.graphs import LabeledBipartiteGraph, bipartite
from parikhgraph.parikh import parikh_graph
from parikhgraph.words import word


def random_graph(draw_sizes=(1, 4)):
    @st.composite
    def build(draw):
        p = draw(st.integers(*draw_sizes))
        q = draw(st.integers(*draw_sizes))
        xs = [f"x{i}" for i in range(p)]
        ys = [f"y{j}" for j in range(q)]
        pairs = [(x, y) for x in xs for y in ys]
        edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
        return bipartite(xs, ys, edges)
    return build()


def test_construction_validates():
    with pytest.raises(DomainError):
        bipartite(["a"], ["a"], [])
    with pytest.raises(DomainError):
        bipartite(["a", "b"], ["c"], [("a", "b")])


def test_json_round_trip_and_rejections():
    g = graphs.path_graph(4)
    text = g.to_json()
    assert LabeledBipartiteGraph.from_json(text) == g
    assert json.loads(text) == json.loads(LabeledBipartiteGraph.from_json(text).to_json())
    dup = '{"x": ["a"], "y": ["b"], "edges": [["a", "b"], ["a", "b"]]}'
    with pytest.raises(DomainError):
        LabeledBipartiteGraph.from_json(dup)
    with pytest.raises(DomainError):
        LabeledBipartiteGraph.from_json('{"x": [1], "y": ["b"], "edges": []}')


def test_dot_has_two_ranks():
    dot = graphs.path_graph(3).to_dot()
    assert dot.count("rank=same") == 2
    assert "--" in dot


def test_neighbors():
    star = graphs.complete_bipartite(1, 3)
    center = star.x[0]
    assert graphs.neighbors(star, center) == set(star.y)
    c4 = bipartite(["x1", "x2"], ["y1", "y2"], [("x1", "y1"), ("x1", "y2"), ("x2", "y1"), ("x2", "y2")])
    assert graphs.neighbors(c4, "x1") == {"y1", "y2"}
    assert graphs.neighbors(bipartite(["x"], [], []), "x") == frozenset()


def test_distances_and_diameter(k22):
    p5 = graphs.path_graph(5)
    assert graphs.distance(p5, "v1", "v1") == 0
    assert graphs.distance(p5, "v1", "v5") == 4
    two = graphs.disjoint_union(graphs.path_graph(2), graphs.path_graph(2))
    assert graphs.distance(two, two.x[0], two.x[1]) is None
    assert graphs.diameter(k22) == 2
    assert graphs.diameter(graphs.path_graph(2)) == 1
    assert graphs.diameter(parikh_graph(word("bbccabdc")).graph) == 5
    with pytest.raises(DomainError):
        graphs.diameter(two)


def test_components_and_induced(k22):
    assert graphs.connected_components(k22) == [k22]
    two = graphs.disjoint_union(graphs.path_graph(2), graphs.path_graph(2))
    comps = graphs.connected_components(two)
    assert len(comps) == 2 and all(len(c.edges) == 1 for c in comps)
    assert graphs.connected_components(bipartite([], [], [])) == []
    assert graphs.induced_subgraph(k22, k22.vertices) == k22
    assert not graphs.induced_subgraph(k22, [k22.x[0]]).edges
    p3 = graphs.induced_subgraph(k22, k22.vertices[:3])
    assert graphs.are_isomorphic(p3, graphs.path_graph(3))


def test_isomorphism_examples(k22):
    assert graphs.are_isomorphic(parikh_graph(word("abb")).graph, parikh_graph(word("abc")).graph)
    assert graphs.are_isomorphic(graphs.complete_bipartite(1, 2), graphs.path_graph(3))
    assert not graphs.are_isomorphic(k22, graphs.path_graph(4))


def test_isomorphism_cap():
    big = graphs.complete_bipartite(9, 9)
    with pytest.raises(CapacityError):
        graphs.are_isomorphic(big, big)


def test_hamiltonian_examples(k22):
    assert graphs.has_hamiltonian_cycle(k22)
    assert not graphs.has_hamiltonian_cycle(graphs.path_graph(4))
    assert graphs.has_hamiltonian_cycle(parikh_graph(word("abbc")).graph)
    cycle = graphs.find_hamiltonian_cycle(graphs.cycle_graph(8))
    assert cycle is not None and len(cycle) == 8


def test_62_chordality(c6, k22):
    assert not graphs.is_62_chordal(c6)
    assert graphs.is_62_chordal(k22)
    assert graphs.is_62_chordal(graphs.complete_bipartite(3, 3))


def test_cycles_counted_once():
    assert len(list(graphs.simple_cycles(graphs.complete_bipartite(2, 2)))) == 1
    # K_{3,3}: 9 four-cycles and 6 six-cycles
    lengths = [len(c) for c in graphs.simple_cycles(graphs.complete_bipartite(3, 3))]
    assert lengths.count(4) == 9 and lengths.count(6) == 6


@settings(max_examples=60, deadline=None)
@given(random_graph(), st.randoms())
def test_isomorphism_reflexive_symmetric_and_witnessed(g, rnd):
    labels = list(g.vertices)
    shuffled = labels[:]
    rnd.shuffle(shuffled)
    h = g.relabel(dict(zip(labels, shuffled)))
    if rnd.random() < 0.5:
        h = h.swapped()
    assert graphs.are_isomorphic(g, g)
    witness = graphs.find_isomorphism(g, h)
    assert witness is not None and graphs.is_isomorphism(g, h, witness)
    assert graphs.find_isomorphism(h, g) is not None
    assert graphs.canonical_key(g) == graphs.canonical_key(h)


@settings(max_examples=60, deadline=None)
@given(random_graph(), random_graph())
def test_canonical_key_agrees_with_isomorphism(g, h):
    assert (graphs.canonical_key(g) == graphs.canonical_key(h)) == graphs.are_isomorphic(g, h)


@settings(max_examples=40, deadline=None)
@given(random_graph((1, 3)))
def test_diameter_is_max_distance(g):
    if len(g) == 0 or not graphs.is_connected(g):
        return
    d = graphs.diameter(g)
    dists = [graphs.distance(g, u, v) for u in g.vertices for v in g.vertices]
    assert d == max(dists)


@settings(max_examples=40, deadline=None)
@given(random_graph((1, 4)))
def test_hamiltonian_needs_balanced_parts(g):
    if graphs.has_hamiltonian_cycle(g):
        assert len(g.x) == len(g.y)
        cycle = graphs.find_hamiltonian_cycle(g)
        assert sorted(map(str, cycle)) == sorted(map(str, g.vertices))
        assert all(g.has_edge(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle)))
