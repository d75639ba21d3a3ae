import pytest
from hypothesis import given, settings, strategies as st

from parikhgraph import graphs, recognition
from parikhgraph.errors import CapacityError, DomainError, NotRepresentableError
from parikhgraph.graphs import bipartite
from parikhgraph.parikh import ParikhVertex as V, canonical_strong_ordering, is_strong_ordering, parikh_graph
from parikhgraph.recognition import (
    compose_components, decomposition_violations, find_strong_ordering, interval_decomposition,
    merge_projections, recognize_binary, recognize_ternary, synthesize_any, synthesize_word, trace_violations,
)
from parikhgraph.words import Word, project, word

P5 = bipartite(["x1", "x2"], ["y1", "y2", "y3"], [("x1", "y1"), ("x1", "y2"), ("x2", "y2"), ("x2", "y3")])


def words(max_size=4, max_len=8):
    return st.integers(2, max_size).flatmap(
        lambda s: st.lists(st.integers(1, s), min_size=1, max_size=max_len).map(lambda xs: Word(tuple(xs), s))
    )


def connected_parikh_graph(w):
    g = parikh_graph(w).graph
    return g if graphs.is_connected(g) else None


def test_complete_bipartite_orderings():
    g = graphs.complete_bipartite(2, 3)
    assert find_strong_ordering(g) is not None
    dec = interval_decomposition(g, find_strong_ordering(g))
    assert dec.n == 1 and set(dec.x_block(1)) == set(g.x) and set(dec.y_block(1)) == set(g.y)
    assert str(synthesize_word(g).word) == "aabbb"


def test_c6_rejected(c6):
    assert find_strong_ordering(c6) is None
    with pytest.raises(NotRepresentableError):
        synthesize_word(c6)
    assert recognize_binary(c6) is None
    assert not recognition.check_binary_via_chordality(c6)


def test_p4_ordering_and_decomposition():
    g = graphs.path_graph(4)
    o = find_strong_ordering(g)
    assert is_strong_ordering(g, o)
    # one end of the X order is the middle vertex adjacent to both y's
    assert {g.degree(o.order_x[0]), g.degree(o.order_x[-1])} == {1, 2}
    pg = parikh_graph(word("abab"))
    dec = interval_decomposition(pg.graph, canonical_strong_ordering(word("abab")))
    assert dec.n == 2
    assert set(dec.x_block(1)) == {V(1, 1), V(1, 2)} and set(dec.y_block(1)) == {V(2, 2)}
    assert set(dec.x_block(2)) == {V(1, 1)} and set(dec.y_block(2)) == {V(2, 1)}
    assert decomposition_violations(pg.graph, dec) == []


def test_single_edge_decomposition():
    g = graphs.path_graph(2)
    dec = interval_decomposition(g, find_strong_ordering(g))
    assert dec.n == 1 and len(dec.x_block(1)) == 1 and len(dec.y_block(1)) == 1


def test_synthesis_examples():
    pg = parikh_graph(word("abab"))
    result = synthesize_word(pg.graph, canonical_strong_ordering(word("abab")))
    assert str(result.word) == "abab"
    example = parikh_graph(word("bbccabdc")).graph
    result = synthesize_word(example)
    assert graphs.are_isomorphic(parikh_graph(result.word).graph, example)
    assert trace_violations(example, result) == []
    assert synthesize_word(bipartite(["v"], [], [])).word == word("a")


def test_synthesis_rejects_disconnected():
    with pytest.raises(DomainError):
        synthesize_word(graphs.disjoint_union(graphs.path_graph(2), graphs.path_graph(2)))


def test_strong_ordering_cap():
    with pytest.raises(CapacityError):
        find_strong_ordering(graphs.path_graph(8), cap=6)


def test_binary_recognition_examples(k22):
    star = graphs.complete_bipartite(1, 3)
    assert str(recognize_binary(star).word) == "abbb"
    assert recognize_binary(P5) is None
    assert recognition.check_binary_via_chordality(k22)
    assert not recognition.check_binary_via_chordality(P5)


def test_ternary_recognition_examples(c6):
    assert str(recognize_ternary(P5).word) == "babcb"
    binary = recognize_ternary(graphs.complete_bipartite(2, 2))
    assert set(binary.word.letters) <= {1, 2}
    assert recognize_ternary(c6) is None


def test_example_graph_is_ternary_but_not_binary():
    g = parikh_graph(word("bbccabdc")).graph
    assert recognize_binary(g) is None
    rec = recognize_ternary(g)
    assert rec is not None and graphs.are_isomorphic(parikh_graph(rec.word).graph, g)


def test_merge_projections():
    assert str(merge_projections(word("bbcb", 3), word("babb", 3))) == "babcb"


def test_compose_examples():
    assert compose_components([word("ab")]) == word("ab")
    two = compose_components([word("ab"), word("ab")])
    assert str(two) == "cdab"
    assert len(graphs.connected_components(parikh_graph(two).graph)) == 2
    mixed = compose_components([word("abb"), word("a")])
    # the star K_{1,2} plus one isolated vertex
    assert str(mixed) == "bcca"
    assert len(graphs.connected_components(parikh_graph(mixed).graph)) == 2


def test_synthesize_any(c6, k22):
    two = graphs.disjoint_union(graphs.path_graph(2), graphs.path_graph(2))
    assert str(synthesize_any(two)) == "cdab"
    assert synthesize_any(graphs.disjoint_union(c6, k22)) is None
    w = synthesize_any(P5)
    assert graphs.are_isomorphic(parikh_graph(w).graph, P5)


@settings(max_examples=150, deadline=None)
@given(words())
def test_round_trip_on_parikh_graphs(w):
    g = connected_parikh_graph(w)
    if g is None or len(g) < 2:
        return
    result = synthesize_word(g)
    assert graphs.are_isomorphic(parikh_graph(result.word).graph, g)
    assert decomposition_violations(g, result.decomposition) == []
    assert trace_violations(g, result) == []


@settings(max_examples=150, deadline=None)
@given(words(3, 8))
def test_ternary_witness_is_sound(w):
    g = connected_parikh_graph(w)
    if g is None or len(g) < 2:
        return
    rec = recognize_ternary(g)
    if w.size <= 3:
        assert rec is not None
    if rec is not None:
        v = rec.word.with_size(3)
        assert graphs.are_isomorphic(parikh_graph(v).graph, g)
        assert merge_projections(project(v, {2, 3}), project(v, {1, 2})) == v


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(1, 2), min_size=2, max_size=10))
def test_binary_recognizers_agree_on_binary_words(letters):
    g = connected_parikh_graph(Word(tuple(letters), 2))
    if g is None:
        return
    assert recognize_binary(g) is not None
    assert recognition.check_binary_via_chordality(g)
