import json
from itertools import combinations

import pytest

from parikhgraph import graphs, oracle, recognition
from parikhgraph.errors import CapacityError, DomainError
from parikhgraph.graphs import canonical_key
from parikhgraph.oracle import EnumerationSpec, enumerate_bipartite_graphs, enumerate_words, run_suite


def test_word_enumeration():
    assert [str(w) for w in enumerate_words(2, 2)] == ["aa", "ab", "ba", "bb"]
    assert list(enumerate_words(2, 1, full_support=True)) == []
    assert sum(1 for _ in enumerate_words(3, 4)) == 81
    with pytest.raises(CapacityError):
        list(enumerate_words(4, 13))


def test_graph_enumeration_counts():
    assert len(list(enumerate_bipartite_graphs(2))) == 1
    assert len(list(enumerate_bipartite_graphs(4))) == 5
    assert list(enumerate_bipartite_graphs(0)) == []
    per_size = [sum(1 for _ in enumerate_bipartite_graphs(n, min_vertices=n)) for n in range(2, 9)]
    assert per_size == [1, 1, 3, 5, 17, 44, 182]
    with pytest.raises(CapacityError):
        list(enumerate_bipartite_graphs(11))


def test_enumerated_graphs_pairwise_distinct():
    found = list(enumerate_bipartite_graphs(6))
    assert all(graphs.is_connected(g) for g in found)
    for g, h in combinations(found, 2):
        assert not graphs.are_isomorphic(g, h)


def test_hereditary_filter_matches_post_filter():
    kept = {canonical_key(g) for g in oracle.bipartite_permutation_graphs(7)}
    post = {canonical_key(g) for g in enumerate_bipartite_graphs(7) if recognition.find_strong_ordering(g)}
    assert kept == post


def test_every_small_permutation_graph_is_ternary():
    # up to 7 vertices the ternary recognizer never fails
    assert all(recognition.recognize_ternary(g) for g in oracle.bipartite_permutation_graphs(7))


def test_graph_needing_four_letters():
    g = graphs.LabeledBipartiteGraph.from_json(
        '{"x": ["x1", "x2", "x3", "x4"], "y": ["y1", "y2", "y3", "y4"], "edges": [["x1", "y1"], ["x1", "y2"],'
        ' ["x1", "y3"], ["x2", "y1"], ["x2", "y4"], ["x3", "y1"], ["x4", "y2"]]}'
    )
    assert recognition.find_strong_ordering(g) is not None
    assert recognition.recognize_ternary(g) is None
    assert canonical_key(g) not in oracle.representable_keys(len(g), 3)
    w = recognition.synthesize_word(g).word
    assert w.size == 4 and graphs.are_isomorphic(oracle.parikh.parikh_graph(w).graph, g)


def test_spec_caps():
    with pytest.raises(CapacityError):
        EnumerationSpec("round-trip", max_vertices=11)
    with pytest.raises(DomainError):
        run_suite("no-such-suite")


def test_small_suites_pass():
    assert run_suite("edge-count", EnumerationSpec("edge-count", (1, 3), (1, 7))).passed
    assert run_suite("round-trip", EnumerationSpec("round-trip", max_vertices=8)).passed
    assert run_suite("core-sigma", EnumerationSpec("core-sigma", (2, 3), (1, 6))).passed


def test_determinism():
    spec = EnumerationSpec("diameter", (2, 3), (1, 6))
    a, b = run_suite("diameter", spec), run_suite("diameter", spec)
    assert (a.passed, a.checked, a.reports) == (b.passed, b.checked, b.reports)


def test_fault_injection_yields_replayable_report(monkeypatch):
    real = recognition.synthesize_word

    def broken(g, ordering=None, cap=None):
        result = real(g, ordering, cap)
        letters = result.word.letters
        result.word = type(result.word)(letters[::-1], result.word.size)
        return result

    monkeypatch.setattr(recognition, "synthesize_word", broken)
    spec = EnumerationSpec("round-trip", max_vertices=5)
    first = run_suite("round-trip", spec)
    second = run_suite("round-trip", spec)
    assert not first.passed
    assert first.reports == second.reports
    report = first.reports[0]
    assert report.reproduce.startswith("parikhgraph verify --suite round-trip")
    graphs.LabeledBipartiteGraph.from_json(report.input)
    assert json.loads(report.to_json())["suite"] == "round-trip"
    assert [r.input for r in first.reports] == sorted(r.input for r in first.reports)


def test_parallel_matches_serial():
    spec = EnumerationSpec("binary-recognition", max_vertices=7)
    serial = run_suite("binary-recognition", spec)
    parallel = run_suite("binary-recognition", EnumerationSpec("binary-recognition", max_vertices=7, jobs=2))
    assert (serial.passed, serial.checked, serial.reports) == (parallel.passed, parallel.checked, parallel.reports)


@pytest.mark.parametrize("name", ["induced-subgraph", "triple-subwords", "longest-path", "ternary-recognition"])
def test_registered_suites_pass_at_small_scale(name):
    small = dict(alphabet_sizes=None, lengths=None, max_vertices=None)
    if name in ("induced-subgraph", "triple-subwords"):
        small.update(alphabet_sizes=(3, 3), lengths=(1, 5))
    if name == "ternary-recognition":
        small.update(max_vertices=6)
    assert run_suite(name, EnumerationSpec(name, **small)).passed
