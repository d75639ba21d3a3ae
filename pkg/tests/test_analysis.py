import pytest

from parikhgraph import analysis, graphs
from parikhgraph.errors import CapacityError, DomainError
from parikhgraph.parikh import StrongOrdering, canonical_strong_ordering, parikh_graph
from parikhgraph.recognition import find_strong_ordering
from parikhgraph.words import Word, word


@pytest.mark.parametrize("w,diam,bound,source", [
    ("abab", 3, 3, analysis.CORE_WORD),
    ("deabcdeab", 8, 8, analysis.CORE_NONEMPTY),
    ("bbccabdc", 5, 9, analysis.GENERAL),
])
def test_diameter_reports(w, diam, bound, source):
    r = analysis.diameter_report(word(w))
    assert (r.diameter, r.applicable_bound, r.bound_source) == (diam, bound, source)
    assert r.within_bound and r.to_dict()["diameter"] == diam


def test_diameter_report_on_disconnected_word():
    r = analysis.diameter_report(word("ba"))
    assert not r.connected and r.diameter is None and r.within_bound


def test_triple_subwords():
    assert analysis.check_triple_subwords(word("bcabcab"))
    assert analysis.check_triple_subwords(word("abcabc"))
    with pytest.raises(DomainError):
        analysis.check_triple_subwords(word("cba"))


@pytest.mark.parametrize("s,w", [(2, "abab"), (3, "bcabcab"), (4, "cdbcdabcab"), (5, "decdebcdabcab")])
def test_longest_path_words(s, w):
    assert str(analysis.longest_path_word(s)) == w
    g = parikh_graph(word(w)).graph
    assert analysis.is_path_graph(g) and len(g.edges) == 3 * s - 3


def test_longest_path_word_s6():
    g = parikh_graph(analysis.longest_path_word(6)).graph
    assert analysis.is_path_graph(g) and len(g) == 16


@pytest.mark.parametrize("parts,w", [([4], "abcd"), ([1, 1, 1, 1], "dcba"), ([2, 2], "cdab")])
def test_slender_words(parts, w):
    assert str(analysis.slender_word_for_partition(parts)) == w


def test_slender_word_shapes():
    for parts in analysis.integer_partitions(6):
        g = parikh_graph(analysis.slender_word_for_partition(parts)).graph
        sizes = sorted((len(c) for c in graphs.connected_components(g)), reverse=True)
        assert tuple(sizes) == parts


def test_slender_word_rejects_bad_partitions():
    with pytest.raises(DomainError):
        analysis.slender_word_for_partition([2, 0])
    with pytest.raises(DomainError):
        analysis.slender_word_for_partition([2, 2], s=5)


def test_slender_counts():
    assert analysis.count_slender_classes(2) == 2
    assert analysis.count_slender_classes(4) == 5
    assert analysis.count_slender_classes(6) == 11
    assert sorted(map(str, analysis.slender_classes(4).values())) == ["abcd", "abdc", "acbd", "adcb", "dcba"]
    with pytest.raises(CapacityError):
        analysis.count_slender_classes(9)


def test_partition_enumerator():
    assert [analysis.partition_count(n) for n in range(1, 11)] == [1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


def test_binary_hamiltonian():
    assert analysis.binary_hamiltonian(word("aabb"))
    assert not analysis.binary_hamiltonian(word("abab"))
    assert not analysis.binary_hamiltonian(word("ab"))
    with pytest.raises(DomainError):
        analysis.binary_hamiltonian(word("abc"))


def test_ternary_hamiltonian():
    assert analysis.ternary_hamiltonian(word("abbc"))
    assert not analysis.ternary_hamiltonian(word("abcb"))
    assert analysis.ternary_hamiltonian(word("aabb", 3))
    with pytest.raises(DomainError):
        analysis.ternary_hamiltonian(word("abc"))


def test_hamiltonian_via_strong_ordering(c6, k22):
    assert analysis.hamiltonian_via_strong_ordering(k22, find_strong_ordering(k22))
    p4 = parikh_graph(word("abab")).graph
    assert not analysis.hamiltonian_via_strong_ordering(p4, canonical_strong_ordering(word("abab")))
    with pytest.raises(DomainError):
        analysis.hamiltonian_via_strong_ordering(c6, StrongOrdering(c6.x, c6.y))
