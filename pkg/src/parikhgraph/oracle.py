"""Brute-force enumeration and the named verification suites.

Every suite enumerates a finite input space (words or graphs), checks one
property per input, and reports each failure as a replayable
:class:`CounterexampleReport`.  Suites are registered by name in
:data:`SUITES`; the ``verify`` command and the test-suite share it.
"""

from __future__ import annotations

import json
import shlex
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, replace
from functools import lru_cache
from itertools import combinations, product
from typing import Callable, Iterable, Iterator

from . import analysis, config, graphs, parikh, recognition
from .errors import CapacityError, DomainError, NotRepresentableError
from .graphs import LabeledBipartiteGraph, canonical_key
from .words import Word, ascending, subword_count, support

MAX_WORD_LENGTH = 12
MAX_WORDS = 2_000_000


# -- enumeration -----------------------------------------------------------


def enumerate_words(s: int, length: int, full_support: bool = False) -> Iterator[Word]:
    """All words of the given length over ``a_1 < ... < a_s`` in lexicographic order."""
    if s < 1 or length < 0:
        raise DomainError("need s >= 1 and length >= 0")
    if length > MAX_WORD_LENGTH or s ** length > MAX_WORDS:
        raise CapacityError(f"{s}^{length} words exceed the enumeration cap")
    full = frozenset(range(1, s + 1))
    for letters in product(range(1, s + 1), repeat=length):
        if full_support and frozenset(letters) != full:
            continue
        yield Word(letters, s)


def enumerate_bipartite_graphs(
    max_vertices: int,
    keep: Callable[[LabeledBipartiteGraph], bool] | None = None,
    min_vertices: int = 2,
    cap: int | None = None,
) -> Iterator[LabeledBipartiteGraph]:
    """Connected bipartite graphs on ``min_vertices..max_vertices`` vertices, one per class.

    Graphs of size ``n`` are grown from those of size ``n - 1`` by adding a
    vertex to either part: every connected graph has a vertex whose removal
    leaves it connected.  ``keep`` must be hereditary for connected induced
    subgraphs (bipartite permutation graphs are), since rejected graphs are
    not extended.  Vertices are labelled ``x1..`` and ``y1..``.
    """
    cap = config.limits().enumeration if cap is None else cap
    if max_vertices > cap:
        raise CapacityError(f"graph enumeration capped at {cap} vertices, got {max_vertices}")
    if max_vertices < 2:
        return
    level = [graphs.bipartite(["x1"], ["y1"], [("x1", "y1")])]
    if keep is not None:
        level = [g for g in level if keep(g)]
    for n in range(2, max_vertices + 1):
        if n >= min_vertices:
            yield from level
        if n == max_vertices:
            break
        found: dict = {}
        for g in level:
            p, q = len(g.x), len(g.y)
            for side, others in (("x", g.y), ("y", g.x)):
                label = f"x{p + 1}" if side == "x" else f"y{q + 1}"
                for r in range(1, len(others) + 1):
                    for nbhd in combinations(others, r):
                        if side == "x":
                            h = graphs.bipartite(g.x + (label,), g.y, list(g.edges) + [(label, y) for y in nbhd])
                        else:
                            h = graphs.bipartite(g.x, g.y + (label,), list(g.edges) + [(x, label) for x in nbhd])
                        key = canonical_key(h)
                        if key in found:
                            continue
                        if keep is not None and not keep(h):
                            found[key] = None
                            continue
                        found[key] = h
        level = [h for h in found.values() if h is not None]


def bipartite_permutation_graphs(max_vertices: int, min_vertices: int = 2) -> Iterator[LabeledBipartiteGraph]:
    return enumerate_bipartite_graphs(
        max_vertices, keep=lambda g: recognition.find_strong_ordering(g) is not None, min_vertices=min_vertices
    )


@lru_cache(maxsize=None)
def representable_keys(length: int, s: int | None = None) -> frozenset:
    """Canonical keys of ``G(w)`` for every word of ``length`` over ``s`` letters (default ``length``)."""
    s = length if s is None else s
    return frozenset(canonical_key(parikh.parikh_graph(w).graph) for w in enumerate_words(s, length))


def find_word_for(g: LabeledBipartiteGraph, s: int, max_length: int | None = None) -> Word | None:
    """Exhaustive search for a word over ``s`` letters representing ``g`` (length ``|V|``)."""
    n = len(g)
    if max_length is not None and n > max_length:
        return None
    key = canonical_key(g)
    for w in enumerate_words(s, n):
        if canonical_key(parikh.parikh_graph(w).graph) == key:
            return w
    return None


# -- suites ----------------------------------------------------------------


@dataclass(frozen=True)
class EnumerationSpec:
    """Input space of one suite run; ``None`` fields fall back to the suite's defaults."""

    suite: str
    alphabet_sizes: tuple | None = None
    lengths: tuple | None = None
    max_vertices: int | None = None
    jobs: int = 1

    def __post_init__(self) -> None:
        lim = config.limits()
        if self.max_vertices is not None and self.max_vertices > lim.enumeration:
            raise CapacityError(f"max_vertices {self.max_vertices} exceeds the cap {lim.enumeration}")
        if self.lengths is not None and self.lengths[1] > MAX_WORD_LENGTH:
            raise CapacityError(f"word length {self.lengths[1]} exceeds the cap {MAX_WORD_LENGTH}")
        if self.jobs < 1:
            raise DomainError("jobs must be at least 1")


@dataclass(frozen=True)
class CounterexampleReport:
    suite: str
    input: str
    expected: str
    actual: str
    reproduce: str

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)


@dataclass
class SuiteResult:
    suite: str
    spec: EnumerationSpec
    checked: int
    reports: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.reports

    def to_json(self) -> str:
        return json.dumps(
            {"suite": self.suite, "passed": self.passed, "checked": self.checked, "counterexamples": len(self.reports)},
            sort_keys=True,
        )


@dataclass(frozen=True)
class Suite:
    name: str
    description: str
    inputs: Callable[[EnumerationSpec], Iterable]
    check: Callable  # item -> None or (expected, actual)
    render: Callable = str
    defaults: dict = field(default_factory=dict)


def _words_of(spec: EnumerationSpec, full_support: bool = False) -> Iterator[Word]:
    lo_s, hi_s = spec.alphabet_sizes
    lo_n, hi_n = spec.lengths
    for s in range(lo_s, hi_s + 1):
        for n in range(max(lo_n, 1), hi_n + 1):
            yield from enumerate_words(s, n, full_support)


def _graphs_of(spec: EnumerationSpec) -> list:
    return list(enumerate_bipartite_graphs(spec.max_vertices))


def _bpgs_of(spec: EnumerationSpec) -> list:
    return list(bipartite_permutation_graphs(spec.max_vertices))


def _graph_json(g: LabeledBipartiteGraph) -> str:
    return g.to_json()


# individual checks; each returns None on success or (expected, actual)


def _check_edge_count(w: Word):
    pg = parikh.parikh_graph(w)
    g = pg.graph
    expected = parikh.expected_edge_count(w)
    if len(g) != len(w):
        return (f"{len(w)} vertices", f"{len(g)} vertices")
    if len(g.edges) != expected:
        return (f"{expected} edges", f"{len(g.edges)} edges")
    if any(u.letter % 2 != 1 or v.letter % 2 != 0 for u, v in g.edges):
        return ("edges join odd to even letters", "an edge joins letters of equal parity")
    return None


def _check_canonical_ordering(w: Word):
    g = parikh.parikh_graph(w).graph
    if not parikh.is_strong_ordering(g, parikh.canonical_strong_ordering(w)):
        return ("canonical ordering is strong", "not strong")
    return None


def _check_binary_permutation(w: Word):
    pg = parikh.parikh_graph(w)
    tau = parikh.binary_permutation(w)
    if not parikh.is_permutation_realization(pg.graph, pg.vertex_at, tau):
        return ("adjacency == inversion", f"mismatch for tau={tau}")
    return None


def _check_components_strong(w: Word):
    for comp in graphs.connected_components(parikh.parikh_graph(w).graph):
        if recognition.find_strong_ordering(comp) is None:
            return ("every component has a strong ordering", f"component {comp.to_json(str)} has none")
    return None


def _check_diameter(w: Word):
    report = analysis.diameter_report(w, strict=False)
    if report.bound_source == analysis.CORE_WORD and not report.connected:
        return ("connected (w is its own core)", "disconnected")
    if not report.within_bound:
        return (f"diameter <= {report.applicable_bound} ({report.bound_source})", f"diameter {report.diameter}")
    return None


def _check_triples(w: Word):
    if w.size < 3 or not graphs.is_connected(parikh.parikh_graph(w).graph):
        return None
    if not analysis.check_triple_subwords(w):
        return ("every a_i a_(i+1) a_(i+2) occurs", "some triple is missing")
    return None


def _check_induced(w: Word):
    pg = parikh.parikh_graph(w)
    n = len(w)
    for r in range(1, n + 1):
        for subset in combinations(range(n), r):
            h = graphs.induced_subgraph(pg.graph, [pg.vertex_at[p] for p in subset])
            u = parikh.subword_at(w, subset)
            if not graphs.are_isomorphic(h, parikh.parikh_graph(u).graph):
                return (f"G[{list(subset)}] isomorphic to G({u})", "not isomorphic")
    return None


def _check_core_sigma(w: Word):
    pg = parikh.parikh_graph(w)
    busy = [v for v in pg.graph.vertices if pg.graph.adjacency[v]]
    c = parikh.core_sigma(w)
    h = graphs.induced_subgraph(pg.graph, busy)
    if len(c) == 0:
        return None if len(h) == 0 else ("no non-isolated vertices", f"{len(h)} non-isolated vertices")
    if not graphs.are_isomorphic(h, parikh.parikh_graph(c).graph):
        return (f"G({c}) isomorphic to non-isolated part", "not isomorphic")
    return None


def _check_round_trip(g: LabeledBipartiteGraph):
    if recognition.find_strong_ordering(g) is None:
        return None
    try:
        result = recognition.synthesize_word(g)
    except (NotRepresentableError, RuntimeError) as exc:
        return ("a representing word", f"{type(exc).__name__}: {exc}")
    if not graphs.are_isomorphic(parikh.parikh_graph(result.word).graph, g):
        return ("G(w) isomorphic to input", f"w = {result.word} is not")
    problems = recognition.decomposition_violations(g, result.decomposition) if result.decomposition else []
    problems += recognition.trace_violations(g, result)
    if problems:
        return ("decomposition and trace invariants hold", "; ".join(problems))
    return None


def _check_completeness(g: LabeledBipartiteGraph):
    has_order = recognition.find_strong_ordering(g) is not None
    has_word = canonical_key(g) in representable_keys(len(g))
    if has_order != has_word:
        return (f"strong ordering exists = {has_word} (exhaustive word search)", f"search says {has_order}")
    return None


def _check_binary_recognition(g: LabeledBipartiteGraph):
    by_nbhd = recognition.recognize_binary(g) is not None
    by_chord = recognition.check_binary_via_chordality(g)
    by_search = canonical_key(g) in representable_keys(len(g), 2)
    if not by_nbhd == by_chord == by_search:
        return (
            f"all agree with exhaustive binary search ({by_search})",
            f"neighbourhood chain {by_nbhd}, chordality {by_chord}",
        )
    return None


def _check_ternary_recognition(g: LabeledBipartiteGraph):
    found = recognition.recognize_ternary(g)
    by_search = canonical_key(g) in representable_keys(len(g), 3)
    if (found is not None) != by_search:
        return (f"ternary representable = {by_search} (exhaustive search)", f"recognize_ternary says {found is not None}")
    if found is not None:
        w = found.word
        if not graphs.are_isomorphic(parikh.parikh_graph(w).graph, g):
            return ("witness reproduces the graph", f"G({w}) differs")
    return None


def _check_hamiltonian_binary(w: Word):
    if w.count(1) != w.count(2):
        return None
    crit = analysis.binary_hamiltonian(w)
    brute = graphs.has_hamiltonian_cycle(parikh.parikh_graph(w).graph)
    if crit != brute:
        return (f"Hamiltonian = {brute} (backtracking)", f"prefix criterion says {crit}")
    return None


def _check_hamiltonian_ternary(w: Word):
    if w.count(1) + w.count(3) != w.count(2):
        return None
    g = parikh.parikh_graph(w).graph
    if not graphs.is_connected(g):
        return None
    crit = analysis.ternary_hamiltonian(w)
    brute = graphs.has_hamiltonian_cycle(g)
    if crit != brute:
        return (f"Hamiltonian = {brute} (backtracking)", f"position criterion says {crit}")
    return None


def _check_hamiltonian_ordering(g: LabeledBipartiteGraph):
    if len(g.x) != len(g.y):
        return None
    ordering = recognition.find_strong_ordering(g)
    if ordering is None:
        return None
    crit = analysis.hamiltonian_via_strong_ordering(g, ordering)
    brute = graphs.has_hamiltonian_cycle(g)
    if crit != brute:
        return (f"Hamiltonian = {brute} (backtracking)", f"4-cycle criterion says {crit}")
    return None


def _check_slender(s: int):
    got = analysis.count_slender_classes(s)
    want = analysis.partition_count(s)
    if got != want:
        return (f"{want} partitions", f"{got} classes")
    return None


def _check_longest_path(s: int):
    w = analysis.longest_path_word(s)
    g = parikh.parikh_graph(w).graph
    if not analysis.is_path_graph(g) or len(g) != 3 * s - 2:
        return (f"path on {3 * s - 2} vertices", f"G({w}) is not")
    return None


def _check_hierarchy(s: int):
    """The path with ``3s`` edges needs ``s + 1`` letters."""
    w = analysis.longest_path_word(s + 1)
    g = parikh.parikh_graph(w).graph
    if not analysis.is_path_graph(g) or len(g.edges) != 3 * s:
        return (f"G({w}) is a path with {3 * s} edges", "it is not")
    for n in range(1, len(g) + 1):
        for u in enumerate_words(s, n):
            h = parikh.parikh_graph(u).graph
            if len(h) == len(g) and analysis.is_path_graph(h):
                return (f"no word over {s} letters gives a path on {len(g)} vertices", f"{u} does")
    return None


SUITES: dict[str, Suite] = {}


def register(suite: Suite) -> Suite:
    SUITES[suite.name] = suite
    return suite


def _words(full: bool = False):
    return lambda spec: _words_of(spec, full)


def _binary_words(spec: EnumerationSpec):
    return _words_of(replace(spec, alphabet_sizes=(2, 2)))


def _ternary_words(spec: EnumerationSpec):
    return _words_of(replace(spec, alphabet_sizes=(3, 3)))


def _sizes(spec: EnumerationSpec):
    lo, hi = spec.alphabet_sizes
    return range(lo, hi + 1)


def _equal_part_bpgs(spec: EnumerationSpec):
    return [g for g in _bpgs_of(spec) if len(g.x) == len(g.y)]


for _suite in (
    Suite("edge-count", "|E(G(w))| is the sum of |w|_{a_k a_(k+1)}; |V| = |w|; parity bipartition",
          _words(), _check_edge_count, defaults=dict(alphabet_sizes=(1, 4), lengths=(1, 8))),
    Suite("canonical-ordering", "descending-letter ordering of G(w) is strong for full-support words",
          _words(True), _check_canonical_ordering, defaults=dict(alphabet_sizes=(2, 4), lengths=(1, 8))),
    Suite("binary-permutation", "inversions of tau are exactly the edges of G(w), binary words",
          _binary_words, _check_binary_permutation, defaults=dict(alphabet_sizes=(2, 2), lengths=(1, 10))),
    Suite("permutation-graph", "every component of every G(w) admits a strong ordering",
          _words(), _check_components_strong, defaults=dict(alphabet_sizes=(2, 4), lengths=(1, 8))),
    Suite("diameter", "diameter bounds s+1 / s+3 / 3s-3 on connected G(w)",
          _words(), _check_diameter, defaults=dict(alphabet_sizes=(2, 4), lengths=(1, 8))),
    Suite("triple-subwords", "connected full-support words contain every a_i a_(i+1) a_(i+2)",
          _words(True), _check_triples, defaults=dict(alphabet_sizes=(3, 4), lengths=(1, 8))),
    Suite("induced-subgraph", "induced subgraphs of G(w) are Parikh graphs of subwords",
          _words(), _check_induced, defaults=dict(alphabet_sizes=(2, 3), lengths=(1, 6))),
    Suite("core-sigma", "G(core_Sigma(w)) is the non-isolated part of G(w)",
          _words(), _check_core_sigma, defaults=dict(alphabet_sizes=(2, 4), lengths=(1, 7))),
    Suite("round-trip", "synthesised words reproduce every bipartite permutation graph",
          _graphs_of, _check_round_trip, _graph_json, defaults=dict(max_vertices=8)),
    Suite("completeness", "strong ordering exists iff some word of length |V| represents the graph",
          _graphs_of, _check_completeness, _graph_json, defaults=dict(max_vertices=6)),
    Suite("binary-recognition", "nested neighbourhoods iff (6,2)-chordal with a full edge iff binary word",
          _graphs_of, _check_binary_recognition, _graph_json, defaults=dict(max_vertices=8)),
    Suite("ternary-recognition", "prefix/suffix neighbourhoods iff ternary word",
          _graphs_of, _check_ternary_recognition, _graph_json, defaults=dict(max_vertices=8)),
    Suite("hamiltonian-binary", "prefix criterion vs backtracking on balanced binary words",
          _binary_words, _check_hamiltonian_binary, defaults=dict(alphabet_sizes=(2, 2), lengths=(1, 10))),
    Suite("hamiltonian-ternary", "position criterion vs backtracking on balanced connected ternary words",
          _ternary_words, _check_hamiltonian_ternary, defaults=dict(alphabet_sizes=(3, 3), lengths=(1, 9))),
    Suite("hamiltonian-ordering", "consecutive 4-cycle criterion vs backtracking, |X| = |Y|",
          _equal_part_bpgs, _check_hamiltonian_ordering, _graph_json, defaults=dict(max_vertices=10)),
    Suite("slender", "slender Parikh graph classes are counted by integer partitions",
          _sizes, _check_slender, defaults=dict(alphabet_sizes=(2, 8))),
    Suite("longest-path", "longest_path_word(s) gives a path on 3s-2 vertices",
          _sizes, _check_longest_path, defaults=dict(alphabet_sizes=(2, 6))),
    Suite("hierarchy", "the path with 3s edges needs s+1 letters",
          _sizes, _check_hierarchy, defaults=dict(alphabet_sizes=(2, 3))),
):
    register(_suite)


def resolve(spec: EnumerationSpec) -> EnumerationSpec:
    """Fill unset fields from the suite defaults."""
    suite = SUITES.get(spec.suite)
    if suite is None:
        raise DomainError(f"unknown suite {spec.suite!r}; known: {', '.join(sorted(SUITES))}")
    filled = {k: v for k, v in suite.defaults.items() if getattr(spec, k) is None}
    return replace(spec, **filled) if filled else spec


def reproduction_command(spec: EnumerationSpec) -> str:
    parts = ["parikhgraph", "verify", "--suite", spec.suite]
    if spec.lengths is not None:
        parts += ["--min-len", str(spec.lengths[0]), "--max-len", str(spec.lengths[1])]
    if spec.alphabet_sizes is not None:
        parts += ["--min-alphabet-size", str(spec.alphabet_sizes[0]), "--alphabet-size", str(spec.alphabet_sizes[1])]
    if spec.max_vertices is not None:
        parts += ["--max-vertices", str(spec.max_vertices)]
    return shlex.join(parts)


def _run_chunk(args):
    name, items = args
    suite = SUITES[name]
    out = []
    for item in items:
        outcome = suite.check(item)
        if outcome is not None:
            out.append((suite.render(item), outcome))
    return out


def run_suite(name: str, spec: EnumerationSpec | None = None) -> SuiteResult:
    """Run a registered suite; counterexamples come back sorted by input."""
    spec = resolve(spec or EnumerationSpec(name))
    if spec.suite != name:
        spec = resolve(replace(spec, suite=name))
    suite = SUITES[name]
    items = list(suite.inputs(spec))
    if spec.jobs > 1 and len(items) > 1:
        size = max(1, len(items) // (spec.jobs * 4))
        chunks = [(name, items[i:i + size]) for i in range(0, len(items), size)]
        with ProcessPoolExecutor(max_workers=spec.jobs) as pool:
            found = [r for part in pool.map(_run_chunk, chunks) for r in part]
    else:
        found = _run_chunk((name, items))
    command = reproduction_command(spec)
    reports = sorted(
        (CounterexampleReport(name, text, expected, actual, command) for text, (expected, actual) in found),
        key=lambda r: r.input,
    )
    return SuiteResult(name, spec, len(items), reports)
