"""Diameter bounds, longest paths, slender words and Hamiltonicity tests."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Sequence

from . import config
from .errors import CapacityError, DomainError
from .graphs import LabeledBipartiteGraph, canonical_key, diameter, is_connected
from .parikh import StrongOrdering, is_strong_ordering, parikh_graph
from .recognition import compose_components
from .words import Word, ascending, core, position_of, subword_count, support

CORE_WORD = "core-word s+1"
CORE_NONEMPTY = "core-nonempty s+3 (or 3 when s=2)"
GENERAL = "general 3s-3"


@dataclass(frozen=True)
class DiameterReport:
    s: int
    word: Word
    connected: bool
    diameter: int | None
    core_nonempty: bool
    applicable_bound: int
    bound_source: str

    @property
    def within_bound(self) -> bool:
        return not self.connected or self.diameter <= self.applicable_bound

    def to_dict(self) -> dict:
        return {
            "word": str(self.word),
            "s": self.s,
            "connected": self.connected,
            "diameter": self.diameter,
            "core_nonempty": self.core_nonempty,
            "applicable_bound": self.applicable_bound,
            "bound_source": self.bound_source,
            "within_bound": self.within_bound,
        }


def diameter_report(w: Word, strict: bool = True) -> DiameterReport:
    """Diameter of ``G(w)`` against the tightest bound that applies to ``w``.

    With ``strict`` (the default) a violated bound raises ``AssertionError``;
    sweeps pass ``strict=False`` and read :attr:`DiameterReport.within_bound`.
    """
    if len(w) == 0:
        raise DomainError("diameter_report needs a nonempty word")
    s = w.size
    g = parikh_graph(w).graph
    connected = is_connected(g)
    diam = diameter(g) if connected else None
    full_core = core(w, ascending(1, s, s))
    if full_core == w and s >= 2:
        bound, source = s + 1, CORE_WORD
    elif len(full_core) > 0 and s >= 2:
        bound, source = (3 if s == 2 else s + 3), CORE_NONEMPTY
    else:
        bound, source = 3 * s - 3, GENERAL
    report = DiameterReport(s, w, connected, diam, len(full_core) > 0, bound, source)
    if strict:
        if source == CORE_WORD:
            assert connected, f"G({w}) should be connected when w is its own core"
        assert report.within_bound, f"diameter {diam} of G({w}) exceeds {source} bound {bound}"
    return report


def check_triple_subwords(w: Word) -> bool:
    """``|w|_{a_i a_{i+1} a_{i+2}} > 0`` for every ``i``; expected for connected full-support words."""
    s = w.size
    if s < 3:
        raise DomainError("check_triple_subwords needs an alphabet of size at least 3")
    if support(w) != frozenset(range(1, s + 1)):
        raise DomainError(f"{w} does not use every letter of its alphabet")
    if not is_connected(parikh_graph(w).graph):
        raise DomainError(f"G({w}) is not connected")
    return all(subword_count(w, (i, i + 1, i + 2)) > 0 for i in range(1, s - 1))


def longest_path_word(s: int) -> Word:
    """A word over ``s`` letters whose Parikh graph is a path with ``3s - 3`` edges.

    Start from ``abab``; to go from ``t`` to ``t + 1`` letters prefix
    ``a_t a_{t+1}`` and put another ``a_{t+1}`` right after the first ``a_t``.
    """
    if s < 2:
        raise DomainError("longest_path_word needs s >= 2")
    letters = [1, 2, 1, 2]
    for t in range(2, s):
        first = letters.index(t)
        letters = [t, t + 1] + letters[: first + 1] + [t + 1] + letters[first + 1:]
    return Word(tuple(letters), s)


def is_path_graph(g: LabeledBipartiteGraph) -> bool:
    """Connected, acyclic and every degree at most two."""
    if len(g) == 0 or not is_connected(g):
        return False
    return len(g.edges) == len(g) - 1 and all(len(n) <= 2 for n in g.adjacency.values())


def slender_word_for_partition(parts: Sequence[int], s: int | None = None) -> Word:
    """Slender word whose Parikh graph is a union of paths with the given vertex counts.

    Each part becomes an increasing run ``a_1 ... a_m``; runs are combined
    with :func:`compose_components`, so the first part gets the largest letters.
    """
    parts = list(parts)
    if not parts or any(not isinstance(p, int) or p < 1 for p in parts):
        raise DomainError(f"{parts!r} is not a partition into positive integers")
    if s is not None and sum(parts) != s:
        raise DomainError(f"parts sum to {sum(parts)}, not {s}")
    return compose_components([ascending(1, p, p) for p in parts])


def integer_partitions(n: int, largest: int | None = None):
    """Partitions of ``n`` as non-increasing tuples."""
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in integer_partitions(n - first, first):
            yield (first,) + rest


def partition_count(n: int) -> int:
    return sum(1 for _ in integer_partitions(n))


def slender_classes(s: int, cap: int | None = None) -> dict:
    """Isomorphism classes of Parikh graphs of all ``s!`` slender words, keyed canonically.

    Values are the lexicographically first word of each class.
    """
    if s < 1:
        raise DomainError("s must be positive")
    cap = config.limits().slender if cap is None else cap
    if s > cap:
        raise CapacityError(f"slender enumeration capped at s = {cap}, got {s}")
    classes: dict = {}
    for perm in permutations(range(1, s + 1)):
        w = Word(perm, s)
        classes.setdefault(canonical_key(parikh_graph(w).graph), w)
    return classes


def count_slender_classes(s: int, cap: int | None = None) -> int:
    if s < 2:
        raise DomainError("count_slender_classes needs s >= 2")
    return len(slender_classes(s, cap))


# -- Hamiltonicity ---------------------------------------------------------


def binary_hamiltonian(w: Word) -> bool:
    """Balanced, at least four letters, and every proper prefix has more a's than b's."""
    if w.size != 2:
        raise DomainError(f"binary_hamiltonian needs a binary alphabet, got size {w.size}")
    if w.count(1) != w.count(2) or len(w) < 4:
        return False
    lead = 0
    for a in w.letters[:-1]:
        lead += 1 if a == 1 else -1
        if lead <= 0:
            return False
    return True


def ternary_hamiltonian(w: Word) -> bool:
    """Position test for a Hamiltonian cycle in ``G(w)`` over ``a < b < c``.

    With ``k = |w|_b``: the ``i``-th ``c`` comes after the ``(i+1)``-th ``b``
    and the ``i``-th ``a`` from the end comes before the ``(i+1)``-th ``b``
    from the end, for ``i < k``.
    """
    if w.size != 3:
        raise DomainError(f"ternary_hamiltonian needs alphabet size 3, got {w.size}")
    na, nb, nc = w.count(1), w.count(2), w.count(3)
    if na + nc != nb:
        raise DomainError(f"|w|_a + |w|_c must equal |w|_b in {w}")
    if len(w) == 0 or not is_connected(parikh_graph(w).graph):
        raise DomainError(f"G({w}) is not connected")
    k = nb
    if k < 2:
        return False
    for i in range(1, min(nc, k - 1) + 1):
        if not position_of(w, 3, i) > position_of(w, 2, i + 1):
            return False
    for i in range(1, min(na, k - 1) + 1):
        if not position_of(w, 1, na - i + 1) < position_of(w, 2, nb - i):
            return False
    return True


def hamiltonian_via_strong_ordering(g: LabeledBipartiteGraph, ordering: StrongOrdering) -> bool:
    """Consecutive pairs ``x_i, y_i, x_{i+1}, y_{i+1}`` all span 4-cycles."""
    if len(g.x) != len(g.y):
        return False
    if not is_connected(g):
        raise DomainError("hamiltonian_via_strong_ordering needs a connected graph")
    if not is_strong_ordering(g, ordering):
        raise DomainError("ordering is not a strong ordering of the graph")
    xs, ys = ordering.order_x, ordering.order_y
    if len(xs) < 2:
        return False
    for i in range(len(xs) - 1):
        x0, x1, y0, y1 = xs[i], xs[i + 1], ys[i], ys[i + 1]
        if not (g.has_edge(x0, y0) and g.has_edge(y0, x1) and g.has_edge(x1, y1) and g.has_edge(y1, x0)):
            return False
    return True
