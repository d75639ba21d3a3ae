"""Parikh graphs of words, and the orderings and permutations they carry.

A vertex of the Parikh graph is the pair ``(letter, occurrence)``: the
``l``-th occurrence of ``a_i`` in the word.  Two vertices are adjacent
exactly when their letters are consecutive, ``a_i`` and ``a_{i+1}``, and the
``a_i`` occurs before the ``a_{i+1}``.  Odd letters form part X, even
letters part Y.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple, Sequence

from .errors import DomainError
from .graphs import LabeledBipartiteGraph
from .words import Word, core_positions, letter_name, subword_count, support


class ParikhVertex(NamedTuple):
    letter: int
    occurrence: int

    def render(self, size: int = 26) -> str:
        return f"{letter_name(self.letter, size)}:{self.occurrence}"


@dataclass(frozen=True)
class StrongOrdering:
    """A pair of linear orders, one per part, listed smallest first."""

    order_x: tuple
    order_y: tuple

    def __post_init__(self) -> None:
        object.__setattr__(self, "order_x", tuple(self.order_x))
        object.__setattr__(self, "order_y", tuple(self.order_y))

    def reversed(self) -> "StrongOrdering":
        return StrongOrdering(self.order_x[::-1], self.order_y[::-1])

    def to_dict(self, render=str) -> dict:
        return {"x": [render(v) for v in self.order_x], "y": [render(v) for v in self.order_y]}


@dataclass(frozen=True)
class ParikhGraph:
    word: Word
    graph: LabeledBipartiteGraph

    @cached_property
    def vertex_at(self) -> tuple:
        """``vertex_at[p]`` is the vertex of the letter at 0-based position ``p``."""
        seen: dict = {}
        out = []
        for a in self.word.letters:
            seen[a] = seen.get(a, 0) + 1
            out.append(ParikhVertex(a, seen[a]))
        return tuple(out)

    @cached_property
    def position(self) -> dict:
        """0-based position of each vertex."""
        return {v: p for p, v in enumerate(self.vertex_at)}

    def render(self, v: ParikhVertex) -> str:
        return v.render(self.word.size)

    def position_graph(self) -> LabeledBipartiteGraph:
        """The same graph on vertices ``1..n`` (letter positions)."""
        return self.graph.relabel({v: p + 1 for v, p in self.position.items()})

    def to_json(self, indent: int | None = None) -> str:
        return self.graph.to_json(self.render, indent=indent)

    def to_dot(self) -> str:
        return self.graph.to_dot(self.render)


def parikh_graph(w: Word) -> ParikhGraph:
    if len(w) == 0:
        raise DomainError("the Parikh graph of the empty word is undefined")
    seen: dict = {}
    verts = []
    for a in w.letters:
        seen[a] = seen.get(a, 0) + 1
        verts.append(ParikhVertex(a, seen[a]))
    edges = set()
    for i, u in enumerate(verts):
        for v in verts[i + 1:]:
            if v.letter == u.letter + 1:
                edges.add((u, v) if u.letter % 2 else (v, u))
            # a_{k+1} before a_k gives no edge
    xs = [v for v in _canonical_vertex_order(w) if v.letter % 2 == 1]
    ys = [v for v in _canonical_vertex_order(w) if v.letter % 2 == 0]
    return ParikhGraph(w, LabeledBipartiteGraph(tuple(xs), tuple(ys), frozenset(edges)))


def _canonical_vertex_order(w: Word) -> list[ParikhVertex]:
    """Letters in descending order, occurrences ascending within each letter."""
    out = []
    for a in sorted(support(w), reverse=True):
        out += [ParikhVertex(a, l) for l in range(1, w.count(a) + 1)]
    return out


def expected_edge_count(w: Word) -> int:
    return sum(subword_count(w, (k, k + 1)) for k in range(1, w.size))


def core_sigma_positions(w: Word) -> list[int]:
    """Positions contributing to ``|w|_{a_k a_{k+1}}`` for some ``k``."""
    keep: set = set()
    for k in range(1, w.size):
        keep.update(core_positions(w, (k, k + 1)))
    return sorted(keep)


def core_sigma(w: Word) -> Word:
    return Word(tuple(w.letters[p] for p in core_sigma_positions(w)), w.size)


def subword_at(w: Word, positions: Sequence[int]) -> Word:
    return Word(tuple(w.letters[p] for p in sorted(positions)), w.size)


def has_contiguous_support(w: Word) -> bool:
    sup = support(w)
    return not sup or max(sup) - min(sup) + 1 == len(sup)


def canonical_strong_ordering(w: Word) -> StrongOrdering:
    """The ordering that lists each part by descending letter, ascending occurrence.

    Defined for words whose support is a run of consecutive letters; for the
    full alphabet this is exactly the construction that makes every Parikh
    graph a bipartite permutation graph.
    """
    if len(w) == 0:
        raise DomainError("the empty word has no Parikh graph")
    if not has_contiguous_support(w):
        raise DomainError(
            f"support of {w} has a gap; split the word at the gap or relabel its letters "
            "to consecutive indices first"
        )
    order = _canonical_vertex_order(w)
    return StrongOrdering(
        tuple(v for v in order if v.letter % 2 == 1),
        tuple(v for v in order if v.letter % 2 == 0),
    )


def is_strong_ordering(g: LabeledBipartiteGraph, ordering: StrongOrdering) -> bool:
    """For crossing edges ``x < x'``, ``y' < y`` both straight edges must exist."""
    if len(ordering.order_x) != len(g.x) or set(ordering.order_x) != set(g.x):
        raise DomainError("order_x must list exactly the vertices of part X")
    if len(ordering.order_y) != len(g.y) or set(ordering.order_y) != set(g.y):
        raise DomainError("order_y must list exactly the vertices of part Y")
    rx = {v: i for i, v in enumerate(ordering.order_x)}
    ry = {v: i for i, v in enumerate(ordering.order_y)}
    edges = [(rx[u], ry[v]) for u, v in g.edges]
    present = set(edges)
    for x, y in edges:
        for x2, y2 in edges:
            if x < x2 and y2 < y:
                if (x, y2) not in present or (x2, y) not in present:
                    return False
    return True


def binary_permutation(w: Word) -> tuple[int, ...]:
    """The permutation whose inversions are exactly the edges of ``G(w)``, ``s = 2``.

    The ``i``-th ``b`` goes to ``i``; the ``j``-th ``a`` goes to ``j + |w|_b``.
    Returned as ``(tau(1), ..., tau(n))``.
    """
    if w.size != 2:
        raise DomainError(f"binary_permutation needs a binary alphabet, got size {w.size}")
    nb = w.count(2)
    seen = {1: 0, 2: 0}
    tau = []
    for a in w.letters:
        seen[a] += 1
        tau.append(seen[a] if a == 2 else seen[a] + nb)
    return tuple(tau)


def is_permutation_realization(g: LabeledBipartiteGraph, order: Sequence, tau: Sequence[int]) -> bool:
    """Adjacency of ``order[i] , order[j]`` (i < j) coincides with ``tau[i] > tau[j]``."""
    order = list(order)
    if len(order) != len(g) or set(order) != set(g.vertices) or len(set(order)) != len(order):
        raise DomainError("vertex order must enumerate every vertex exactly once")
    if len(tau) != len(order) or sorted(tau) != list(range(1, len(order) + 1)):
        raise DomainError(f"tau must be a permutation of 1..{len(order)}")
    for i in range(len(order)):
        for j in range(i + 1, len(order)):
            if g.has_edge(order[i], order[j]) != (tau[i] > tau[j]):
                return False
    return True
