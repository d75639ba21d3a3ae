"""From graphs back to words.

The main route is: find a strong ordering by backtracking, cut the graph
into the nested sequence of complete blocks that a strong ordering induces,
then grow a word block by block so that each intermediate word's Parikh
graph is the subgraph covered so far.  Binary and ternary recognition use
the neighbourhood characterisations directly and build shorter witnesses.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from . import config
from .errors import CapacityError, DomainError, NotRepresentableError
from .graphs import (
    LabeledBipartiteGraph,
    connected_components,
    induced_subgraph,
    is_62_chordal,
    is_connected,
)
from .parikh import ParikhVertex, StrongOrdering, is_strong_ordering, parikh_graph
from .words import Word, format_letters

# -- strong orderings ------------------------------------------------------


def _require_connected(g: LabeledBipartiteGraph, what: str) -> None:
    if len(g) == 0:
        raise DomainError(f"{what} needs a nonempty graph")
    if not is_connected(g):
        raise DomainError(f"{what} needs a connected graph; split it with connected_components first")


def _twin_rank(vertices: Sequence, adj: dict) -> dict:
    """Index of each vertex among the earlier vertices sharing its neighbourhood."""
    groups: dict = {}
    rank = {}
    for v in vertices:
        members = groups.setdefault(adj[v], [])
        rank[v] = (adj[v], len(members))
        members.append(v)
    return rank


def find_strong_ordering(g: LabeledBipartiteGraph, cap: int | None = None) -> StrongOrdering | None:
    """A strong ordering of a connected bipartite graph, or ``None`` if none exists.

    Both orders are grown by appending new maxima, alternating sides.  Each
    forbidden crossing is detected when the last of its four vertices is
    placed.  Neighbourhoods in a strong ordering of a connected graph are
    intervals, which gives an extra early cut-off, and vertices with equal
    neighbourhoods are placed in a fixed relative order.
    """
    _require_connected(g, "find_strong_ordering")
    cap = config.limits().strong_ordering if cap is None else cap
    if len(g) > cap:
        raise CapacityError(f"strong-ordering search capped at {cap} vertices, got {len(g)}")
    if len(g) == 1:
        return StrongOrdering(g.x, g.y)

    adj = g.adjacency
    twins = _twin_rank(g.vertices, adj)
    placed_twins: dict = {}
    order = {"x": [], "y": []}
    remaining = {"x": list(g.x), "y": list(g.y)}
    # placed[v]: bitmask of v's placed neighbours, bit k = rank k on the other side
    placed = {v: 0 for v in g.vertices}

    def consistent(v, side: str) -> bool:
        mine = order[side]
        k = len(mine)
        # neighbourhoods stay intervals: a neighbour of v already touching
        # this side's placed prefix must touch its current last element
        if k:
            for u in adj[v]:
                mask = placed[u]
                if mask and not (mask >> (k - 1)) & 1:
                    return False
        # v is the new maximum on its side; a placed p < v with edge (p, q)
        # crosses (v, r) whenever r < q, and then p ~ r and v ~ q are forced
        a = placed[v]
        if not a:
            return True
        low_a = a & -a
        above_low = ~((low_a << 1) - 1)
        for p in mine:
            b = placed[p]
            if not b:
                continue
            below_high = (1 << (b.bit_length() - 1)) - 1
            if a & below_high & ~b or b & above_low & ~a:
                return False
        return True

    def doomed(v, side: str) -> bool:
        # a later vertex w on this side needs every already-touched neighbour
        # to be adjacent to all vertices in between, in particular to v
        nv = adj[v]
        for w in remaining[side]:
            for u in adj[w]:
                if placed[u] and u not in nv:
                    return True
        return False

    total = len(g)

    def extend(count: int) -> bool:
        if count == total:
            return True
        nx_, ny_ = len(order["x"]), len(order["y"])
        if remaining["x"] and (nx_ <= ny_ or not remaining["y"]):
            side = "x"
        else:
            side = "y"
        for v in list(remaining[side]):
            key, idx = twins[v]
            if placed_twins.get(key, 0) != idx:
                continue
            if not consistent(v, side):
                continue
            bit = 1 << len(order[side])
            order[side].append(v)
            for u in adj[v]:
                placed[u] |= bit
            slot = remaining[side].index(v)
            del remaining[side][slot]
            placed_twins[key] = idx + 1
            if doomed(v, side):
                pass
            elif extend(count + 1):
                return True
            placed_twins[key] = idx
            remaining[side].insert(slot, v)
            for u in adj[v]:
                placed[u] &= ~bit
            order[side].pop()
        return False

    if not extend(0):
        return None
    result = StrongOrdering(tuple(order["x"]), tuple(order["y"]))
    assert is_strong_ordering(g, result)
    return result


def is_bipartite_permutation_graph(g: LabeledBipartiteGraph, cap: int | None = None) -> bool:
    """Every component admits a strong ordering."""
    return all(find_strong_ordering(c, cap) is not None for c in connected_components(g))


# -- interval decomposition ------------------------------------------------


@dataclass(frozen=True)
class IntervalDecomposition:
    """Blocks ``X_1..X_n`` and ``Y_1..Y_n`` as half-open index ranges into the ordering."""

    ordering: StrongOrdering
    blocks_x: tuple
    blocks_y: tuple

    @property
    def n(self) -> int:
        return len(self.blocks_x)

    def x_block(self, p: int) -> tuple:
        """Vertices of ``X_p`` (``p`` is 1-based), in order."""
        lo, hi = self.blocks_x[p - 1]
        return self.ordering.order_x[lo:hi]

    def y_block(self, p: int) -> tuple:
        lo, hi = self.blocks_y[p - 1]
        return self.ordering.order_y[lo:hi]

    def to_dict(self, render=str) -> dict:
        return {
            "n": self.n,
            "x_blocks": [[render(v) for v in self.x_block(p)] for p in range(1, self.n + 1)],
            "y_blocks": [[render(v) for v in self.y_block(p)] for p in range(1, self.n + 1)],
        }


def _as_range(members: set, order: Sequence) -> tuple:
    idx = sorted(i for i, v in enumerate(order) if v in members)
    if not idx or idx[-1] - idx[0] + 1 != len(idx):
        raise DomainError("block is not an interval of the ordering")
    return (idx[0], idx[-1] + 1)


def interval_decomposition(g: LabeledBipartiteGraph, ordering: StrongOrdering) -> IntervalDecomposition:
    """Cut ``g`` into complete blocks following the given strong ordering.

    The first blocks are the neighbourhoods of the last vertices of each
    part.  After that, ``x*`` and ``y*`` are the last vertices of each part
    still incident to an uncovered edge, and the next blocks are the
    neighbours of ``y*`` up to ``x*`` and the neighbours of ``x*`` up to ``y*``.
    """
    _require_connected(g, "interval_decomposition")
    if not g.edges:
        raise DomainError("interval_decomposition needs at least one edge")
    if not is_strong_ordering(g, ordering):
        raise DomainError("ordering is not a strong ordering of the graph")
    ox, oy = ordering.order_x, ordering.order_y
    rx = {v: i for i, v in enumerate(ox)}
    ry = {v: i for i, v in enumerate(oy)}
    adj = g.adjacency

    x_last, y_last = ox[-1], oy[-1]
    xb = set(adj[y_last])
    yb = set(adj[x_last])
    blocks_x = [_as_range(xb, ox)]
    blocks_y = [_as_range(yb, oy)]
    covered_x, covered_y = set(xb), set(yb)

    while len(covered_x) < len(ox) or len(covered_y) < len(oy):
        # an edge is outside E(G_l) iff one of its endpoints is uncovered
        loose = [(u, v) for u, v in g.edges if u not in covered_x or v not in covered_y]
        x_star = max((u for u, _ in loose), key=rx.__getitem__)
        y_star = max((v for _, v in loose), key=ry.__getitem__)
        xb = {u for u in adj[y_star] if rx[u] <= rx[x_star]}
        yb = {v for v in adj[x_star] if ry[v] <= ry[y_star]}
        blocks_x.append(_as_range(xb, ox))
        blocks_y.append(_as_range(yb, oy))
        covered_x |= xb
        covered_y |= yb

    return IntervalDecomposition(ordering, tuple(blocks_x), tuple(blocks_y))


def decomposition_violations(g: LabeledBipartiteGraph, dec: IntervalDecomposition) -> list[str]:
    """Which of the five block properties fail; empty when all hold."""
    problems = []
    ox, oy = dec.ordering.order_x, dec.ordering.order_y
    n = dec.n
    xs = [set(dec.x_block(p)) for p in range(1, n + 1)]
    ys = [set(dec.y_block(p)) for p in range(1, n + 1)]
    if set().union(*xs) != set(ox) or set().union(*ys) != set(oy):
        problems.append("blocks do not cover the parts")
    for label, blocks, order in (("X", xs, ox), ("Y", ys, oy)):
        union: set = set()
        for p, block in enumerate(blocks, start=1):
            if not block:
                problems.append(f"{label}_{p} is empty")
            union |= block
            k = len(union)
            if set(order[len(order) - k:]) != union:
                problems.append(f"union of {label}_1..{label}_{p} is not an end segment")
            ordered_union = [v for v in order if v in union]
            if set(ordered_union[: len(block)]) != block:
                problems.append(f"{label}_{p} is not an initial segment of the union")
        for p in range(n - 1):
            if blocks[p] <= blocks[p + 1]:
                problems.append(f"{label}_{p + 1} is contained in {label}_{p + 2}")
    for p in range(n - 1):
        if not (xs[p + 1] - xs[p]) and not (ys[p + 1] - ys[p]):
            problems.append(f"step {p + 2} adds no new vertex")
    prev_edges: set = set()
    cov_x: set = set()
    cov_y: set = set()
    for p in range(n):
        cov_x |= xs[p]
        cov_y |= ys[p]
        edges = {(u, v) for u, v in g.edges if u in cov_x and v in cov_y}
        expected = prev_edges | {(u, v) for u in xs[p] for v in ys[p]}
        if edges != expected:
            problems.append(f"E(G_{p + 1}) != E(G_{p}) + X_{p + 1} x Y_{p + 1}")
        prev_edges = edges
    return problems


# -- word synthesis --------------------------------------------------------


@dataclass
class SynthesisStep:
    word: Word
    size: int
    case: str
    mapping: dict


@dataclass
class SynthesisResult:
    word: Word
    mapping: dict
    ordering: StrongOrdering | None = None
    decomposition: IntervalDecomposition | None = None
    steps: list = field(default_factory=list)

    def __iter__(self):
        yield self.word
        yield self.mapping

    def trace_dict(self, render=str) -> dict:
        return {
            "ordering": self.ordering.to_dict(render) if self.ordering else None,
            "decomposition": self.decomposition.to_dict(render) if self.decomposition else None,
            "steps": [
                {
                    "word": str(step.word),
                    "alphabet_size": step.size,
                    "case": step.case,
                    "embedding": {render(v): pv.render(step.word.size) for v, pv in step.mapping.items()},
                }
                for step in self.steps
            ],
        }


def _tokens_to_mapping(tokens: list) -> dict:
    seen: dict = {}
    mapping = {}
    for letter, v in tokens:
        seen[letter] = seen.get(letter, 0) + 1
        mapping[v] = ParikhVertex(letter, seen[letter])
    return mapping


def _nth_gap(tokens: list, letter: int, k: int) -> int:
    """Insertion index right after the ``k``-th ``letter``; before the first one when ``k == 0``."""
    seen = 0
    for i, (a, _) in enumerate(tokens):
        if a == letter:
            if k == 0:
                return i
            seen += 1
            if seen == k:
                return i + 1
    raise RuntimeError(f"word has fewer than {max(k, 1)} copies of letter {letter}")


def _insert_runs(tokens: list, runs: list) -> list:
    """``runs`` holds ``(gap, letter, vertices)``; equal gaps get the smaller letter first."""
    by_gap: dict = {}
    for gap, letter, verts in sorted(runs, key=lambda r: (r[0], r[1])):
        by_gap.setdefault(gap, []).extend((letter, v) for v in verts)
    out = []
    for i in range(len(tokens) + 1):
        out.extend(by_gap.get(i, ()))
        if i < len(tokens):
            out.append(tokens[i])
    return out


def _check_embedding(g: LabeledBipartiteGraph, w: Word, mapping: dict) -> bool:
    pg = parikh_graph(w).graph
    if len(mapping) != len(g) or set(mapping.values()) != set(pg.vertices):
        return False
    image = {frozenset((mapping[u], mapping[v])) for u, v in g.edges}
    return image == {frozenset(e) for e in pg.edges}


def synthesize_word(g: LabeledBipartiteGraph, ordering: StrongOrdering | None = None,
                    cap: int | None = None) -> SynthesisResult:
    """A word whose Parikh graph is isomorphic to the connected graph ``g``.

    Raises :class:`NotRepresentableError` when ``g`` has no strong ordering.
    """
    _require_connected(g, "synthesize_word")
    if len(g) == 1:
        (v,) = g.vertices
        w = Word((1,), 1)
        return SynthesisResult(w, {v: ParikhVertex(1, 1)})
    if ordering is None:
        ordering = find_strong_ordering(g, cap)
        if ordering is None:
            raise NotRepresentableError("graph has no strong ordering, so it is not a bipartite permutation graph")
    dec = interval_decomposition(g, ordering)

    xb = [list(dec.x_block(p)) for p in range(1, dec.n + 1)]
    yb = [list(dec.y_block(p)) for p in range(1, dec.n + 1)]
    # part X is always carried by odd letters
    tokens = [(1, v) for v in xb[0]] + [(2, v) for v in yb[0]]
    s = 2
    top = "y"
    steps = [SynthesisStep(Word(tuple(a for a, _ in tokens), s), s, "base", _tokens_to_mapping(tokens))]

    for l in range(dec.n - 1):
        blocks = {"x": (xb[l], xb[l + 1]), "y": (yb[l], yb[l + 1])}
        bottom = "x" if top == "y" else "y"
        t_cur, t_next = blocks[top]
        o_cur, o_next = blocks[bottom]
        new_t = [v for v in t_next if v not in set(t_cur)]
        new_o = [v for v in o_next if v not in set(o_cur)]
        k_o = len(set(o_cur) & set(o_next))
        k_t = len(set(t_cur) & set(t_next))
        mapping = _tokens_to_mapping(tokens)
        block_letters = {mapping[v].letter for v in xb[l] + yb[l]}
        n_top = sum(1 for a, _ in tokens if a == s)
        ternary = len(block_letters) == 3

        runs = []
        if new_t:
            runs.append((_nth_gap(tokens, s - 1, k_o), s, new_t))
        if not ternary or k_t <= n_top:
            case = "ternary, top letter suffices" if ternary else "binary"
            if new_o:
                runs.append((_nth_gap(tokens, s, k_t), s + 1, new_o))
            tokens = _insert_runs(tokens, runs)
            if new_o:
                s += 1
                top = bottom
        else:
            case = "ternary, reaches below top letter"
            if new_o:
                runs.append((_nth_gap(tokens, s - 2, k_t - n_top), s - 1, new_o))
            tokens = _insert_runs(tokens, runs)
        steps.append(SynthesisStep(Word(tuple(a for a, _ in tokens), s), s, case, _tokens_to_mapping(tokens)))

    w = Word(tuple(a for a, _ in tokens), s)
    mapping = _tokens_to_mapping(tokens)
    if not _check_embedding(g, w, mapping):
        raise RuntimeError(f"synthesised word {w} does not reproduce the input graph")
    return SynthesisResult(w, mapping, ordering, dec, steps)


def trace_violations(g: LabeledBipartiteGraph, result: SynthesisResult) -> list[str]:
    """Check the per-step guarantees of a synthesis run."""
    problems = []
    dec = result.decomposition
    if dec is None:
        return problems
    covered: set = set()
    prev = None
    for p, step in enumerate(result.steps, start=1):
        covered |= set(dec.x_block(p)) | set(dec.y_block(p))
        w = step.word
        if set(w.letters) != set(range(1, step.size + 1)):
            problems.append(f"step {p}: support of {w} is not the full alphabet of size {step.size}")
        if prev is not None and not (len(prev.letters) < len(w.letters) and _is_subword(prev.letters, w.letters)):
            problems.append(f"step {p}: {prev} is not a proper subword of {w}")
        if not _check_embedding(induced_subgraph(g, covered), w, step.mapping):
            problems.append(f"step {p}: embedding is not an isomorphism onto G({w})")
        letters = {step.mapping[v].letter for v in dec.x_block(p) + dec.y_block(p)}
        if len(letters) > 3:
            problems.append(f"step {p}: current block spans {len(letters)} letters")
        prev = w
    return problems


def _is_subword(u: Sequence, w: Sequence) -> bool:
    it = iter(w)
    return all(any(a == b for b in it) for a in u)


# -- binary and ternary recognition ----------------------------------------


@dataclass
class Recognition:
    word: Word
    mapping: dict
    role: str  # which part of the input carries the odd letters

    def __iter__(self):
        yield self.word
        yield self.mapping


def _neighbourhood_chain(part: Sequence, adj: dict) -> list | None:
    ordered = sorted(part, key=lambda v: -len(adj[v]))
    for a, b in zip(ordered, ordered[1:]):
        if not adj[b] <= adj[a]:
            return None
    return ordered


def recognize_binary(g: LabeledBipartiteGraph) -> Recognition | None:
    """Witness over ``{a < b}`` when one part's neighbourhoods are totally ordered by inclusion."""
    _require_connected(g, "recognize_binary")
    adj = g.adjacency
    for role, part, rest in (("x", g.x, g.y), ("y", g.y, g.x)):
        if not part:
            continue
        chain = _neighbourhood_chain(part, adj)
        if chain is None:
            continue
        tokens = []
        placed: set = set()
        for i, v in enumerate(chain):
            tokens.append((1, v))
            later = adj[chain[i + 1]] if i + 1 < len(chain) else frozenset()
            block = [u for u in rest if u in adj[v] and u not in later and u not in placed]
            placed.update(block)
            tokens += [(2, u) for u in block]
        w = Word(tuple(a for a, _ in tokens), 2)
        mapping = _tokens_to_mapping(tokens)
        if not _check_embedding(g, w, mapping):
            raise RuntimeError(f"binary witness {w} does not reproduce the input graph")
        return Recognition(w, mapping, role)
    return None


def check_binary_via_chordality(g: LabeledBipartiteGraph, cap: int | None = None) -> bool:
    """(6,2)-chordal and some edge whose endpoint degrees sum to ``|V|``."""
    _require_connected(g, "check_binary_via_chordality")
    n = len(g)
    if not any(g.degree(u) + g.degree(v) == n for u, v in g.edges):
        return False
    return is_62_chordal(g, cap)


def _segment_order(ys: Sequence, initial: list, end: list) -> list | None:
    """Order ``ys`` so each set in ``initial`` is a prefix and each in ``end`` a suffix."""
    initial = sorted(initial, key=len)
    end = sorted(end, key=len)

    def rank(y, chain):
        for t, s in enumerate(chain):
            if y in s:
                return t
        return len(chain)

    order = sorted(ys, key=lambda y: (rank(y, initial), -rank(y, end)))
    pos = {y: i for i, y in enumerate(order)}
    n = len(order)
    for s in initial:
        if any(pos[y] >= len(s) for y in s):
            return None
    for s in end:
        if any(pos[y] < n - len(s) for y in s):
            return None
    return order


def _ternary_witness(ys: Sequence, order: list, initial: list, end: list) -> list:
    """Tokens of a word over ``a < b < c``; ``initial``/``end`` hold ``(vertex, nbhd)`` pairs."""
    n = len(order)
    pos = {y: i for i, y in enumerate(order)}
    c_gap: dict = {}
    for v, nb in sorted(initial, key=lambda t: len(t[1])):
        c_gap.setdefault(len(nb), []).append(v)  # c after the |N(x)|-th b
    a_gap: dict = {}
    for v, nb in sorted(end, key=lambda t: -len(t[1])):
        a_gap.setdefault(n - len(nb), []).append(v)  # a with exactly |N(x)| b's after it
    tokens = []
    for j in range(n + 1):
        tokens += [(3, v) for v in c_gap.get(j, ())]
        tokens += [(1, v) for v in a_gap.get(j, ())]
        if j < n:
            tokens.append((2, order[j]))
    assert all(pos[order[j]] == j for j in range(n))
    return tokens


def recognize_ternary(g: LabeledBipartiteGraph, cap: int | None = None) -> Recognition | None:
    """Witness over ``{a < b < c}`` or ``None``.

    Binary-representable graphs get their binary witness.  Otherwise one part
    plays the role of the ``b``'s and each vertex of the other part is typed
    as touching a prefix (a ``c``) or a suffix (an ``a``) of some order on
    the ``b``'s; types are enumerated with chain pruning.
    """
    _require_connected(g, "recognize_ternary")
    cap = config.limits().ternary if cap is None else cap
    if len(g) > cap:
        raise CapacityError(f"ternary search capped at {cap} vertices, got {len(g)}")
    binary = recognize_binary(g)
    if binary is not None:
        return Recognition(binary.word.with_size(3), binary.mapping, binary.role)
    adj = g.adjacency
    for role, outer, middle in (("x", g.x, g.y), ("y", g.y, g.x)):
        full = frozenset(middle)
        free = [v for v in outer if adj[v] == full]
        typed = [v for v in outer if adj[v] != full]
        found = _assign_types(typed, adj)
        for initial, end in found:
            init_pairs = [(v, adj[v]) for v in initial + free]
            end_pairs = [(v, adj[v]) for v in end]
            order = _segment_order(middle, [nb for _, nb in init_pairs], [nb for _, nb in end_pairs])
            if order is None:
                continue
            tokens = _ternary_witness(middle, order, init_pairs, end_pairs)
            w = Word(tuple(a for a, _ in tokens), 3)
            mapping = _tokens_to_mapping(tokens)
            if not _check_embedding(g, w, mapping):
                raise RuntimeError(f"ternary witness {w} does not reproduce the input graph")
            return Recognition(w, mapping, role)
    return None


def _assign_types(vertices: list, adj: dict):
    """Yield ``(initial, end)`` splits whose neighbourhood families are both chains."""
    initial: list = []
    end: list = []

    def comparable(v, group):
        return all(adj[v] <= adj[u] or adj[u] <= adj[v] for u in group)

    def rec(i):
        if i == len(vertices):
            yield list(initial), list(end)
            return
        v = vertices[i]
        for group in (initial, end):
            if comparable(v, group):
                group.append(v)
                yield from rec(i + 1)
                group.pop()

    yield from rec(0)


def merge_projections(v_bc: Word, v_ab: Word) -> Word:
    """A word ``w`` with ``pi_{b,c}(w) = v_bc`` and ``pi_{a,b}(w) = v_ab``.

    Both inputs must have the same number of ``b``'s.  Between consecutive
    ``b``'s the ``c``'s are written before the ``a``'s.
    """
    def gaps(w: Word, other: int) -> list:
        out = [[]]
        for a in w.letters:
            if a == 2:
                out.append([])
            elif a == other:
                out[-1].append(a)
            else:
                raise DomainError(f"unexpected letter {a} in projection")
        return out

    gc = gaps(v_bc, 3)
    ga = gaps(v_ab, 1)
    if len(gc) != len(ga):
        raise DomainError("projections disagree on the number of b's")
    letters = []
    for j in range(len(gc)):
        letters += gc[j] + ga[j]
        if j < len(gc) - 1:
            letters.append(2)
    return Word(tuple(letters), 3)


# -- components ------------------------------------------------------------


def compose_components(words: Sequence[Word]) -> Word:
    """Concatenate words on disjoint letter ranges, later words on smaller letters.

    Each word is first shifted so its smallest letter is ``a_1`` (gaps inside
    a word are kept).  Because every later block sits strictly below every
    earlier one, a letter ``a_k`` from a later block never precedes an
    ``a_{k+1}`` from an earlier block, so no edge crosses blocks.
    """
    if not words:
        raise DomainError("compose_components needs at least one word")
    shifted = []
    for w in words:
        if len(w) == 0:
            raise DomainError("every block must be a nonempty word")
        lo, hi = min(w.letters), max(w.letters)
        shifted.append(([a - lo + 1 for a in w.letters], hi - lo + 1))
    total = sum(width for _, width in shifted)
    letters = []
    offset = total
    for block, width in shifted:
        offset -= width
        letters += [a + offset for a in block]
    return Word(tuple(letters), total)


def synthesize_any(g: LabeledBipartiteGraph, cap: int | None = None) -> Word | None:
    """A representing word for any bipartite graph, or ``None`` if some component fails."""
    words = []
    for comp in connected_components(g):
        try:
            words.append(synthesize_word(comp, cap=cap).word)
        except NotRepresentableError:
            return None
    if not words:
        return None
    return compose_components(words)


def render_word(w: Word) -> str:
    return format_letters(w.letters, w.size)
