"""Bipartite graphs with an explicit, fixed bipartition.

The searches here (isomorphism, Hamiltonian cycles, cycle enumeration) are
exact backtracking and guarded by vertex caps; they are meant for graphs of
a dozen or so vertices.
"""

from __future__ import annotations

import json
from collections import Counter, deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Hashable, Iterable, Iterator, Mapping, Sequence

from . import config
from .errors import CapacityError, DomainError

Label = Hashable


@dataclass(frozen=True)
class LabeledBipartiteGraph:
    """Bipartite graph ``(X, Y, E)``; every edge is stored as ``(x, y)`` with ``x`` in ``X``."""

    x: tuple
    y: tuple
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", tuple(self.x))
        object.__setattr__(self, "y", tuple(self.y))
        if len(set(self.x)) != len(self.x) or len(set(self.y)) != len(self.y):
            raise DomainError("vertex labels must be unique within each part")
        xs, ys = set(self.x), set(self.y)
        if xs & ys:
            raise DomainError(f"parts overlap on {sorted(map(str, xs & ys))}")
        normalized = set()
        for u, v in self.edges:
            if u in xs and v in ys:
                normalized.add((u, v))
            elif v in xs and u in ys:
                normalized.add((v, u))
            else:
                raise DomainError(f"edge ({u!r}, {v!r}) does not join part X to part Y")
        object.__setattr__(self, "edges", frozenset(normalized))

    # -- basic structure -------------------------------------------------

    @cached_property
    def vertices(self) -> tuple:
        return self.x + self.y

    @cached_property
    def adjacency(self) -> dict:
        adj = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return {v: frozenset(n) for v, n in adj.items()}

    @cached_property
    def _xset(self) -> frozenset:
        return frozenset(self.x)

    def __len__(self) -> int:
        return len(self.x) + len(self.y)

    def __contains__(self, v) -> bool:
        return v in self.adjacency

    def side(self, v) -> str:
        self._check(v)
        return "x" if v in self._xset else "y"

    def has_edge(self, u, v) -> bool:
        return v in self.adjacency.get(u, ())

    def degree(self, v) -> int:
        return len(self.neighbors(v))

    def neighbors(self, v) -> frozenset:
        self._check(v)
        return self.adjacency[v]

    def _check(self, v) -> None:
        if v not in self.adjacency:
            raise DomainError(f"unknown vertex {v!r}")

    def swapped(self) -> "LabeledBipartiteGraph":
        return LabeledBipartiteGraph(self.y, self.x, frozenset((v, u) for u, v in self.edges))

    def relabel(self, mapping: Mapping) -> "LabeledBipartiteGraph":
        return LabeledBipartiteGraph(
            tuple(mapping[v] for v in self.x),
            tuple(mapping[v] for v in self.y),
            frozenset((mapping[u], mapping[v]) for u, v in self.edges),
        )

    # -- serialisation ---------------------------------------------------

    def to_dict(self, render=str) -> dict:
        xi = {v: i for i, v in enumerate(self.x)}
        yi = {v: i for i, v in enumerate(self.y)}
        edges = sorted(self.edges, key=lambda e: (xi[e[0]], yi[e[1]]))
        return {
            "x": [render(v) for v in self.x],
            "y": [render(v) for v in self.y],
            "edges": [[render(u), render(v)] for u, v in edges],
        }

    def to_json(self, render=str, indent: int | None = None) -> str:
        return json.dumps(self.to_dict(render), indent=indent)

    @classmethod
    def from_dict(cls, data: Mapping) -> "LabeledBipartiteGraph":
        try:
            xs, ys, raw = data["x"], data["y"], data["edges"]
        except (KeyError, TypeError):
            raise DomainError('graph JSON needs the keys "x", "y" and "edges"')
        for label in [*xs, *ys]:
            if not isinstance(label, str):
                raise DomainError(f"vertex labels must be strings, got {label!r}")
        xset, yset = set(xs), set(ys)
        seen = set()
        edges = []
        for e in raw:
            if not isinstance(e, (list, tuple)) or len(e) != 2:
                raise DomainError(f"edge {e!r} must be a pair of labels")
            u, v = e
            if u in yset and v in xset:
                u, v = v, u
            if u not in xset or v not in yset:
                raise DomainError(f"edge {e!r} does not join an x label to a y label")
            if (u, v) in seen:
                raise DomainError(f"duplicate edge {e!r}")
            seen.add((u, v))
            edges.append((u, v))
        return cls(tuple(xs), tuple(ys), frozenset(edges))

    @classmethod
    def from_json(cls, text: str) -> "LabeledBipartiteGraph":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise DomainError(f"invalid graph JSON: {exc}") from None
        return cls.from_dict(data)

    def to_dot(self, render=str, name: str = "G") -> str:
        def q(v):
            return json.dumps(render(v))

        lines = [f"graph {name} {{", "  rankdir=LR;"]
        for part in (self.x, self.y):
            if part:
                lines.append("  { rank=same; " + " ".join(f"{q(v)};" for v in part) + " }")
        for u, v in self.to_dict_edges():
            lines.append(f"  {q(u)} -- {q(v)};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_dict_edges(self) -> list:
        xi = {v: i for i, v in enumerate(self.x)}
        yi = {v: i for i, v in enumerate(self.y)}
        return sorted(self.edges, key=lambda e: (xi[e[0]], yi[e[1]]))


# -- small constructors ----------------------------------------------------


def bipartite(x: Iterable, y: Iterable, edges: Iterable) -> LabeledBipartiteGraph:
    return LabeledBipartiteGraph(tuple(x), tuple(y), frozenset(tuple(e) for e in edges))


def path_graph(n: int) -> LabeledBipartiteGraph:
    """Path on ``n`` vertices ``v1 - v2 - ... - vn``; odd positions form X."""
    names = [f"v{i}" for i in range(1, n + 1)]
    return bipartite(names[0::2], names[1::2], zip(names, names[1:]))


def cycle_graph(n: int) -> LabeledBipartiteGraph:
    if n < 4 or n % 2:
        raise DomainError("bipartite cycles need an even length of at least 4")
    names = [f"v{i}" for i in range(1, n + 1)]
    return bipartite(names[0::2], names[1::2], list(zip(names, names[1:])) + [(names[-1], names[0])])


def complete_bipartite(m: int, n: int) -> LabeledBipartiteGraph:
    xs = [f"x{i}" for i in range(1, m + 1)]
    ys = [f"y{j}" for j in range(1, n + 1)]
    return bipartite(xs, ys, [(a, b) for a in xs for b in ys])


def disjoint_union(*graphs: LabeledBipartiteGraph) -> LabeledBipartiteGraph:
    """Union with labels tagged ``(i, label)`` by graph index."""
    xs, ys, es = [], [], []
    for i, g in enumerate(graphs):
        xs += [(i, v) for v in g.x]
        ys += [(i, v) for v in g.y]
        es += [((i, u), (i, v)) for u, v in g.edges]
    return bipartite(xs, ys, es)


# -- metrics ---------------------------------------------------------------


def neighbors(g: LabeledBipartiteGraph, v) -> frozenset:
    return g.neighbors(v)


def _bfs(g: LabeledBipartiteGraph, source) -> dict:
    dist = {source: 0}
    queue = deque([source])
    adj = g.adjacency
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if v not in dist:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def distance(g: LabeledBipartiteGraph, u, v) -> int | None:
    """Shortest-path length, or ``None`` when ``v`` is unreachable from ``u``."""
    g._check(u)
    g._check(v)
    return _bfs(g, u).get(v)


def is_connected(g: LabeledBipartiteGraph) -> bool:
    if len(g) == 0:
        return True
    return len(_bfs(g, g.vertices[0])) == len(g)


def diameter(g: LabeledBipartiteGraph) -> int:
    if len(g) == 0:
        raise DomainError("the empty graph has no diameter")
    best = 0
    for v in g.vertices:
        dist = _bfs(g, v)
        if len(dist) != len(g):
            raise DomainError("diameter is undefined for a disconnected graph")
        best = max(best, max(dist.values()))
    return best


def eccentricities(g: LabeledBipartiteGraph) -> dict:
    return {v: max(_bfs(g, v).values()) for v in g.vertices}


def induced_subgraph(g: LabeledBipartiteGraph, vertices: Iterable) -> LabeledBipartiteGraph:
    keep = set(vertices)
    for v in keep:
        g._check(v)
    return LabeledBipartiteGraph(
        tuple(v for v in g.x if v in keep),
        tuple(v for v in g.y if v in keep),
        frozenset(e for e in g.edges if e[0] in keep and e[1] in keep),
    )


def connected_components(g: LabeledBipartiteGraph) -> list[LabeledBipartiteGraph]:
    """Components in order of their first vertex in ``x + y``."""
    seen = set()
    comps = []
    for v in g.vertices:
        if v not in seen:
            part = _bfs(g, v)
            seen.update(part)
            comps.append(induced_subgraph(g, part))
    return comps


def degree_sequence(g: LabeledBipartiteGraph) -> tuple:
    return tuple(sorted(len(n) for n in g.adjacency.values()))


# -- isomorphism -----------------------------------------------------------


def _refined_colors(adjs: Sequence[dict]) -> list[dict]:
    """Colour refinement run jointly over several graphs so colours are comparable."""
    colors = [{v: len(adj[v]) for v in adj} for adj in adjs]
    n_classes = -1
    while True:
        palette: dict = {}
        new = []
        for adj, col in zip(adjs, colors):
            sig = {v: (col[v], tuple(sorted(col[u] for u in adj[v]))) for v in adj}
            for s in sorted(set(sig.values())):
                palette.setdefault(s, None)
            new.append(sig)
        ranked = {s: i for i, s in enumerate(sorted(palette))}
        colors = [{v: ranked[s] for v, s in sig.items()} for sig in new]
        count = len(ranked)
        if count == n_classes:
            return colors
        n_classes = count


def find_isomorphism(
    g1: LabeledBipartiteGraph,
    g2: LabeledBipartiteGraph,
    cap: int | None = None,
) -> dict | None:
    """An adjacency-preserving bijection ``V(g1) -> V(g2)``, or ``None``.

    The bipartition is not required to be preserved: each component may be
    mapped straight or with its parts swapped, which is plain graph
    isomorphism for bipartite graphs.
    """
    cap = config.limits().isomorphism if cap is None else cap
    if max(len(g1), len(g2)) > cap:
        raise CapacityError(f"isomorphism search capped at {cap} vertices, got {max(len(g1), len(g2))}")
    if len(g1) != len(g2) or len(g1.edges) != len(g2.edges):
        return None
    if degree_sequence(g1) != degree_sequence(g2):
        return None
    adj1, adj2 = g1.adjacency, g2.adjacency
    c1, c2 = _refined_colors([adj1, adj2])
    if Counter(c1.values()) != Counter(c2.values()):
        return None

    by_color: dict = {}
    for v in g2.vertices:
        by_color.setdefault(c2[v], []).append(v)
    class_size = Counter(c1.values())

    # match rarest colours first, then grow along edges so adjacency checks bite early
    order = []
    placed = set()
    remaining = sorted(g1.vertices, key=lambda v: (class_size[c1[v]], c1[v]))
    while remaining:
        frontier = [v for v in remaining if adj1[v] & placed]
        nxt = frontier[0] if frontier else remaining[0]
        order.append(nxt)
        placed.add(nxt)
        remaining.remove(nxt)

    mapping: dict = {}
    used: set = set()

    def extend(k: int) -> bool:
        if k == len(order):
            return True
        v = order[k]
        for cand in by_color[c1[v]]:
            if cand in used:
                continue
            ok = True
            for u, image in mapping.items():
                if (u in adj1[v]) != (image in adj2[cand]):
                    ok = False
                    break
            if not ok:
                continue
            mapping[v] = cand
            used.add(cand)
            if extend(k + 1):
                return True
            del mapping[v]
            used.discard(cand)
        return False

    return dict(mapping) if extend(0) else None


def are_isomorphic(g1: LabeledBipartiteGraph, g2: LabeledBipartiteGraph, cap: int | None = None) -> bool:
    return find_isomorphism(g1, g2, cap) is not None


def is_isomorphism(g1: LabeledBipartiteGraph, g2: LabeledBipartiteGraph, mapping: Mapping) -> bool:
    """Exhaustive check that ``mapping`` is a bijection preserving edges and non-edges."""
    if set(mapping) != set(g1.vertices) or set(mapping.values()) != set(g2.vertices):
        return False
    if len(set(mapping.values())) != len(mapping):
        return False
    vs = list(g1.vertices)
    for i, u in enumerate(vs):
        for v in vs[i + 1:]:
            if g1.has_edge(u, v) != g2.has_edge(mapping[u], mapping[v]):
                return False
    return True


# -- cycles ----------------------------------------------------------------


def has_hamiltonian_cycle(g: LabeledBipartiteGraph, cap: int | None = None) -> bool:
    """Exact backtracking search for a cycle through every vertex."""
    cap = config.limits().hamiltonian if cap is None else cap
    if len(g) > cap:
        raise CapacityError(f"Hamiltonian search capped at {cap} vertices, got {len(g)}")
    return find_hamiltonian_cycle(g, cap=cap) is not None


def find_hamiltonian_cycle(g: LabeledBipartiteGraph, cap: int | None = None) -> list | None:
    cap = config.limits().hamiltonian if cap is None else cap
    if len(g) > cap:
        raise CapacityError(f"Hamiltonian search capped at {cap} vertices, got {len(g)}")
    n = len(g)
    if n < 4 or len(g.x) != len(g.y):
        return None
    adj = g.adjacency
    if any(len(adj[v]) < 2 for v in g.vertices) or not is_connected(g):
        return None
    start = g.x[0]
    path = [start]
    on_path = {start}

    def dfs(u) -> bool:
        if len(path) == n:
            return start in adj[u]
        for v in adj[u]:
            if v in on_path:
                continue
            path.append(v)
            on_path.add(v)
            if dfs(v):
                return True
            path.pop()
            on_path.discard(v)
        return False

    return list(path) if dfs(start) else None


def simple_cycles(g: LabeledBipartiteGraph, min_length: int = 4, cap: int | None = None) -> Iterator[tuple]:
    """Every simple cycle of at least ``min_length`` vertices, each exactly once.

    A cycle is reported from its smallest vertex (in ``x + y`` order) and in
    the direction whose second vertex is smaller than its last one.
    """
    cap = config.limits().cycles if cap is None else cap
    if len(g) > cap:
        raise CapacityError(f"cycle enumeration capped at {cap} vertices, got {len(g)}")
    index = {v: i for i, v in enumerate(g.vertices)}
    adj = {index[v]: sorted(index[u] for u in g.adjacency[v]) for v in g.vertices}
    names = g.vertices

    for s in range(len(names)):
        path = [s]
        on_path = {s}

        def dfs(u):
            for v in adj[u]:
                if v == s:
                    if len(path) >= max(min_length, 3) and path[1] < path[-1]:
                        yield tuple(names[i] for i in path)
                elif v > s and v not in on_path:
                    path.append(v)
                    on_path.add(v)
                    yield from dfs(v)
                    path.pop()
                    on_path.discard(v)

        yield from dfs(s)


def chord_count(g: LabeledBipartiteGraph, cycle: Sequence) -> int:
    members = set(cycle)
    inside = sum(1 for u, v in g.edges if u in members and v in members)
    return inside - len(cycle)


def is_62_chordal(g: LabeledBipartiteGraph, cap: int | None = None) -> bool:
    """Every cycle of length at least six has at least two chords."""
    for cycle in simple_cycles(g, min_length=6, cap=cap):
        if chord_count(g, cycle) < 2:
            return False
    return True


# -- canonical forms -------------------------------------------------------


def _distinct_permutations(items: Sequence, key) -> Iterator[tuple]:
    """Permutations of ``items`` up to reordering elements with equal ``key``."""
    groups: dict = {}
    for it in items:
        groups.setdefault(key(it), []).append(it)
    keys = sorted(groups, key=repr)
    counts = {k: len(groups[k]) for k in keys}
    n = len(items)
    out: list = []

    def rec():
        if len(out) == n:
            taken = {k: 0 for k in keys}
            perm = []
            for k in out:
                perm.append(groups[k][taken[k]])
                taken[k] += 1
            yield tuple(perm)
            return
        for k in keys:
            if counts[k]:
                counts[k] -= 1
                out.append(k)
                yield from rec()
                out.pop()
                counts[k] += 1

    yield from rec()


def _oriented_key(rows_part: Sequence, cols_part: Sequence, adj: dict, colors: dict) -> tuple:
    """Smallest row-sorted biadjacency matrix over colour-respecting column orders.

    For a fixed column order the best row order is simply the sorted rows,
    so only columns are permuted; columns with identical neighbourhoods are
    interchangeable and permuted once.
    """
    cells: dict = {}
    for v in cols_part:
        cells.setdefault(colors[v], []).append(v)
    cell_keys = sorted(cells)
    best = None

    def rec(i, prefix):
        nonlocal best
        if i == len(cell_keys):
            pos = {v: j for j, v in enumerate(prefix)}
            rows = sorted(
                (colors[r], tuple(sorted(pos[c] for c in adj[r]))) for r in rows_part
            )
            cand = tuple(rows)
            if best is None or cand < best:
                best = cand
            return
        cell = cells[cell_keys[i]]
        for perm in _distinct_permutations(cell, key=lambda v: adj[v]):
            rec(i + 1, prefix + list(perm))

    rec(0, [])
    return (
        len(rows_part),
        len(cols_part),
        tuple(sorted(colors[v] for v in cols_part)),
        best,
    )


def _component_key(g: LabeledBipartiteGraph) -> tuple:
    adj = g.adjacency
    (colors,) = _refined_colors([adj])
    keys = [_oriented_key(g.x, g.y, adj, colors), _oriented_key(g.y, g.x, adj, colors)]
    return min(keys)


def canonical_key(g: LabeledBipartiteGraph) -> tuple:
    """Isomorphism invariant that is complete: equal keys iff isomorphic graphs.

    Each component is encoded with whichever part orientation gives the
    smaller key; the graph key is the sorted tuple of component keys.
    """
    return tuple(sorted(_component_key(c) for c in connected_components(g)))
