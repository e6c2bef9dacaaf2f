"""Core graph types with exact rational weights.

Vertices and edges are identified by strings.  Every tie in the package is
broken by declaration order, exposed here through :meth:`WeightedGraph.index`
and :meth:`WeightedGraph.edge_index`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from numbers import Rational
from typing import Iterable, Mapping, NamedTuple, Sequence

from .errors import DisconnectedGraphError, GraphError, UndefinedValueError

Weight = Fraction


def parse_weight(value) -> Fraction:
    """Parse an int, decimal string, ``"p/q"`` string or float into an exact
    non-negative :class:`~fractions.Fraction`.

    Floats are read through their shortest repr, so ``0.1`` means one tenth.
    """
    if isinstance(value, bool):
        raise GraphError(f"invalid weight {value!r}")
    if isinstance(value, Rational):
        w = Fraction(value)
    elif isinstance(value, float):
        if not math.isfinite(value):
            raise GraphError(f"invalid weight {value!r}")
        w = Fraction(repr(value))
    elif isinstance(value, str):
        try:
            w = Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise GraphError(f"invalid weight {value!r}") from None
    else:
        raise GraphError(f"invalid weight {value!r}")
    if w < 0:
        raise GraphError(f"negative weight {value!r}")
    return w


def format_weight(w: Fraction) -> str:
    return str(Fraction(w))


def sub_weight(a: Fraction, b: Fraction) -> Fraction:
    """Exact ``a - b``; weights never go negative."""
    d = a - b
    if d < 0:
        raise ArithmeticError(f"weight subtraction {a} - {b} is negative")
    return d


class Edge(NamedTuple):
    id: str
    u: str
    v: str

    @property
    def is_loop(self) -> bool:
        return self.u == self.v

    def other(self, x: str) -> str:
        if x == self.u:
            return self.v
        if x == self.v:
            return self.u
        raise KeyError(f"{x!r} is not an endpoint of edge {self.id!r}")


@dataclass(frozen=True)
class WeightedGraph:
    """Undirected multigraph; loops and parallel edges are allowed."""

    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]
    weights: Mapping[str, Fraction]

    def __post_init__(self):
        seen = set()
        for v in self.vertices:
            if v in seen:
                raise GraphError(f"duplicate vertex {v!r}")
            seen.add(v)
        ids = set()
        for e in self.edges:
            if e.id in ids:
                raise GraphError(f"duplicate edge id {e.id!r}")
            ids.add(e.id)
            for x in (e.u, e.v):
                if x not in seen:
                    raise GraphError(f"edge {e.id!r} has dangling endpoint {x!r}")
            if e.id not in self.weights:
                raise GraphError(f"edge {e.id!r} has no weight")
            if self.weights[e.id] < 0:
                raise GraphError(f"edge {e.id!r} has negative weight")

    @cached_property
    def _vindex(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def _eindex(self) -> dict[str, int]:
        return {e.id: i for i, e in enumerate(self.edges)}

    @cached_property
    def _edge_by_id(self) -> dict[str, Edge]:
        return {e.id: e for e in self.edges}

    @cached_property
    def _incidence(self) -> dict[str, tuple[str, ...]]:
        inc: dict[str, list[str]] = {v: [] for v in self.vertices}
        for e in self.edges:
            inc[e.u].append(e.id)
            if not e.is_loop:
                inc[e.v].append(e.id)
        return {v: tuple(ids) for v, ids in inc.items()}

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    def index(self, v: str) -> int:
        return self._vindex[v]

    def edge_index(self, eid: str) -> int:
        return self._eindex[eid]

    def edge(self, eid: str) -> Edge:
        return self._edge_by_id[eid]

    def weight(self, eid: str) -> Fraction:
        return self.weights[eid]

    def has_vertex(self, v: str) -> bool:
        return v in self._vindex

    def incident(self, v: str) -> tuple[str, ...]:
        """Ids of edges incident to ``v`` (loops listed once)."""
        return self._incidence[v]

    def degree(self, v: str) -> int:
        return len(self._incidence[v])

    def weighted_degree(self, v: str) -> Fraction:
        return sum((self.weights[e] for e in self._incidence[v]), Fraction(0))

    def neighbors(self, v: str) -> list[str]:
        out = []
        for eid in self._incidence[v]:
            x = self._edge_by_id[eid].other(v)
            if x != v and x not in out:
                out.append(x)
        return out

    def is_simple(self) -> bool:
        pairs = set()
        for e in self.edges:
            if e.is_loop:
                return False
            key = frozenset((e.u, e.v))
            if key in pairs:
                return False
            pairs.add(key)
        return True

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        seen = {self.vertices[0]}
        stack = [self.vertices[0]]
        while stack:
            x = stack.pop()
            for y in self.neighbors(x):
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == self.n

    def subgraph(self, edge_ids: Iterable[str], extra_vertices: Iterable[str] = ()) -> "WeightedGraph":
        """Edge-induced subgraph keeping declaration order of vertices and edges."""
        keep = set(edge_ids)
        verts = set(extra_vertices)
        edges = [e for e in self.edges if e.id in keep]
        for e in edges:
            verts.update((e.u, e.v))
        return WeightedGraph(
            vertices=tuple(v for v in self.vertices if v in verts),
            edges=tuple(edges),
            weights={e.id: self.weights[e.id] for e in edges},
        )

    def with_weights(self, weights: Mapping[str, Fraction]) -> "WeightedGraph":
        return WeightedGraph(self.vertices, self.edges, dict(weights))


def build_graph(
    vertices: Sequence[str],
    edges: Sequence[tuple[str, str, str]],
    weights: Sequence,
) -> WeightedGraph:
    """Build a :class:`WeightedGraph` from parallel edge and weight lists.

    ``edges`` holds ``(id, u, v)`` triples; ``weights[i]`` belongs to
    ``edges[i]`` and may be anything :func:`parse_weight` accepts.
    """
    if len(edges) != len(weights):
        raise GraphError("edge and weight lists differ in length")
    es = tuple(Edge(str(i), str(u), str(v)) for i, u, v in edges)
    ws = {}
    for e, w in zip(es, weights):
        if e.id in ws:
            raise GraphError(f"duplicate edge id {e.id!r}")
        ws[e.id] = parse_weight(w)
    return WeightedGraph(tuple(str(v) for v in vertices), es, ws)


@dataclass(frozen=True)
class Orientation:
    """Directions for every non-loop edge of ``base``; loops stay unoriented."""

    base: WeightedGraph
    direction: Mapping[str, tuple[str, str]]
    root: str

    @cached_property
    def _in(self) -> dict[str, tuple[str, ...]]:
        ins: dict[str, list[str]] = {v: [] for v in self.base.vertices}
        for e in self.base.edges:
            if e.id in self.direction:
                ins[self.direction[e.id][1]].append(e.id)
        return {v: tuple(x) for v, x in ins.items()}

    @cached_property
    def _out(self) -> dict[str, tuple[str, ...]]:
        outs: dict[str, list[str]] = {v: [] for v in self.base.vertices}
        for e in self.base.edges:
            if e.id in self.direction:
                outs[self.direction[e.id][0]].append(e.id)
        return {v: tuple(x) for v, x in outs.items()}

    def in_arcs(self, v: str) -> tuple[str, ...]:
        return self._in[v]

    def out_arcs(self, v: str) -> tuple[str, ...]:
        return self._out[v]

    def indegree(self, v: str) -> int:
        return len(self._in[v])

    def outdegree(self, v: str) -> int:
        return len(self._out[v])

    def in_weight(self, v: str, weights: Mapping[str, Fraction] | None = None) -> Fraction:
        w = self.base.weights if weights is None else weights
        return sum((w[e] for e in self._in[v]), Fraction(0))

    def arcs(self) -> list[tuple[str, str, str]]:
        """``(edge id, tail, head)`` in edge declaration order."""
        return [(e.id, *self.direction[e.id]) for e in self.base.edges if e.id in self.direction]

    def topological_order(self) -> list[str] | None:
        """Kahn's algorithm with smallest-index tie-breaking; ``None`` if cyclic."""
        import heapq

        g = self.base
        indeg = {v: self.indegree(v) for v in g.vertices}
        heap = [g.index(v) for v in g.vertices if indeg[v] == 0]
        heapq.heapify(heap)
        order = []
        while heap:
            v = g.vertices[heapq.heappop(heap)]
            order.append(v)
            for eid in self._out[v]:
                h = self.direction[eid][1]
                indeg[h] -= 1
                if indeg[h] == 0:
                    heapq.heappush(heap, g.index(h))
        return order if len(order) == g.n else None


def orientation_from_order(G: WeightedGraph, order: Sequence[str]) -> Orientation:
    """Orient every non-loop edge from the earlier to the later vertex of ``order``."""
    pos = {v: i for i, v in enumerate(order)}
    direction = {}
    for e in G.edges:
        if e.is_loop:
            continue
        direction[e.id] = (e.u, e.v) if pos[e.u] < pos[e.v] else (e.v, e.u)
    return Orientation(G, direction, order[0])


def is_r_acyclic_orientation(G: WeightedGraph, O: Orientation, r: str) -> bool:
    """True iff ``O`` orients every non-loop edge of ``G``, is acyclic, and
    ``r`` is its unique source."""
    if not G.has_vertex(r):
        return False
    for e in G.edges:
        if e.is_loop:
            continue
        d = O.direction.get(e.id)
        if d is None or d not in ((e.u, e.v), (e.v, e.u)):
            return False
    if O.base is not G and set(O.direction) - {e.id for e in G.edges}:
        return False
    indeg = {v: 0 for v in G.vertices}
    for e in G.edges:
        if not e.is_loop:
            indeg[O.direction[e.id][1]] += 1
    if indeg[r] != 0 or any(indeg[v] == 0 for v in G.vertices if v != r):
        return False
    return Orientation(G, {e.id: O.direction[e.id] for e in G.edges if not e.is_loop}, r).topological_order() is not None


def min_trivial_r_cut(
    O: Orientation, w: Mapping[str, Fraction] | None = None, r: str | None = None
) -> tuple[Fraction, str]:
    """Lightest single-vertex cut ``delta^-(v)``, ``v != r``.

    Ties go to the vertex declared first.
    """
    r = O.root if r is None else r
    g = O.base
    best = None
    for v in g.vertices:
        if v == r:
            continue
        c = O.in_weight(v, w)
        if best is None or c < best[0]:
            best = (c, v)
    if best is None:
        raise UndefinedValueError("no non-root vertex")
    return best


def biconnected_components(G: WeightedGraph) -> tuple[list[WeightedGraph], set[str]]:
    """Blocks and cut vertices of a connected multigraph.

    Parallel edges fall into the same block; a loop forms a block of its own.
    Blocks are listed in order of their first edge's declaration.
    """
    if not G.is_connected():
        raise DisconnectedGraphError("graph is disconnected")
    disc: dict[str, int] = {}
    low: dict[str, int] = {}
    cut: set[str] = set()
    groups: list[list[str]] = []
    edge_stack: list[str] = []
    counter = 0

    for start in G.vertices[:1]:
        disc[start] = low[start] = counter
        counter += 1
        root_children = 0
        # frame: (vertex, parent edge id, iterator over incident edges)
        stack = [(start, None, iter(G.incident(start)))]
        while stack:
            v, pe, it = stack[-1]
            advanced = False
            for eid in it:
                e = G.edge(eid)
                if e.is_loop or eid == pe:
                    continue
                x = e.other(v)
                if x not in disc:
                    edge_stack.append(eid)
                    disc[x] = low[x] = counter
                    counter += 1
                    if v == start:
                        root_children += 1
                    stack.append((x, eid, iter(G.incident(x))))
                    advanced = True
                    break
                if disc[x] < disc[v]:
                    edge_stack.append(eid)
                    low[v] = min(low[v], disc[x])
            if advanced:
                continue
            stack.pop()
            if stack:
                p = stack[-1][0]
                low[p] = min(low[p], low[v])
                if low[v] >= disc[p]:
                    if p != start:
                        cut.add(p)
                    comp = []
                    while True:
                        eid = edge_stack.pop()
                        comp.append(eid)
                        if eid == pe:
                            break
                    groups.append(comp)
        if root_children > 1:
            cut.add(start)

    for e in G.edges:
        if e.is_loop:
            groups.append([e.id])
    blocks = [G.subgraph(ids) for ids in groups]
    blocks.sort(key=lambda b: min(G.edge_index(e.id) for e in b.edges))
    return blocks, cut
