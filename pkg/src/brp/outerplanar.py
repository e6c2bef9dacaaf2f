"""Recognition of simple 2-connected outerplanar graphs.

The outer circuit is recovered by repeatedly peeling a degree-2 vertex ``v``
with neighbours ``a, b`` and replacing the path ``a v b`` by a (possibly
virtual) edge ``ab`` that remembers the outer path it stands for.  When three
vertices remain, the three remembered paths close into the Hamiltonian outer
cycle.  The result is then certified directly: the cycle must visit every
vertex once and the leftover edges must be pairwise non-crossing chords.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import NotOuterplanarError, NotTwoConnectedError
from .graph import WeightedGraph, biconnected_components


@dataclass(frozen=True)
class OuterplanarEmbedding:
    graph: WeightedGraph
    outer_cycle: tuple[str, ...]
    cycle_edges: tuple[str, ...]
    chords: tuple[str, ...]
    join_vertices: frozenset
    outer_chords: tuple[tuple[str, ...], ...]
    series_outer_chords: tuple[int, ...]

    @property
    def k(self) -> int:
        """Number of chords."""
        return len(self.chords)


def _find_cycle_edges(G: WeightedGraph, cycle: tuple[str, ...]) -> list[str]:
    lookup = {frozenset((e.u, e.v)): e.id for e in G.edges}
    out = []
    for i, a in enumerate(cycle):
        b = cycle[(i + 1) % len(cycle)]
        eid = lookup.get(frozenset((a, b)))
        if eid is None:
            raise NotOuterplanarError(f"outer path uses missing edge {a}-{b}")
        out.append(eid)
    return out


def _crossing(pos: dict, c1: tuple[str, str], c2: tuple[str, str]) -> bool:
    a, b = sorted((pos[c1[0]], pos[c1[1]]))
    x, y = pos[c2[0]], pos[c2[1]]
    if len({a, b, x, y}) < 4:
        return False
    return (a < x < b) != (a < y < b)


def _peel(G: WeightedGraph) -> tuple[str, ...]:
    """Return a candidate outer cycle or raise with a witness."""
    # adjacency of the reduced graph; each entry maps neighbour -> outer path
    adj: dict[str, dict[str, tuple[str, ...]]] = {v: {} for v in G.vertices}
    for e in G.edges:
        adj[e.u][e.v] = (e.u, e.v)
        adj[e.v][e.u] = (e.v, e.u)
    alive = list(G.vertices)
    while len(alive) > 3:
        v = next((x for x in alive if len(adj[x]) == 2), None)
        if v is None:
            raise NotOuterplanarError(
                "no degree-2 vertex left in the reduction", witness=("no-degree-2", tuple(alive))
            )
        a, b = adj[v]
        path = adj[a][v] + adj[v][b][1:]
        if b in adj[a]:
            if len(adj[a][b]) > 2:
                raise NotOuterplanarError(
                    f"two outer paths between {a} and {b}",
                    witness=("parallel-outer-paths", adj[a][b], path),
                )
        adj[a][b] = path
        adj[b][a] = tuple(reversed(path))
        del adj[a][v], adj[b][v], adj[v]
        alive.remove(v)
    x, y, z = alive
    if not (y in adj[x] and z in adj[y] and x in adj[z]):
        raise NotTwoConnectedError("reduction did not end in a triangle")
    return adj[x][y] + adj[y][z][1:] + adj[z][x][1:-1]


def recognize(G: WeightedGraph) -> OuterplanarEmbedding:
    """Find the outer circuit and chords of a simple 2-connected graph."""
    if not G.is_simple():
        raise ValueError("recognize expects a simple graph")
    if G.n < 3:
        raise NotTwoConnectedError("fewer than 3 vertices")
    blocks, cut = biconnected_components(G)
    if len(blocks) != 1 or cut:
        raise NotTwoConnectedError(f"cut vertices {sorted(cut)}")
    if G.m > 2 * G.n - 3:
        raise NotOuterplanarError(
            f"{G.m} edges exceed 2n-3 = {2 * G.n - 3}", witness=("edge-count", G.m, 2 * G.n - 3)
        )
    cycle = _peel(G)
    if sorted(cycle) != sorted(G.vertices):
        raise NotOuterplanarError("peeling did not produce a Hamiltonian cycle", witness=("cycle", cycle))
    # start the cycle at the first declared vertex, walking towards its
    # smaller-index cycle neighbour
    i = cycle.index(G.vertices[0])
    cycle = cycle[i:] + cycle[:i]
    if G.index(cycle[-1]) < G.index(cycle[1]):
        cycle = (cycle[0],) + tuple(reversed(cycle[1:]))
    cycle_edges = _find_cycle_edges(G, cycle)
    on_cycle = set(cycle_edges)
    chords = tuple(e.id for e in G.edges if e.id not in on_cycle)
    pos = {v: i for i, v in enumerate(cycle)}
    for c1, c2 in combinations(chords, 2):
        e1, e2 = G.edge(c1), G.edge(c2)
        if _crossing(pos, (e1.u, e1.v), (e2.u, e2.v)):
            raise NotOuterplanarError(f"chords {c1} and {c2} cross", witness=("crossing", c1, c2))
    if G.m != G.n + len(chords):
        raise NotOuterplanarError("edge count mismatch", witness=("edge-count", G.m, G.n + len(chords)))
    joins, outer, series = _classify(G, cycle, chords)
    return OuterplanarEmbedding(G, cycle, tuple(cycle_edges), chords, joins, outer, series)


def _classify(G, cycle, chords):
    joins = frozenset(x for c in chords for x in (G.edge(c).u, G.edge(c).v))
    n = len(cycle)
    if not joins:
        return joins, (cycle + (cycle[0],),), (0,)
    starts = [i for i, v in enumerate(cycle) if v in joins]
    outer = []
    for j, s in enumerate(starts):
        t = starts[(j + 1) % len(starts)]
        if t <= s:
            t += n
        outer.append(tuple(cycle[i % n] for i in range(s, t + 1)))
    series = tuple(i for i, p in enumerate(outer) if len(p) > 2)
    for i, p in enumerate(outer):
        if i in series:
            if not all(G.degree(v) == 2 for v in p[1:-1]):
                raise AssertionError(f"series outer chord {p} has an inner join vertex")
        elif len(p) != 2:
            raise AssertionError(f"non-series outer chord {p} is not a single edge")
    return joins, tuple(outer), series


def classify_chords(emb: OuterplanarEmbedding):
    """Return ``(join vertices, outer chords, series outer chords, adjacency)``.

    ``adjacency`` lists pairs of chords sharing a join vertex as
    ``(chord_id, chord_id, vertex)``.
    """
    G = emb.graph
    adjacency = []
    for c1, c2 in combinations(emb.chords, 2):
        e1, e2 = G.edge(c1), G.edge(c2)
        shared = {e1.u, e1.v} & {e2.u, e2.v}
        for v in sorted(shared, key=G.index):
            adjacency.append((c1, c2, v))
    series = tuple(emb.outer_chords[i] for i in emb.series_outer_chords)
    return emb.join_vertices, emb.outer_chords, series, adjacency
