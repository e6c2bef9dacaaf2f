"""Reduce instances to simple 2-connected blocks and compose the answers.

Parallel edges are merged (weights summed) and loops dropped; neither
changes the optimum because parallel edges must share a direction in any
acyclic orientation.  A connected graph is then cut at its cut vertices:
each block is solved rooted at the vertex through which it is entered from
the global root, and the global value is the minimum over blocks.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import DisconnectedGraphError, InvariantViolation
from .graph import (
    Edge,
    Orientation,
    WeightedGraph,
    biconnected_components,
    is_r_acyclic_orientation,
)


@dataclass(frozen=True)
class EdgeMergeMap:
    groups: Mapping[str, tuple[str, ...]]
    loops: tuple[str, ...] = ()

    def is_identity(self) -> bool:
        return not self.loops and all(len(g) == 1 for g in self.groups.values())


def simplify(G: WeightedGraph) -> tuple[WeightedGraph, EdgeMergeMap]:
    """Merge parallel classes and drop loops.

    The merged edge keeps the id of the first declared member of its class.
    """
    classes: dict[frozenset, list[Edge]] = {}
    loops = []
    for e in G.edges:
        if e.is_loop:
            loops.append(e.id)
        else:
            classes.setdefault(frozenset((e.u, e.v)), []).append(e)
    edges, weights, groups = [], {}, {}
    for members in classes.values():
        first = members[0]
        edges.append(first)
        weights[first.id] = sum((G.weight(e.id) for e in members), Fraction(0))
        groups[first.id] = tuple(e.id for e in members)
    simple = WeightedGraph(G.vertices, tuple(edges), weights)
    return simple, EdgeMergeMap(groups, tuple(loops))


def lift_orientation(O: Orientation, G: WeightedGraph, merge: EdgeMergeMap) -> Orientation:
    """Give each original parallel edge the direction of its merged edge."""
    direction = {}
    for sid, members in merge.groups.items():
        d = O.direction[sid]
        for eid in members:
            direction[eid] = d
    return Orientation(G, direction, O.root)


def lift_packing(
    items: Sequence[tuple[Fraction, frozenset]],
    G: WeightedGraph,
    merge: EdgeMergeMap,
) -> list[tuple[Fraction, frozenset]]:
    """Rewrite a packing on the simplified graph in terms of original edges.

    Load on a merged edge is poured into its original members first-fit in
    declaration order.  An item whose arcs straddle a member boundary is split
    at every such boundary, so each output arborescence uses exactly one
    original edge per merged arc.
    """
    if merge.is_identity():
        return [(lam, frozenset(arcs)) for lam, arcs in items]
    remaining = {eid: G.weight(eid) for eid in G.weights}
    cursor = {sid: 0 for sid in merge.groups}
    out = []
    for lam, arcs in items:
        left = lam
        while left > 0:
            # largest chunk every arc can take from its current member
            chunk = left
            for sid in arcs:
                members = merge.groups[sid]
                while cursor[sid] < len(members) and remaining[members[cursor[sid]]] == 0:
                    cursor[sid] += 1
                if cursor[sid] >= len(members):
                    raise InvariantViolation(f"packing exceeds weight of merged edge {sid!r}")
                chunk = min(chunk, remaining[members[cursor[sid]]])
            chosen = []
            for sid in arcs:
                eid = merge.groups[sid][cursor[sid]]
                remaining[eid] -= chunk
                chosen.append(eid)
            out.append((chunk, frozenset(chosen)))
            left -= chunk
    return out


@dataclass(frozen=True)
class BlockEntry:
    block: WeightedGraph
    root: str
    parent: int | None = None


@dataclass(frozen=True)
class BlockPlan:
    graph: WeightedGraph
    root: str
    entries: tuple[BlockEntry, ...] = field(default_factory=tuple)


def block_plan(G: WeightedGraph, r: str) -> BlockPlan:
    """Order blocks by distance from ``r`` in the block-cut tree.

    Each block's local root is ``r`` when ``r`` lies in it, otherwise the cut
    vertex shared with its parent block.
    """
    blocks, _ = biconnected_components(G)
    by_vertex: dict[str, list[int]] = {v: [] for v in G.vertices}
    for i, b in enumerate(blocks):
        for v in b.vertices:
            by_vertex[v].append(i)
    entries: list[BlockEntry] = []
    placed: dict[int, int] = {}
    queue = deque((i, r, None) for i in by_vertex[r])
    while queue:
        i, local_root, parent = queue.popleft()
        if i in placed:
            continue
        placed[i] = len(entries)
        entries.append(BlockEntry(blocks[i], local_root, parent))
        me = placed[i]
        for v in blocks[i].vertices:
            if v == local_root:
                continue
            for j in by_vertex[v]:
                if j not in placed:
                    queue.append((j, v, me))
    if len(placed) != len(blocks):
        raise DisconnectedGraphError("graph is disconnected")
    return BlockPlan(G, r, tuple(entries))


def compose_block_results(
    plan: BlockPlan, results: Sequence[tuple[Fraction, Orientation]]
) -> tuple[Fraction, Orientation]:
    """Minimum of block values and union of block orientations."""
    if len(results) != len(plan.entries) or any(res is None for res in results):
        raise ValueError("every block needs a solution")
    direction = {}
    for entry, (_, O) in zip(plan.entries, results):
        if O.root != entry.root:
            raise ValueError(f"block solved at {O.root!r}, expected {entry.root!r}")
        direction.update(O.direction)
    k = min(val for val, _ in results)
    O = Orientation(plan.graph, direction, plan.root)
    if not is_r_acyclic_orientation(plan.graph, O, plan.root):
        raise InvariantViolation("composed orientation is not rooted acyclic")
    return k, O
