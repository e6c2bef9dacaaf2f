"""Broadcast routing solvers: circuits, 2-connected outerplanar blocks, and
the rooted/unrooted drivers for arbitrary connected graphs."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .errors import (
    DisconnectedGraphError,
    ForcedContradiction,
    InvariantViolation,
    NotOuterplanarError,
    UndefinedValueError,
)
from .graph import (
    Orientation,
    WeightedGraph,
    is_r_acyclic_orientation,
    min_trivial_r_cut,
)
from .orientation import forced_closure, init_partial, max_completion, orient_sink
from .outerplanar import OuterplanarEmbedding, recognize
from .reductions import (
    block_plan,
    compose_block_results,
    lift_orientation,
    lift_packing,
    simplify,
)

log = logging.getLogger(__name__)

SELECTIONS = ("feasible", "lightest")


@dataclass(frozen=True)
class ArborescencePacking:
    root: str
    items: tuple[tuple[Fraction, frozenset], ...] = ()

    @property
    def value(self) -> Fraction:
        return sum((lam for lam, _ in self.items), Fraction(0))

    def load(self) -> dict[str, Fraction]:
        """Total coefficient carried by each edge id."""
        out: dict[str, Fraction] = {}
        for lam, arcs in self.items:
            for eid in arcs:
                out[eid] = out.get(eid, Fraction(0)) + lam
        return out


@dataclass(frozen=True)
class BlockCertificate:
    """Trace of one block solve.

    ``steps`` holds ``(u_t, delta_t)`` for each chosen sink; ``final_delta`` is
    the lightest edge not absorbed into a chosen sink (``None`` if there is
    none); ``min_cut`` is the block's final minimum trivial cut.
    """

    root: str
    steps: tuple[tuple[str, Fraction], ...]
    final_delta: Fraction | None
    min_cut: Fraction

    @property
    def deltas(self) -> list[Fraction]:
        out = [d for _, d in self.steps]
        if self.final_delta is not None:
            out.append(self.final_delta)
        return out

    @property
    def consistent(self) -> bool:
        return min(self.deltas) == self.min_cut


@dataclass(frozen=True)
class Solution:
    root: str
    orientation: Orientation
    k: Fraction
    packing: ArborescencePacking
    certificate: tuple[BlockCertificate, ...] = field(default_factory=tuple)


def pack_arborescences(
    O: Orientation, w: Mapping[str, Fraction] | None = None, r: str | None = None
) -> ArborescencePacking:
    """Greedy maximum packing of ``r``-arborescences in an acyclic digraph.

    Each round takes the lightest positive arc ``e0``, builds an arborescence
    containing it from one positive in-arc per vertex (lowest edge id first),
    and subtracts ``w(e0)`` along it.  Every round lowers every trivial cut by
    the same amount, so the total equals the initial minimum trivial cut.
    """
    r = O.root if r is None else r
    G = O.base
    weights = G.weights if w is None else w
    if not is_r_acyclic_orientation(G, O, r):
        raise ValueError("pack_arborescences needs a rooted acyclic orientation")
    residual = {eid: Fraction(weights[eid]) for eid in O.direction}
    ins = {v: sorted(O.in_arcs(v), key=G.edge_index) for v in G.vertices if v != r}
    items = []
    while True:
        positive = [eid for eid in residual if residual[eid] > 0]
        if not positive:
            break
        e0 = min(positive, key=lambda e: (residual[e], G.edge_index(e)))
        lam = residual[e0]
        h0 = O.direction[e0][1]
        arcs = []
        for v, cand in ins.items():
            if v == h0:
                arcs.append(e0)
                continue
            pick = next((e for e in cand if residual[e] > 0), None)
            if pick is None:
                arcs = None
                break
            arcs.append(pick)
        if arcs is None:
            break
        for eid in arcs:
            residual[eid] -= lam
        items.append((lam, frozenset(arcs)))
    return ArborescencePacking(r, tuple(items))


def _circuit_order(C: WeightedGraph) -> list[str]:
    start = C.vertices[0]
    order = [start]
    prev_edge = None
    x = start
    while True:
        nxt = [eid for eid in C.incident(x) if eid != prev_edge]
        eid = min(nxt, key=C.edge_index)
        y = C.edge(eid).other(x)
        if y == start:
            break
        order.append(y)
        prev_edge, x = eid, y
    return order


def _orient_two_paths(C: WeightedGraph, cycle: list[str], r: str, s: str) -> Orientation:
    n = len(cycle)
    lookup = {frozenset((e.u, e.v)): e.id for e in C.edges}
    i, j = cycle.index(r), cycle.index(s)
    direction = {}
    for step in (1, -1):
        x = i
        while x != j:
            y = (x + step) % n
            direction[lookup[frozenset((cycle[x], cycle[y]))]] = (cycle[x], cycle[y])
            x = y
    return Orientation(C, direction, r)


def solve_circuit(C: WeightedGraph, r: str | None = None) -> Solution:
    """Exact solver for a simple circuit with at least 3 vertices.

    Every rooted acyclic orientation has a single sink ``s``; its value is the
    smaller of ``s``'s two edge weights summed and the lightest edge away from
    ``s``, read off the three globally lightest edges.  The best sink is
    chosen over all vertices (or all non-root vertices when ``r`` is given).
    """
    if C.n < 3 or C.m != C.n or not C.is_simple() or any(C.degree(v) != 2 for v in C.vertices) or not C.is_connected():
        raise ValueError("solve_circuit needs a simple circuit on >= 3 vertices")
    cycle = _circuit_order(C)
    lightest = sorted(C.edges, key=lambda e: (C.weight(e.id), C.edge_index(e.id)))[:3]

    def value(s):
        at = C.incident(s)
        away = next(e for e in lightest if e.id not in at)
        return min(C.weight(at[0]) + C.weight(at[1]), C.weight(away.id))

    sinks = [v for v in C.vertices if v != r]
    s = max(sinks, key=lambda v: (value(v), -C.index(v)))
    root = r if r is not None else next(v for v in C.vertices if v != s)
    O = _orient_two_paths(C, cycle, root, s)
    k = value(s)
    cert = BlockCertificate(root, ((s, C.weighted_degree(s)),), None, k)
    return Solution(root, O, k, pack_arborescences(O), (cert,))


def solve_block(
    G: WeightedGraph,
    emb: OuterplanarEmbedding | None,
    r: str,
    selection: str = "feasible",
) -> Solution:
    """Solve the rooted problem on a simple 2-connected outerplanar block.

    Sinks are chosen one at a time, each taking every undirected edge at it,
    with forced edges closed after each choice, until the excess reaches
    ``k + 1`` and the rest of the orientation is forced.

    ``selection="lightest"`` picks the non-chosen vertex with the smallest
    ``delta`` (undirected plus incoming weight).  That rule alone is not
    always optimal; ``"feasible"`` (default) takes the smallest-``delta``
    candidate among those after which an optimal completion still exists, as
    decided by :func:`~brp.orientation.max_completion`.
    """
    if selection not in SELECTIONS:
        raise ValueError(f"unknown selection {selection!r}")
    if emb is None:
        emb = recognize(G)
    S = init_partial(G, emb, r)
    target = None
    if selection == "feasible":
        target, _ = max_completion(S)
        if target is None:
            raise InvariantViolation("initial state has no completion")
    steps = []
    while S.f < S.k + 1:
        pool = [v for v in G.vertices if v != r and v not in S.chosen_sinks]
        if not pool:
            raise InvariantViolation("no candidate sinks left below the excess threshold")
        pool.sort(key=lambda v: (S.delta(v), G.index(v)))
        for v in pool:
            d = S.delta(v)
            if selection == "lightest":
                orient_sink(S, v)
                break
            trial = S.copy()
            try:
                orient_sink(trial, v)
            except ForcedContradiction:
                continue
            best, _ = max_completion(trial)
            if best is not None and best >= target:
                S = trial
                break
        else:
            raise InvariantViolation("no sink keeps an optimal completion")
        steps.append((v, d))
    forced_closure(S)
    if not S.is_complete():
        raise InvariantViolation(f"closure stalled with {len(S.undirected())} free edges at excess {S.f}")
    O = S.orientation()
    if not is_r_acyclic_orientation(G, O, r):
        raise InvariantViolation("completed orientation is not rooted acyclic")
    k, _ = min_trivial_r_cut(O)
    sinks = set(S.chosen_sinks)
    rest = [G.weight(eid) for eid, (_, h) in O.direction.items() if h not in sinks]
    cert = BlockCertificate(r, tuple(steps), min(rest) if rest else None, k)
    for msg in S.diagnostics:
        log.info("block rooted at %s: %s", r, msg)
    return Solution(r, O, k, pack_arborescences(O), (cert,))


def _solve_edge_block(B: WeightedGraph, r: str) -> Solution:
    (e,) = B.edges
    O = Orientation(B, {e.id: (r, e.other(r))}, r)
    k = B.weight(e.id)
    return Solution(r, O, k, pack_arborescences(O), (BlockCertificate(r, (), k, k),))


def solve_rbrp(
    G: WeightedGraph,
    r: str,
    w: Mapping | None = None,
    selection: str = "feasible",
) -> Solution:
    """Best rooted acyclic orientation for a fixed root ``r``.

    Works on any connected multigraph whose blocks are outerplanar.  The
    returned orientation and packing refer to the original edge ids.
    """
    if w is not None:
        G = G.with_weights(w)
    if not G.has_vertex(r):
        raise KeyError(f"unknown root {r!r}")
    if not G.is_connected():
        raise DisconnectedGraphError("graph is disconnected")
    if G.n < 2:
        raise UndefinedValueError("k is undefined for a graph with a single vertex")
    simple, merge = simplify(G)
    plan = block_plan(simple, r)
    results, certs = [], []
    for i, entry in enumerate(plan.entries):
        B = entry.block
        if B.m == 1:
            sol = _solve_edge_block(B, entry.root)
        else:
            try:
                emb = recognize(B)
            except NotOuterplanarError as exc:
                exc.block = B
                raise NotOuterplanarError(
                    f"block {i} on vertices {list(B.vertices)} is not outerplanar: {exc}",
                    witness=exc.witness,
                    block=B,
                ) from exc
            sol = solve_block(B, emb, entry.root, selection)
        results.append((sol.k, sol.orientation))
        certs.extend(sol.certificate)
    k, O_simple = compose_block_results(plan, results)
    items = pack_arborescences(O_simple).items
    O = lift_orientation(O_simple, G, merge)
    packing = ArborescencePacking(r, tuple(lift_packing(items, G, merge)))
    if packing.value != k:
        raise InvariantViolation(f"packing value {packing.value} differs from k = {k}")
    return Solution(r, O, k, packing, tuple(certs))


def solve_brp(G: WeightedGraph, w: Mapping | None = None, selection: str = "feasible") -> Solution:
    """Best root and orientation; ties go to the first declared root."""
    if w is not None:
        G = G.with_weights(w)
    if not G.is_connected():
        raise DisconnectedGraphError("graph is disconnected")
    if G.n < 2:
        raise UndefinedValueError("k is undefined for a graph with a single vertex")
    best = None
    for r in G.vertices:
        sol = solve_rbrp(G, r, selection=selection)
        if best is None or sol.k > best.k:
            best = sol
    return best
