"""Partial rooted acyclic orientations.

A :class:`PartialState` holds a mixed graph: some edges directed, the rest
undirected.  Three sound forcing rules are applied to a fixpoint:

R1  undirected edges at the root point away from it;
R2  a non-root vertex with no incoming arc and a single undirected edge
    must receive that edge;
R3  an undirected edge whose one direction would close a directed cycle
    takes the other direction.

The excess ``f`` is the sum of ``indeg(v) - 1`` over vertices that have at
least one incoming arc.  On a complete orientation of a 2-connected block with
``k`` chords it equals ``m - (n - 1) = k + 1``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .errors import ForcedContradiction, InvariantViolation
from .graph import Orientation, WeightedGraph

log = logging.getLogger(__name__)


@dataclass
class PartialState:
    graph: WeightedGraph
    root: str
    k: int
    direction: dict[str, tuple[str, str]] = field(default_factory=dict)
    chosen_sinks: list[str] = field(default_factory=list)
    f: int = 0
    # excess accumulated sink by sink, as the selection loop counts it
    sink_f: int = 0
    diagnostics: list[str] = field(default_factory=list)

    def copy(self) -> "PartialState":
        return PartialState(
            self.graph,
            self.root,
            self.k,
            dict(self.direction),
            list(self.chosen_sinks),
            self.f,
            self.sink_f,
            list(self.diagnostics),
        )

    # -- queries -----------------------------------------------------------
    def undirected(self, v: str | None = None) -> list[str]:
        ids = self.graph.incident(v) if v is not None else [e.id for e in self.graph.edges]
        return [eid for eid in ids if eid not in self.direction]

    def in_arcs(self, v: str) -> list[str]:
        return [eid for eid in self.graph.incident(v) if self.direction.get(eid, (None, None))[1] == v]

    def out_arcs(self, v: str) -> list[str]:
        return [eid for eid in self.graph.incident(v) if self.direction.get(eid, (None, None))[0] == v]

    def is_complete(self) -> bool:
        return len(self.direction) == self.graph.m

    def delta(self, v: str) -> Fraction:
        """Weight of undirected edges plus incoming arcs at ``v``."""
        w = self.graph.weights
        return sum((w[e] for e in self.undirected(v) + self.in_arcs(v)), Fraction(0))

    def reaches(self, src: str, dst: str) -> bool:
        if src == dst:
            return True
        seen = {src}
        stack = [src]
        while stack:
            x = stack.pop()
            for eid in self.out_arcs(x):
                y = self.direction[eid][1]
                if y == dst:
                    return True
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return False

    def orientation(self) -> Orientation:
        if not self.is_complete():
            raise InvariantViolation("orientation requested from an incomplete state")
        return Orientation(self.graph, dict(self.direction), self.root)

    # -- mutation ----------------------------------------------------------
    def _orient(self, eid: str, tail: str, head: str) -> None:
        if head == self.root:
            raise ForcedContradiction(f"edge {eid} would enter the root")
        if self.reaches(head, tail):
            raise ForcedContradiction(f"orienting {eid} as {tail}->{head} closes a cycle")
        self.direction[eid] = (tail, head)


def f_excess(S: PartialState) -> int:
    """Recompute the excess from scratch."""
    total = 0
    for v in S.graph.vertices:
        d = len(S.in_arcs(v))
        if d:
            total += d - 1
    return total


def forced_closure(S: PartialState) -> PartialState:
    """Apply R1-R3 until nothing changes.  Mutates and returns ``S``."""
    G = S.graph
    changed = True
    while changed:
        changed = False
        for eid in S.undirected(S.root):
            S._orient(eid, S.root, G.edge(eid).other(S.root))
            changed = True
        for v in G.vertices:
            if v == S.root or S.in_arcs(v):
                continue
            und = S.undirected(v)
            if not und:
                raise ForcedContradiction(f"vertex {v} can no longer receive an arc")
            if len(und) == 1:
                S._orient(und[0], G.edge(und[0]).other(v), v)
                changed = True
        for eid in S.undirected():
            e = G.edge(eid)
            fwd_bad = S.reaches(e.v, e.u)
            back_bad = S.reaches(e.u, e.v)
            if fwd_bad and back_bad:
                raise ForcedContradiction(f"edge {eid} has no feasible direction")
            if fwd_bad:
                S._orient(eid, e.v, e.u)
                changed = True
            elif back_bad:
                S._orient(eid, e.u, e.v)
                changed = True
    S.f = f_excess(S)
    _check(S)
    return S


def _check(S: PartialState) -> None:
    if S.in_arcs(S.root):
        raise InvariantViolation("root has an incoming arc")
    for v in S.chosen_sinks:
        if S.undirected(v):
            raise InvariantViolation(f"chosen sink {v} still has undirected edges")
    # vertices carrying excess must be settled (partial-orientation condition)
    for v in S.graph.vertices:
        if len(S.in_arcs(v)) >= 2 and S.undirected(v):
            raise InvariantViolation(f"vertex {v} has excess in-degree but undirected edges")
    if S.f > S.k + 1:
        raise InvariantViolation(f"excess {S.f} exceeds k+1 = {S.k + 1}")


def init_partial(G: WeightedGraph, emb=None, r: str | None = None) -> PartialState:
    """Fresh state with the root's edges directed outwards and closure applied.

    ``emb`` supplies the chord count; without it ``k = m - n`` is assumed,
    which is exact for 2-connected outerplanar blocks.
    """
    if r is None:
        raise TypeError("root is required")
    k = emb.k if emb is not None else G.m - G.n
    return forced_closure(PartialState(G, r, k))


def orient_sink(S: PartialState, v: str) -> PartialState:
    """Direct every undirected edge at ``v`` into ``v``, then close."""
    if v == S.root:
        raise ValueError("the root cannot be a sink")
    if v in S.chosen_sinks:
        raise ValueError(f"{v} already chosen")
    und = S.undirected(v)
    S.sink_f += len(und) + len(S.in_arcs(v)) - 1
    S.chosen_sinks.append(v)
    for eid in und:
        S._orient(eid, S.graph.edge(eid).other(v), v)
    forced_closure(S)
    if S.f != S.sink_f:
        msg = f"excess {S.f} differs from per-sink accounting {S.sink_f} after sink {v}"
        log.debug(msg)
        S.diagnostics.append(msg)
    return S


def max_completion(S: PartialState) -> tuple[Fraction | None, list[str]]:
    """Best bottleneck over all completions of ``S``.

    Grows a prefix from the root, always adding the eligible vertex with the
    heaviest connection to the prefix.  A vertex is eligible once all tails of
    its incoming arcs are in the prefix and it touches the prefix.  Because
    growing the prefix only raises the other vertices' scores, the greedy
    bottleneck is the maximum achievable minimum in-weight.  Returns
    ``(None, partial order)`` when ``S`` admits no completion.
    """
    G = S.graph
    w = G.weights
    placed = {S.root}
    order = [S.root]
    score = {v: Fraction(0) for v in G.vertices}
    touching = set()
    blocked = {v: len(S.in_arcs(v)) for v in G.vertices}

    def absorb(x):
        for eid in G.incident(x):
            y = G.edge(eid).other(x)
            if y in placed:
                continue
            d = S.direction.get(eid)
            if d is not None and d[0] != x:
                continue
            score[y] += w[eid]
            touching.add(y)
            if d is not None:
                blocked[y] -= 1

    absorb(S.root)
    best = None
    while len(order) < G.n:
        cands = [v for v in touching if v not in placed and blocked[v] == 0]
        if not cands:
            return None, order
        v = max(cands, key=lambda x: (score[x], -G.index(x)))
        best = score[v] if best is None else min(best, score[v])
        placed.add(v)
        order.append(v)
        absorb(v)
    return best, order


@dataclass(frozen=True)
class SinkCensus:
    counts: Mapping[int, int]

    @property
    def degree2(self) -> int:
        return self.counts.get(2, 0)

    @property
    def weighted(self) -> int:
        """``sum (i - 1) s_i`` over degrees ``i >= 2``."""
        return sum((i - 1) * c for i, c in self.counts.items() if i >= 2)

    def holds(self, k: int) -> bool:
        return self.degree2 <= k + 1 and self.weighted <= k + 1


def sink_census(O: Orientation) -> SinkCensus:
    counts: dict[int, int] = {}
    for v in O.base.vertices:
        if v != O.root and O.outdegree(v) == 0:
            d = O.base.degree(v)
            counts[d] = counts.get(d, 0) + 1
    return SinkCensus(dict(sorted(counts.items())))
