"""Brute-force ground truth for small graphs.

Rooted acyclic orientations are generated from vertex orders that start at
the root and in which every later vertex touches an earlier one; orienting
each edge from earlier to later gives every such orientation, and distinct
orientations are kept once.  Any graph is accepted, outerplanar or not.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Mapping

from .errors import BoundExceeded, DisconnectedGraphError
from .graph import Orientation, WeightedGraph, min_trivial_r_cut

DEFAULT_MAX_N = 9


def _check_bound(G: WeightedGraph, max_n: int) -> None:
    if G.n > max_n:
        raise BoundExceeded(f"{G.n} vertices exceed the enumeration bound {max_n}")


def _scaled(G: WeightedGraph, weights: Mapping[str, Fraction] | None) -> tuple[list[int], int]:
    w = G.weights if weights is None else weights
    scale = math.lcm(*(Fraction(w[e.id]).denominator for e in G.edges)) if G.edges else 1
    return [int(Fraction(w[e.id]) * scale) for e in G.edges], scale


def _walk(G: WeightedGraph, r: str, iw: list[int]) -> Iterator[tuple[int, int | None]]:
    """Yield ``(direction mask, bottleneck)`` for every distinct orientation.

    Bit ``i`` of the mask is set when edge ``i`` points from ``u`` to ``v``.
    The bottleneck is the minimum scaled in-weight over non-root vertices
    (``None`` when the graph has one vertex).
    """
    n = G.n
    idx = {v: i for i, v in enumerate(G.vertices)}
    # incidences as (neighbour index, edge index, bit if neighbour is tail)
    inc = [[] for _ in range(n)]
    for i, e in enumerate(G.edges):
        if e.is_loop:
            continue
        a, b = idx[e.u], idx[e.v]
        inc[b].append((a, i, 1 << i))
        inc[a].append((b, i, 0))
    seen = set()
    placed = [False] * n
    ri = idx[r]
    placed[ri] = True

    def rec(count, mask, bottleneck):
        if count == n:
            if mask not in seen:
                seen.add(mask)
                yield mask, bottleneck
            return
        for v in range(n):
            if placed[v]:
                continue
            inw, m2, touch = 0, mask, False
            for x, ei, bit in inc[v]:
                if placed[x]:
                    touch = True
                    inw += iw[ei]
                    m2 |= bit
            if not touch:
                continue
            placed[v] = True
            yield from rec(count + 1, m2, inw if bottleneck is None else min(bottleneck, inw))
            placed[v] = False

    yield from rec(1, 0, None)


def _connected_or_raise(G):
    if not G.is_connected():
        raise DisconnectedGraphError("graph is disconnected")


def enumerate_r_acyclic(G: WeightedGraph, r: str, max_n: int = DEFAULT_MAX_N) -> Iterator[Orientation]:
    _check_bound(G, max_n)
    _connected_or_raise(G)
    iw, _ = _scaled(G, None)
    for mask, _ in _walk(G, r, iw):
        direction = {}
        for i, e in enumerate(G.edges):
            if e.is_loop:
                continue
            direction[e.id] = (e.u, e.v) if mask >> i & 1 else (e.v, e.u)
        yield Orientation(G, direction, r)


def oracle_k(
    G: WeightedGraph, w: Mapping[str, Fraction] | None = None, r: str | None = None, max_n: int = DEFAULT_MAX_N
) -> Fraction:
    """Exact ``k(G, w, r)`` by exhaustion; with ``r=None`` the maximum over roots."""
    _check_bound(G, max_n)
    _connected_or_raise(G)
    if G.n < 2:
        raise ValueError("k is undefined for a single vertex")
    iw, scale = _scaled(G, w)
    roots = G.vertices if r is None else (r,)
    best = max(b for root in roots for _, b in _walk(G, root, iw))
    return Fraction(best, scale)


def count_rooted_acyclic(G: WeightedGraph, max_n: int = DEFAULT_MAX_N) -> int:
    """Number of pairs (root, acyclic orientation with that root as unique source)."""
    _check_bound(G, max_n)
    if not G.is_connected():
        return 0
    iw, _ = _scaled(G, None)
    return sum(1 for r in G.vertices for _ in _walk(G, r, iw))


def min_global_r_cut(
    O: Orientation, w: Mapping[str, Fraction] | None = None, r: str | None = None, max_n: int = DEFAULT_MAX_N
) -> Fraction:
    """Minimum weight of arcs entering ``U`` over every nonempty ``U`` avoiding ``r``."""
    G = O.base
    _check_bound(G, max_n)
    r = O.root if r is None else r
    weights = G.weights if w is None else w
    others = [v for v in G.vertices if v != r]
    if not others:
        raise ValueError("no non-root vertex")
    bit = {v: 1 << i for i, v in enumerate(others)}
    bit[r] = 0
    arcs = [(bit[t], bit[h], Fraction(weights[eid])) for eid, (t, h) in O.direction.items()]
    best = None
    for U in range(1, 1 << len(others)):
        c = sum((wt for t, h, wt in arcs if h & U and not t & U), Fraction(0))
        if best is None or c < best:
            best = c
    return best


@dataclass
class PackingReport:
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_packing(O: Orientation, w: Mapping[str, Fraction] | None, r: str | None, P) -> PackingReport:
    """Check arborescence validity, edgewise feasibility and optimal value.

    ``P`` is anything with ``items`` (pairs of coefficient and arc-id set) and
    ``value``.
    """
    G = O.base
    r = O.root if r is None else r
    weights = G.weights if w is None else w
    report = PackingReport()
    load: dict[str, Fraction] = {}
    for i, (lam, arcs) in enumerate(P.items):
        if lam <= 0:
            report.failures.append(f"item {i}: non-positive coefficient {lam}")
        heads = {}
        for eid in arcs:
            if eid not in O.direction:
                report.failures.append(f"item {i}: {eid} is not an arc of the orientation")
                continue
            t, h = O.direction[eid]
            if h in heads:
                report.failures.append(f"item {i}: vertex {h} has two in-arcs")
            heads[h] = t
            load[eid] = load.get(eid, Fraction(0)) + lam
        if r in heads:
            report.failures.append(f"item {i}: an arc enters the root")
        missing = [v for v in G.vertices if v != r and v not in heads]
        if missing:
            report.failures.append(f"item {i}: vertices {missing} not spanned")
        else:
            for v in G.vertices:
                x, hops = v, 0
                while x != r and x in heads and hops <= G.n:
                    x, hops = heads[x], hops + 1
                if x != r:
                    report.failures.append(f"item {i}: {v} not reachable from the root")
                    break
    for eid, total in load.items():
        if total > weights[eid]:
            report.failures.append(f"edge {eid}: load {total} exceeds weight {weights[eid]}")
    total = sum((lam for lam, _ in P.items), Fraction(0))
    if total != P.value:
        report.failures.append(f"reported value {P.value} differs from coefficient sum {total}")
    if G.n > 1:
        cut, _ = min_trivial_r_cut(O, weights, r)
        if total != cut:
            report.failures.append(f"value {total} differs from minimum trivial cut {cut}")
    return report
