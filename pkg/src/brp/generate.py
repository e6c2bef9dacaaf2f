"""Seeded random instances."""

from __future__ import annotations

import random
from itertools import combinations

from .graph import Edge, WeightedGraph
from fractions import Fraction


def _crosses(c, d):
    (a, b), (x, y) = c, d
    if len({a, b, x, y}) < 4:
        return False
    return (a < x < b) != (a < y < b)


def random_outerplanar(n: int, chords: int, seed: int, wmax: int = 10, wmin: int = 0) -> WeightedGraph:
    """Outer cycle ``1..n`` plus ``chords`` non-crossing chords.

    Chords are drawn one at a time, uniformly among those that cross nothing
    drawn so far; integer weights are uniform on ``[wmin, wmax]``.  Any set of
    non-crossing chords extends to a triangulation, so ``chords <= n - 3``
    always succeeds.
    """
    if n < 3:
        raise ValueError("need n >= 3")
    if not 0 <= chords <= n - 3:
        raise ValueError(f"at most {n - 3} non-crossing chords fit in C{n}, asked for {chords}")
    if not 0 <= wmin <= wmax:
        raise ValueError("need 0 <= wmin <= wmax")
    rng = random.Random(seed)
    diagonals = [(a, b) for a, b in combinations(range(1, n + 1), 2) if b - a not in (1, n - 1)]
    picked = []
    for _ in range(chords):
        free = [c for c in diagonals if c not in picked and not any(_crosses(c, d) for d in picked)]
        picked.append(rng.choice(free))
    picked.sort()
    pairs = [(i, i % n + 1) for i in range(1, n + 1)] + picked
    edges = tuple(Edge(f"e{i}", str(a), str(b)) for i, (a, b) in enumerate(pairs, 1))
    weights = {e.id: Fraction(rng.randint(wmin, wmax)) for e in edges}
    return WeightedGraph(tuple(str(i) for i in range(1, n + 1)), edges, weights)
