import itertools
import random

import networkx as nx
import pytest

from brp.errors import NotOuterplanarError, NotTwoConnectedError
from brp.graph import biconnected_components, build_graph
from brp.outerplanar import classify_chords, recognize

from .conftest import graph, random_instances


def is_outerplanar_reference(G):
    """Outerplanar iff adding a vertex joined to everything keeps it planar."""
    H = nx.Graph()
    H.add_nodes_from(G.vertices)
    H.add_edges_from((e.u, e.v) for e in G.edges)
    H.add_edges_from(("__apex__", v) for v in G.vertices)
    return nx.check_planarity(H)[0]


def test_c5():
    emb = recognize(graph("ab:1 bc:1 cd:1 de:1 ea:1"))
    assert emb.outer_cycle == ("a", "b", "c", "d", "e")
    assert emb.chords == () and emb.k == 0


def test_c4_with_chord():
    emb = recognize(graph("ab:1 bc:1 cd:1 da:1 ac:1"))
    assert emb.outer_cycle == ("a", "b", "c", "d")
    assert emb.chords == ("e5",)
    joins, outer, series, adjacency = classify_chords(emb)
    assert joins == {"a", "c"}
    assert outer == (("a", "b", "c"), ("c", "d", "a"))
    assert series == outer
    assert adjacency == []


def test_k4_rejected():
    G = graph("ab:1 ac:1 ad:1 bc:1 bd:1 cd:1")
    with pytest.raises(NotOuterplanarError) as info:
        recognize(G)
    assert info.value.witness is not None


def test_k23_rejected():
    G = graph("ax:1 xb:1 ay:1 yb:1 az:1 zb:1")
    with pytest.raises(NotOuterplanarError):
        recognize(G)


def test_not_two_connected():
    with pytest.raises(NotTwoConnectedError):
        recognize(graph("ab:1 bc:1"))


def test_circuit_one_outer_chord():
    joins, outer, series, _ = classify_chords(recognize(graph("ab:1 bc:1 ca:1")))
    assert joins == frozenset()
    assert outer == (("a", "b", "c", "a"),)


def test_hexagon_two_adjacent_chords():
    emb = recognize(graph("ab:1 bc:1 cd:1 de:1 ef:1 fa:1 ac:1 ce:1"))
    joins, outer, series, adjacency = classify_chords(emb)
    assert joins == {"a", "c", "e"}
    assert adjacency == [("e7", "e8", "c")]
    assert series == (("a", "b", "c"), ("c", "d", "e"), ("e", "f", "a"))


def test_hexagon_long_chord():
    emb = recognize(graph("ab:1 bc:1 cd:1 de:1 ef:1 fa:1 ad:1"))
    _, outer, series, _ = classify_chords(emb)
    assert outer == (("a", "b", "c", "d"), ("d", "e", "f", "a"))
    assert series == outer


def test_fan_has_single_edge_outer_chords():
    # fan from a over b..e; joins a, c, d leave c-d as a single-edge outer chord
    emb = recognize(graph("ab:1 bc:1 cd:1 de:1 ea:1 ac:1 ad:1"))
    _, outer, series, _ = classify_chords(emb)
    assert outer == (("a", "b", "c"), ("c", "d"), ("d", "e", "a"))
    assert series == (("a", "b", "c"), ("d", "e", "a"))


@pytest.mark.parametrize("seed", range(40))
def test_generator_round_trip(seed):
    (G,) = random_instances(1, 12, seed=seed)
    emb = recognize(G)
    assert emb.k == G.m - G.n
    assert set(emb.outer_cycle) == set(G.vertices)
    assert G.m <= 2 * G.n - 3


def random_two_connected(rng, n):
    while True:
        p = rng.random()
        pairs = [(a, b) for a, b in itertools.combinations(range(n), 2) if rng.random() < p]
        G = build_graph([str(i) for i in range(n)], [(f"e{i}", str(a), str(b)) for i, (a, b) in enumerate(pairs)], [1] * len(pairs))
        if G.m >= n and G.is_connected() and len(biconnected_components(G)[0]) == 1:
            return G


def test_agrees_with_apex_planarity():
    rng = random.Random(7)
    accepted = rejected = 0
    for _ in range(400):
        G = random_two_connected(rng, rng.randint(3, 8))
        try:
            emb = recognize(G)
            ok = True
        except NotOuterplanarError:
            ok = False
        assert ok == is_outerplanar_reference(G)
        if ok:
            accepted += 1
            pos = {v: i for i, v in enumerate(emb.outer_cycle)}
            for c in emb.chords:
                e = G.edge(c)
                assert abs(pos[e.u] - pos[e.v]) not in (1, G.n - 1)
        else:
            rejected += 1
    assert accepted > 30 and rejected > 30
