import pytest

from brp.errors import ForcedContradiction
from brp.graph import Orientation, is_r_acyclic_orientation
from brp.oracle import enumerate_r_acyclic, oracle_k
from brp.orientation import (
    PartialState,
    f_excess,
    forced_closure,
    init_partial,
    max_completion,
    orient_sink,
    sink_census,
)
from brp.outerplanar import recognize

from .conftest import graph, random_instances


def arcs(S):
    return {(t, h) for t, h in S.direction.values()}


class TestInit:
    def test_c4(self):
        G = graph("ab:1 bc:1 cd:1 da:1")
        S = init_partial(G, recognize(G), "a")
        assert arcs(S) == {("a", "b"), ("a", "d")}
        assert sorted(S.undirected()) == ["e2", "e3"]
        assert S.f == 0

    def test_triangle(self):
        G = graph("ab:1 bc:1 ca:1")
        S = init_partial(G, recognize(G), "a")
        assert arcs(S) == {("a", "b"), ("a", "c")}
        assert S.undirected() == ["e2"]
        assert S.f == 0

    def test_star_from_centre(self):
        G = graph("rx:1 ry:1 rz:1")
        S = init_partial(G, None, "r")
        assert S.is_complete() and S.f == 0


class TestClosure:
    def test_series_outer_chord_propagates(self):
        # hexagon a..f with chord ad, root f; sink b pulls the outer chord a-b-c-d towards b
        G = graph("ab:1 bc:1 cd:1 de:1 ef:1 fa:1 ad:1")
        S = init_partial(G, recognize(G), "f")
        orient_sink(S, "b")
        assert {("a", "b"), ("c", "b"), ("d", "c")} <= arcs(S)

    def test_fixpoint_is_identity(self):
        G = graph("ab:1 bc:1 cd:1 da:1 ac:1")
        S = init_partial(G, recognize(G), "a")
        before = dict(S.direction)
        forced_closure(S)
        assert S.direction == before

    def test_triangle_sink(self):
        G = graph("ab:1 bc:1 ca:1")
        S = init_partial(G, recognize(G), "a")
        orient_sink(S, "b")
        assert S.is_complete()
        assert arcs(S) == {("a", "b"), ("c", "b"), ("a", "c")}
        # the only other completion (b -> c) is the one the sink rules out
        completions = [O.direction for O in enumerate_r_acyclic(G, "a")]
        assert S.direction in completions

    def test_acyclicity_rule(self):
        # a->b->c directed; edge ac must go a->c even though c already has an in-arc
        G = graph("ab:1 bc:1 ca:1 cd:1 da:1")
        S = PartialState(G, "d", k=1, direction={"e1": ("a", "b"), "e2": ("b", "c")})
        forced_closure(S)
        assert S.direction["e3"] == ("a", "c")

    def test_contradiction(self):
        # b already reaches d, so d -> b cannot be added
        G = graph("ab:1 bc:1 cd:1 da:1 bd:1")
        S = init_partial(G, recognize(G), "a")
        S.direction.update({"e2": ("b", "c"), "e3": ("c", "d")})
        with pytest.raises(ForcedContradiction):
            orient_sink(S, "b")


class TestExcess:
    def test_fresh(self):
        G = graph("ab:1 bc:1 cd:1 da:1 ac:1")
        assert f_excess(init_partial(G, recognize(G), "b")) == 0

    @pytest.mark.parametrize("seed", range(10))
    def test_full_orientation_is_k_plus_one(self, seed):
        (G,) = random_instances(1, 8, seed=seed)
        emb = recognize(G)
        for O in enumerate_r_acyclic(G, G.vertices[0]):
            S = PartialState(G, O.root, emb.k, dict(O.direction))
            assert f_excess(S) == emb.k + 1 == G.m - (G.n - 1)

    def test_degree_three_sink(self):
        # b has degree 3 and is not adjacent to the root e
        G = graph("ab:1 bc:1 cd:1 de:1 ea:1 bd:1")
        S = init_partial(G, recognize(G), "e")
        orient_sink(S, "b")
        assert len(S.in_arcs("b")) == 3
        assert f_excess(S) == S.f == 2


class TestOrientSink:
    def test_c4_unique_completion(self):
        G = graph("ab:1 bc:1 cd:1 da:1")
        S = init_partial(G, recognize(G), "a")
        orient_sink(S, "c")
        assert S.is_complete() and S.f == 1
        assert is_r_acyclic_orientation(G, S.orientation(), "a")

    def test_already_directed_is_noop(self):
        G = graph("ab:1 bc:1 cd:1 da:1 ac:1")
        S = init_partial(G, recognize(G), "a")
        orient_sink(S, "c")
        # b and d are now fully directed with a single in-arc each
        before = dict(S.direction)
        f = S.f
        orient_sink(S, "b")
        assert S.direction == before and S.f == f

    def test_chord_head_adds_indegree_minus_one(self):
        G = graph("ab:1 bc:1 cd:1 da:1 ac:1")
        S = init_partial(G, recognize(G), "a")
        assert S.in_arcs("c") == ["e5"]
        orient_sink(S, "c")
        assert len(S.in_arcs("c")) == 3 and S.f == 2

    def test_root_rejected(self):
        G = graph("ab:1 bc:1 ca:1")
        with pytest.raises(ValueError):
            orient_sink(init_partial(G, recognize(G), "a"), "a")


class TestCensus:
    def test_circuit(self):
        G = graph("ab:1 bc:1 cd:1 de:1 ea:1")
        for O in enumerate_r_acyclic(G, "a"):
            census = sink_census(O)
            assert dict(census.counts) == {2: 1}
            assert census.holds(0)

    def test_single_edge(self):
        G = graph("rv:1")
        assert dict(sink_census(Orientation(G, {"e1": ("r", "v")}, "r")).counts) == {1: 1}

    def test_sink_bounds_over_enumeration(self):
        violations = 0
        for G in random_instances(40, 7, seed=21):
            k = G.m - G.n
            for r in G.vertices:
                for O in enumerate_r_acyclic(G, r):
                    violations += not sink_census(O).holds(k)
        assert violations == 0


class TestMaxCompletion:
    def test_equals_oracle_at_start(self):
        for G in random_instances(30, 7, seed=8):
            emb = recognize(G)
            for r in G.vertices:
                value, order = max_completion(init_partial(G, emb, r))
                assert value == oracle_k(G, r=r)
                assert order[0] == r and sorted(order) == sorted(G.vertices)

    def test_unextendable_state(self):
        G = graph("ab:1 bc:1 cd:1 da:1")
        # b and d both sinks leaves c with no way in
        S = PartialState(G, "a", k=0, direction={"e1": ("a", "b"), "e2": ("c", "b"), "e3": ("c", "d"), "e4": ("a", "d")})
        assert max_completion(S)[0] is None
