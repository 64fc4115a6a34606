import pytest
from hypothesis import given, settings

from lpaspec import ThresholdError
from lpaspec.graph import Edge, Graph
from lpaspec.hsat import (
    BRUTE_FORCE_MAX_VERTICES,
    _lattice_by_joins,
    closure,
    closure_stages,
    enumerate_hsat,
    enumerate_hsat_masks,
    is_hereditary,
    is_saturated,
    omega,
)
from lpaspec.oracles import brute_closure, brute_hsat, random_graphs, subsets

from named import LINE3, LOOP, ROSE2, TOEPLITZ, TWO_LOOPS
from strategies import graphs


class TestPredicates:
    def test_hereditary(self):
        assert is_hereditary(TOEPLITZ, {"w"})
        assert not is_hereditary(TOEPLITZ, {"v"})
        for g in (TOEPLITZ, LINE3, LOOP):
            assert is_hereditary(g, set())
            assert is_hereditary(g, g.vertices)

    def test_saturated(self):
        assert is_saturated(TOEPLITZ, {"w"})
        assert not is_saturated(LINE3, {"u3"})
        for g in (TOEPLITZ, LINE3, LOOP):
            assert is_saturated(g, g.vertices)


class TestOmega:
    def test_examples(self):
        assert omega(TOEPLITZ, {"v"}) == {"w"}
        assert omega(TOEPLITZ, {"w"}) == frozenset()
        for g in (TOEPLITZ, LINE3, TWO_LOOPS):
            assert omega(g, g.vertices) == frozenset()


class TestClosure:
    def test_line_trace(self):
        stages = closure_stages(LINE3, {"u3"})
        assert stages == [{"u3"}, {"u2", "u3"}, {"u1", "u2", "u3"}]
        assert closure(LINE3, {"u3"}) == {"u1", "u2", "u3"}

    def test_examples_match_oracle(self):
        assert brute_closure(LINE3, {"u3"}) == {"u1", "u2", "u3"}
        assert closure(TOEPLITZ, {"w"}) == brute_closure(TOEPLITZ, {"w"}) == {"w"}
        for g in (TOEPLITZ, LINE3, LOOP, TWO_LOOPS):
            assert closure(g, set()) == frozenset()
            assert closure(g, g.vertices) == frozenset(g.vertices)

    @settings(max_examples=80)
    @given(graphs(max_vertices=6, max_edges=9))
    def test_minimal_idempotent_monotone(self, g):
        lattice = brute_hsat(g)
        all_x = list(subsets(g.vertices))
        closures = {X: closure(g, X) for X in all_x}
        for X, c in closures.items():
            assert c in lattice and X <= c
            assert all(c <= H for H in lattice if X <= H)
            assert closure(g, c) == c
        for X in all_x:
            for Y in all_x:
                if X <= Y:
                    assert closures[X] <= closures[Y]

    @given(graphs(max_vertices=8, max_edges=12))
    def test_stabilizes_within_vertex_count(self, g):
        for v in g.vertices:
            assert len(closure_stages(g, {v})) <= len(g.vertices) + 1


class TestEnumerate:
    def test_examples(self):
        assert enumerate_hsat(TOEPLITZ) == [frozenset(), {"w"}, {"v", "w"}]
        assert enumerate_hsat(ROSE2) == [frozenset(), {"v"}]
        assert enumerate_hsat(TWO_LOOPS) == [frozenset(), {"v"}, {"w"}, {"v", "w"}]

    @settings(max_examples=100)
    @given(graphs(max_vertices=7, max_edges=10))
    def test_matches_oracle(self, g):
        assert set(enumerate_hsat(g)) == set(brute_hsat(g))
        assert frozenset() in enumerate_hsat(g)
        assert frozenset(g.vertices) in enumerate_hsat(g)

    def test_lattice_generation_matches_brute_force(self):
        for g in random_graphs(40, seed=3, vertices=(1, 10), edges=(0, 14)):
            assert _lattice_by_joins(g) == enumerate_hsat_masks(g)

    def test_large_graph_uses_lattice_or_refuses(self):
        n = BRUTE_FORCE_MAX_VERTICES + 2
        names = tuple(f"u{i}" for i in range(n))
        g = Graph(names, tuple(Edge(f"a{i}", names[i], names[i + 1]) for i in range(n - 1)))
        # a line has only the trivial hereditary saturated sets
        assert enumerate_hsat(g) == [frozenset(), frozenset(names)]
        with pytest.raises(ThresholdError):
            enumerate_hsat(g, allow_lattice=False)
