import pytest
from hypothesis import given

from lpaspec import DomainError
from lpaspec.graph import Edge, Graph
from lpaspec.oracles import (
    RandomGraphSpec,
    brute_closure,
    brute_cycles,
    brute_irreducibles,
    brute_tails,
    random_graphs,
)

from named import LINE3, LOOP, ROSE2, TOEPLITZ, TWO_LOOPS
from strategies import graphs


def test_brute_closure_examples():
    assert brute_closure(LINE3, {"u3"}) == {"u1", "u2", "u3"}
    assert brute_closure(TOEPLITZ, {"w"}) == {"w"}


@given(graphs(max_vertices=6))
def test_brute_closure_of_everything(g):
    assert brute_closure(g, g.vertices) == frozenset(g.vertices)


def test_brute_tails_examples():
    assert sorted(map(sorted, brute_tails(TOEPLITZ))) == [["v"], ["v", "w"]]
    assert brute_tails(LOOP) == [{"v"}]
    assert sorted(map(sorted, brute_tails(TWO_LOOPS))) == [["v"], ["w"]]


def test_brute_cycles_examples():
    assert brute_cycles(ROSE2) == [("e1",), ("e2",)]
    assert brute_cycles(LINE3) == []
    assert brute_cycles(LOOP) == [("e",)]


def test_brute_irreducibles_gf2():
    assert brute_irreducibles(2, 3) == [(0, 1), (1, 1), (1, 1, 1), (1, 1, 0, 1), (1, 0, 1, 1)]


def test_size_bounds():
    big = Graph(tuple(f"v{i}" for i in range(13)), ())
    with pytest.raises(DomainError):
        brute_tails(big)
    many = Graph(("v",), tuple(Edge(f"e{i}", "v", "v") for i in range(13)))
    with pytest.raises(DomainError):
        brute_cycles(many)


def test_random_graphs_are_deterministic():
    assert random_graphs(20, seed=3) == random_graphs(20, seed=3)
    assert random_graphs(5, seed=3) != random_graphs(5, seed=4)
    for g in random_graphs(50, seed=0):
        assert 1 <= len(g.vertices) <= 8 and len(g.edges) <= 12
    assert RandomGraphSpec(seed=9).generate() == RandomGraphSpec(seed=9).generate()
