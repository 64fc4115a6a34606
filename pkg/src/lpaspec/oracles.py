"""Brute-force reference implementations for the test suite.

Nothing here calls into the analysis modules; only the ``Graph`` type is
shared. Every routine works straight from the definitions and is meant
for graphs of a dozen vertices or edges at most.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .errors import DomainError
from .graph import Edge, Graph

MAX_VERTICES = 12
MAX_EDGES = 12


@dataclass(frozen=True)
class RandomGraphSpec:
    vertices: tuple[int, int] = (1, 8)
    edges: tuple[int, int] = (0, 12)
    seed: int = 0

    def generate(self) -> Graph:
        rng = random.Random(self.seed)
        n = rng.randint(*self.vertices)
        m = rng.randint(*self.edges)
        names = [f"v{i}" for i in range(n)]
        edges = [
            Edge(f"e{j}", rng.choice(names), rng.choice(names)) for j in range(m)
        ]
        return Graph(tuple(names), tuple(edges))


def random_graphs(count, seed=0, vertices=(1, 8), edges=(0, 12)):
    return [RandomGraphSpec(vertices, edges, seed * 100003 + i).generate() for i in range(count)]


def _check_size(g: Graph, vertices=True, edges=False):
    if vertices and len(g.vertices) > MAX_VERTICES:
        raise DomainError(f"oracle limited to {MAX_VERTICES} vertices")
    if edges and len(g.edges) > MAX_EDGES:
        raise DomainError(f"oracle limited to {MAX_EDGES} edges")


def reachable_from(g: Graph, v: str) -> set[str]:
    seen = {v}
    todo = [v]
    while todo:
        u = todo.pop()
        for e in g.edges:
            if e.source == u and e.range not in seen:
                seen.add(e.range)
                todo.append(e.range)
    return seen


def path_reaches(g: Graph, v: str, w: str) -> bool:
    """Search every path of length <= |E0|*|E1| from v for one ending at w."""
    if v == w:
        return True
    frontier = {v}
    for _ in range(max(len(g.vertices) * len(g.edges), 1)):
        frontier = {e.range for e in g.edges if e.source in frontier}
        if w in frontier:
            return True
    return False


def subsets(vertices):
    for r in range(len(vertices) + 1):
        for combo in itertools.combinations(vertices, r):
            yield frozenset(combo)


def hereditary(g: Graph, H) -> bool:
    return all(reachable_from(g, v) <= H for v in H)


def saturated(g: Graph, H) -> bool:
    for v in g.vertices:
        ranges = {e.range for e in g.edges if e.source == v}
        if ranges and ranges <= H and v not in H:
            return False
    return True


def brute_hsat(g: Graph) -> list[frozenset[str]]:
    _check_size(g)
    return [H for H in subsets(g.vertices) if hereditary(g, H) and saturated(g, H)]


def brute_closure(g: Graph, X) -> frozenset[str]:
    """Inclusion-minimum hereditary saturated superset of X, by exhaustive scan."""
    _check_size(g)
    X = frozenset(X)
    supersets = [H for H in brute_hsat(g) if X <= H]
    smallest = [H for H in supersets if all(H <= K for K in supersets)]
    if len(smallest) != 1:
        raise AssertionError("no unique minimum hereditary saturated superset")
    return smallest[0]


def mt1(g: Graph, M) -> bool:
    return all(v in M for v in g.vertices if reachable_from(g, v) & M)


def mt2(g: Graph, M) -> bool:
    for v in M:
        out = [e for e in g.edges if e.source == v]
        if out and not any(e.range in M for e in out):
            return False
    return True


def mt3(g: Graph, M) -> bool:
    reach = {v: reachable_from(g, v) for v in M}
    return all(reach[v] & reach[w] & M for v in M for w in M)


def brute_tails(g: Graph) -> list[frozenset[str]]:
    _check_size(g)
    return [
        M for M in subsets(g.vertices)
        if M and mt1(g, M) and mt2(g, M) and mt3(g, M)
    ]


def canonical_rotation(g: Graph, edges: tuple[str, ...]) -> tuple[str, ...]:
    src = {e.name: e.source for e in g.edges}
    i = min(range(len(edges)), key=lambda j: src[edges[j]])
    return edges[i:] + edges[:i]


def brute_cycles(g: Graph) -> list[tuple[str, ...]]:
    """Closed paths with distinct edge sources, as canonical edge tuples."""
    _check_size(g, vertices=False, edges=True)
    found = set()
    by_source: dict[str, list[Edge]] = {v: [] for v in g.vertices}
    for e in g.edges:
        by_source[e.source].append(e)
    paths = [(e,) for e in g.edges]
    for _ in range(len(g.vertices)):
        longer = []
        for p in paths:
            if p[-1].range == p[0].source:
                sources = [e.source for e in p]
                if len(set(sources)) == len(sources):
                    found.add(canonical_rotation(g, tuple(e.name for e in p)))
            longer.extend(p + (e,) for e in by_source[p[-1].range])
        paths = longer
    return sorted(found)


def brute_exitless_in(g: Graph, M) -> list[tuple[str, ...]]:
    """Cycles inside M with no exit whose range lies in M."""
    src = {e.name: e.source for e in g.edges}
    out = []
    for c in brute_cycles(g):
        verts = {src[e] for e in c}
        if not verts <= M:
            continue
        exits = [e for e in g.edges if e.source in verts and e.name not in c and e.range in M]
        if not exits:
            out.append(c)
    return out


def brute_path_count(g: Graph, v0: str, avoid: tuple[str, ...], max_len: int) -> int:
    """Count paths of length <= max_len ending at v0 that avoid ``avoid``.

    Walks every edge sequence forward from every vertex; no pruning.
    """
    k = len(avoid)
    count = 1  # the length-0 path at v0
    paths = [(e,) for e in g.edges]
    for _ in range(max_len):
        nxt = []
        for p in paths:
            names = tuple(e.name for e in p)
            if p[-1].range == v0 and not any(
                names[i:i + k] == avoid for i in range(len(names) - k + 1)
            ):
                count += 1
            nxt.extend(p + (e,) for e in g.edges if e.source == p[-1].range)
        paths = nxt
    return count


# -- polynomials over GF(p) -------------------------------------------------


def _mul_mod(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    return tuple(out)


def _monic(p, d):
    for lower in itertools.product(range(p), repeat=d):
        yield tuple(reversed(lower)) + (1,)


def brute_irreducibles(p: int, max_degree: int) -> list[tuple[int, ...]]:
    """Monic irreducibles over GF(p) by sieving out all products."""
    out = []
    for d in range(1, max_degree + 1):
        reducible = set()
        for a in range(1, d // 2 + 1):
            for f in _monic(p, a):
                for g in _monic(p, d - a):
                    reducible.add(_mul_mod(f, g, p))
        out.extend(f for f in _monic(p, d) if f not in reducible)
    return out
