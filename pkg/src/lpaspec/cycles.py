"""Cycles, exits, Condition (L), P_c(E) and comets."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import DomainError
from .graph import Graph


@dataclass(frozen=True)
class Cycle:
    """Closed path whose edges have pairwise distinct sources.

    ``vertices[i]`` is the source of ``edges[i]``. Instances built through
    :func:`make_cycle` start at the lexicographically smallest vertex.
    """

    edges: tuple[str, ...]
    vertices: tuple[str, ...]

    def __len__(self):
        return len(self.edges)

    @property
    def vertex_set(self) -> frozenset[str]:
        return frozenset(self.vertices)

    def rotated_to(self, v: str) -> "Cycle":
        i = self.vertices.index(v)
        return Cycle(self.edges[i:] + self.edges[:i], self.vertices[i:] + self.vertices[:i])

    def __str__(self):
        return "(" + " ".join(self.edges) + ")"


def make_cycle(g: Graph, edges: Iterable[str]) -> Cycle:
    """Validate an edge sequence as a cycle of g and canonicalize it."""
    edges = tuple(edges)
    if not edges:
        raise DomainError("a cycle needs at least one edge")
    for e in edges:
        if e not in g.edge_map:
            raise DomainError(f"unknown edge {e!r}")
    sources = tuple(g.source(e) for e in edges)
    for a, b in zip(edges, edges[1:] + edges[:1]):
        if g.range(a) != g.source(b):
            raise DomainError(f"edges {a!r} and {b!r} do not compose")
    if len(set(sources)) != len(sources):
        raise DomainError("edge sources repeat; closed path is not a cycle")
    return Cycle(edges, sources).rotated_to(min(sources))


def enumerate_cycles(g: Graph) -> list[Cycle]:
    """All cycles up to rotation, each rotated to start at its smallest vertex.

    Depth-first from each start vertex s, only through vertices named
    after s, so every cycle is met exactly once and already canonical.
    """
    found: list[Cycle] = []
    for start in sorted(g.vertices):
        path_edges: list[str] = []
        path_vertices: list[str] = [start]
        on_path = {start}
        # explicit stack of out-edge iterators
        stack = [iter(g.out_edges[start])]
        while stack:
            edge = next(stack[-1], None)
            if edge is None:
                stack.pop()
                if path_edges:
                    path_edges.pop()
                    on_path.discard(path_vertices.pop())
                continue
            nxt = edge.range
            if nxt == start:
                found.append(Cycle(tuple(path_edges) + (edge.name,), tuple(path_vertices)))
            elif nxt > start and nxt not in on_path:
                path_edges.append(edge.name)
                path_vertices.append(nxt)
                on_path.add(nxt)
                stack.append(iter(g.out_edges[nxt]))
    found.sort(key=lambda c: (c.vertices, c.edges))
    return found


def exits_of(g: Graph, c: Cycle) -> list[str]:
    """Edges leaving a vertex of c that are not edges of c."""
    on_cycle = c.vertex_set
    own = set(c.edges)
    return [e.name for e in g.edges if e.source in on_cycle and e.name not in own]


def exits_within(g: Graph, c: Cycle, members: Iterable[str]) -> list[str]:
    members = set(members)
    return [e for e in exits_of(g, c) if g.range(e) in members]


def exitless_cycles(g: Graph) -> list[Cycle]:
    return [c for c in enumerate_cycles(g) if not exits_of(g, c)]


def condition_L(g: Graph) -> bool:
    return not exitless_cycles(g)


def pc_set(g: Graph) -> frozenset[str]:
    """Vertices lying on cycles without exits."""
    out: set[str] = set()
    for c in exitless_cycles(g):
        out |= c.vertex_set
    return frozenset(out)


def is_comet(g: Graph) -> bool:
    cycles = enumerate_cycles(g)
    if len(cycles) != 1:
        return False
    target = g.mask(cycles[0].vertices)
    return all(r & target for r in g.reach_masks)


def count_paths_into(g: Graph, v0: str, avoid: tuple[str, ...]) -> Optional[int]:
    """Number of paths ending at v0 that never contain ``avoid`` contiguously.

    Returns None when the count is infinite. Paths are grown backwards;
    once a path contains ``avoid`` so does every extension, so the branch
    is dropped. Any surviving path longer than 2|E0| must wind around a
    second cycle, which means infinitely many survive.
    """
    g.check_vertex(v0)
    k = len(avoid)
    bound = 2 * len(g.vertices) + 1
    count = 0
    # each entry: (first vertex, first k-1 edges of the path, length)
    stack = [(v0, (), 0)]
    while stack:
        u, head, length = stack.pop()
        count += 1
        if length > bound:
            return None
        for e in g.in_edges[u]:
            new_head = (e.name,) + head
            if k and new_head[:k] == avoid:
                continue
            stack.append((e.source, new_head[: max(k - 1, 0)], length + 1))
    return count


def comet_matrix_size(g: Graph, base: Optional[str] = None) -> int:
    """Size n with L(g) isomorphic to n x n matrices over K[x, x^-1].

    n counts the paths ending at a base vertex of the unique cycle that do
    not run once around the cycle from that vertex. Any base vertex on the
    cycle gives the same count.
    """
    cycles = enumerate_cycles(g)
    if not is_comet(g):
        raise DomainError("graph is not a comet")
    mu = cycles[0]
    v0 = base if base is not None else mu.vertices[0]
    if v0 not in mu.vertex_set:
        raise DomainError(f"base vertex {v0!r} is not on the cycle")
    n = count_paths_into(g, v0, mu.rotated_to(v0).edges)
    if n is None:
        raise DomainError("comet has infinitely many paths into the cycle")
    return n
