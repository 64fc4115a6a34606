"""Graphs derived from E: quotient E/H, restriction E_H, extended graph,
and the graph _H E that realizes the ideal generated by H."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .errors import DomainError, NotHereditaryError
from .graph import Edge, Graph, serialize_graph
from .hsat import is_hereditary, is_hsat


@dataclass(frozen=True)
class DerivedGraph:
    graph: Graph
    construction: str
    params: dict = field(default_factory=dict)
    # derived name -> originating vertex/edge name, or edge tuple for paths
    name_map: dict = field(default_factory=dict)

    @property
    def provenance(self) -> str:
        args = ", ".join(f"{k}={v}" for k, v in self.params.items())
        return f"{self.construction}({args})"

    def serialize(self) -> str:
        return serialize_graph(self.graph, header=[f"derived: {self.provenance}"])


def _require_hereditary(g: Graph, H: frozenset[str]):
    if not is_hereditary(g, H):
        raise NotHereditaryError(f"{sorted(H)} is not hereditary")


def quotient_graph(g: Graph, H: Iterable[str]) -> DerivedGraph:
    """E/H: drop H and every edge whose range lies in H."""
    H = frozenset(H)
    _require_hereditary(g, H)
    verts = tuple(v for v in g.vertices if v not in H)
    edges = tuple(e for e in g.edges if e.range not in H)
    name_map = {v: v for v in verts} | {e.name: e.name for e in edges}
    return DerivedGraph(Graph(verts, edges), "quotient", {"H": sorted(H)}, name_map)


def restriction_graph(g: Graph, H: Iterable[str]) -> DerivedGraph:
    """E_H: keep H and every edge whose source lies in H."""
    H = frozenset(H)
    _require_hereditary(g, H)
    verts = tuple(v for v in g.vertices if v in H)
    edges = tuple(e for e in g.edges if e.source in H)
    name_map = {v: v for v in verts} | {e.name: e.name for e in edges}
    return DerivedGraph(Graph(verts, edges), "restriction", {"H": sorted(H)}, name_map)


def _fresh(name: str, taken: set[str], suffix: str = "_") -> str:
    out = name
    k = 1
    while out in taken:
        out = f"{name}{suffix}{k}"
        k += 1
    taken.add(out)
    return out


def extended_graph(g: Graph) -> DerivedGraph:
    """Add a reversed ghost edge ``e*`` for every edge e."""
    taken = {e.name for e in g.edges}
    ghosts = []
    name_map = {e.name: e.name for e in g.edges}
    for e in g.edges:
        ghost = e.name + "*"
        while ghost in taken:
            ghost += "*"
        taken.add(ghost)
        ghosts.append(Edge(ghost, e.range, e.source))
        name_map[ghost] = e.name
    return DerivedGraph(Graph(g.vertices, g.edges + tuple(ghosts)), "extended", {}, name_map)


def outside_cycle_feeds(g: Graph, H: frozenset[str]) -> bool:
    """True when some vertex on a cycle avoiding H reaches H."""
    inside = g.mask(H)
    index = g.index
    reach = g.reach_masks
    for v in g.vertices:
        if v in H:
            continue
        i = index[v]
        if not reach[i] & inside:
            continue
        # v lies on a cycle outside H iff an edge leaves v into E0\H and returns
        for e in g.out_edges[v]:
            if e.range in H:
                continue
            if _reaches_avoiding(g, e.range, v, H):
                return True
    return False


def _reaches_avoiding(g: Graph, start: str, target: str, H: frozenset[str]) -> bool:
    seen = {start}
    todo = [start]
    while todo:
        u = todo.pop()
        if u == target:
            return True
        for e in g.out_edges[u]:
            if e.range not in H and e.range not in seen:
                seen.add(e.range)
                todo.append(e.range)
    return False


@dataclass(frozen=True)
class HedgeResult:
    derived: DerivedGraph
    finite: bool
    truncated: bool


def entering_paths(g: Graph, H: frozenset[str], max_len: int):
    """Paths from outside H whose last edge is the first to land in H.

    Returns (paths, truncated) with every path of length <= max_len.
    """
    paths: list[tuple[str, ...]] = []
    truncated = False
    stack = [(e.name,) for e in reversed(g.edges) if e.source not in H and e.range in H]
    while stack:
        p = stack.pop()
        paths.append(p)
        head = g.source(p[0])
        extensions = [e for e in g.in_edges[head] if e.source not in H]
        if len(p) >= max_len:
            truncated = truncated or bool(extensions)
            continue
        for e in reversed(extensions):
            stack.append((e.name,) + p)
    paths.sort(key=lambda p: (len(p), p))
    return paths, truncated


def hedge_graph(g: Graph, H: Iterable[str], max_path_length: int = 8) -> HedgeResult:
    """The graph _H E on H plus the entering paths F_E(H).

    A vertex for each entering path alpha carries a single edge ``~alpha``
    to r(alpha). When a cycle outside H feeds into H the path set is
    infinite; it is cut at ``max_path_length`` and ``finite`` is False.
    """
    H = frozenset(H)
    if max_path_length < 1:
        raise DomainError("max_path_length must be positive")
    if not H:
        raise DomainError("H must be nonempty")
    if not is_hsat(g, H):
        raise DomainError(f"{sorted(H)} is not hereditary saturated")
    finite = not outside_cycle_feeds(g, H)
    paths, truncated = entering_paths(g, H, max_path_length)

    h_vertices = tuple(v for v in g.vertices if v in H)
    taken = set(h_vertices)
    name_map: dict = {v: v for v in h_vertices}
    path_vertices = []
    for p in paths:
        name = _fresh("".join(p), taken)
        path_vertices.append((name, p))
        name_map[name] = p
    edges = [e for e in g.edges if e.source in H]
    edge_taken = {e.name for e in edges}
    name_map.update({e.name: e.name for e in edges})
    for name, p in path_vertices:
        bar = _fresh("~" + name, edge_taken)
        edges.append(Edge(bar, name, g.range(p[-1])))
        name_map[bar] = p
    graph = Graph(h_vertices + tuple(n for n, _ in path_vertices), tuple(edges))
    derived = DerivedGraph(
        graph, "hedge", {"H": sorted(H), "bound": max_path_length}, name_map
    )
    return HedgeResult(derived, finite, truncated)
