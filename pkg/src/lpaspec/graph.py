"""Finite directed multigraphs: representation, text format, reachability.

Graph documents are line oriented::

    # comment
    vertex v
    vertex w
    edge e v v
    edge f v w

``edge e a b`` declares an edge named ``e`` with source ``a`` and range
``b``. Parallel edges and loops are allowed. Every vertex must be declared
before use.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from . import kernels
from .errors import GraphFormatError, UnknownVertexError

# Derived graphs add "*" (ghost edges) and "~" (bar edges) to plain names.
NAME_RE = re.compile(r"~?[A-Za-z0-9_]+\**")
PLAIN_NAME_RE = re.compile(r"[A-Za-z0-9_]+")


@dataclass(frozen=True)
class Edge:
    name: str
    source: str
    range: str


@dataclass(frozen=True)
class Graph:
    """Immutable multigraph ``(E0, E1, s, r)`` with named vertices and edges.

    Declaration order is kept; it fixes the bit positions used by the
    kernels. Anything user-visible is sorted by name instead.
    """

    vertices: tuple[str, ...]
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(
            self, "edges", tuple(e if isinstance(e, Edge) else Edge(*e) for e in self.edges)
        )
        seen = set()
        for v in self.vertices:
            if v in seen:
                raise GraphFormatError(f"duplicate vertex {v!r}")
            seen.add(v)
        names = set()
        for e in self.edges:
            if e.name in names:
                raise GraphFormatError(f"duplicate edge {e.name!r}")
            names.add(e.name)
            for end in (e.source, e.range):
                if end not in seen:
                    raise GraphFormatError(f"edge {e.name!r} uses undeclared vertex {end!r}")

    # -- lookups ---------------------------------------------------------

    @cached_property
    def index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def edge_map(self) -> dict[str, Edge]:
        return {e.name: e for e in self.edges}

    @cached_property
    def out_edges(self) -> dict[str, tuple[Edge, ...]]:
        out = {v: [] for v in self.vertices}
        for e in self.edges:
            out[e.source].append(e)
        return {v: tuple(es) for v, es in out.items()}

    @cached_property
    def in_edges(self) -> dict[str, tuple[Edge, ...]]:
        into = {v: [] for v in self.vertices}
        for e in self.edges:
            into[e.range].append(e)
        return {v: tuple(es) for v, es in into.items()}

    @cached_property
    def succ_masks(self) -> list[int]:
        succ = [0] * len(self.vertices)
        for e in self.edges:
            succ[self.index[e.source]] |= 1 << self.index[e.range]
        return succ

    @cached_property
    def reach_masks(self) -> list[int]:
        return kernels.backend_for(len(self.vertices)).reach_masks(self.succ_masks)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.vertices)) - 1

    def check_vertex(self, v: str) -> str:
        if v not in self.index:
            raise UnknownVertexError(f"unknown vertex {v!r}")
        return v

    def mask(self, names: Iterable[str]) -> int:
        m = 0
        for v in names:
            m |= 1 << self.index[self.check_vertex(v)]
        return m

    def names(self, mask: int) -> frozenset[str]:
        return frozenset(v for i, v in enumerate(self.vertices) if (mask >> i) & 1)

    def source(self, edge: str) -> str:
        return self.edge_map[edge].source

    def range(self, edge: str) -> str:
        return self.edge_map[edge].range

    def is_sink(self, v: str) -> bool:
        return not self.out_edges[self.check_vertex(v)]


# -- text format ----------------------------------------------------------


def parse_graph(text: str) -> Graph:
    """Parse a graph document; errors carry the 1-based line number."""
    vertices: list[str] = []
    declared: set[str] = set()
    edges: list[Edge] = []
    edge_names: set[str] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        kind = parts[0]
        if kind == "vertex":
            if len(parts) != 2:
                raise GraphFormatError("expected 'vertex NAME'", lineno)
            name = parts[1]
            _check_name(name, lineno)
            if name in declared:
                raise GraphFormatError(f"duplicate vertex name {name!r}", lineno)
            declared.add(name)
            vertices.append(name)
        elif kind == "edge":
            if len(parts) != 4:
                raise GraphFormatError("expected 'edge NAME SOURCE RANGE'", lineno)
            name, src, rng = parts[1:]
            for n in (name, src, rng):
                _check_name(n, lineno)
            if name in edge_names:
                raise GraphFormatError(f"duplicate edge name {name!r}", lineno)
            for end in (src, rng):
                if end not in declared:
                    raise GraphFormatError(f"undeclared endpoint {end}", lineno)
            edge_names.add(name)
            edges.append(Edge(name, src, rng))
        else:
            raise GraphFormatError(f"syntax error: unknown directive {kind!r}", lineno)
    return Graph(tuple(vertices), tuple(edges))


def _check_name(name, lineno):
    if not NAME_RE.fullmatch(name):
        raise GraphFormatError(f"syntax error: invalid name {name!r}", lineno)


def serialize_graph(g: Graph, header: Iterable[str] = ()) -> str:
    lines = [f"# {h}" for h in header]
    lines += [f"vertex {v}" for v in g.vertices]
    lines += [f"edge {e.name} {e.source} {e.range}" for e in g.edges]
    return "\n".join(lines) + "\n"


def load_graph(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


def to_dot(g: Graph, name: str = "E") -> str:
    """Plain structural DOT export."""
    out = [f"digraph {name} {{"]
    out += [f'  "{v}";' for v in g.vertices]
    out += [f'  "{e.source}" -> "{e.range}" [label="{e.name}"];' for e in g.edges]
    out.append("}")
    return "\n".join(out) + "\n"


# -- reachability ----------------------------------------------------------


def reaches(g: Graph, v: str, w: str) -> bool:
    """True iff some path (possibly of length 0) runs from v to w."""
    g.check_vertex(v)
    g.check_vertex(w)
    return bool((g.reach_masks[g.index[v]] >> g.index[w]) & 1)


def tree_mask(g: Graph, mask: int) -> int:
    out = 0
    reach = g.reach_masks
    for i in range(len(g.vertices)):
        if (mask >> i) & 1:
            out |= reach[i]
    return out


def tree(g: Graph, X: Iterable[str]) -> frozenset[str]:
    """All vertices reachable from some member of X."""
    return g.names(tree_mask(g, g.mask(X)))


def sinks(g: Graph) -> frozenset[str]:
    return frozenset(v for v in g.vertices if not g.out_edges[v])
