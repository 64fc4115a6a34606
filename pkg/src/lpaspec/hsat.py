"""Hereditary and saturated vertex sets, Omega, closure and the lattice H_E."""

from __future__ import annotations

from typing import Iterable

from . import kernels
from .errors import ThresholdError
from .graph import Graph, tree_mask

BRUTE_FORCE_MAX_VERTICES = 20


def _kern(g: Graph, backend=None):
    return kernels.backend_for(len(g.vertices), prefer=backend)


def is_hereditary(g: Graph, H: Iterable[str]) -> bool:
    return _kern(g).is_hereditary(g.reach_masks, g.mask(H))


def is_saturated(g: Graph, H: Iterable[str]) -> bool:
    return _kern(g).is_saturated(g.succ_masks, g.mask(H))


def is_hsat(g: Graph, H: Iterable[str]) -> bool:
    m = g.mask(H)
    k = _kern(g)
    return k.is_hereditary(g.reach_masks, m) and k.is_saturated(g.succ_masks, m)


def omega(g: Graph, X: Iterable[str]) -> frozenset[str]:
    """Vertices outside X that reach no member of X."""
    x = g.mask(X)
    reach = g.reach_masks
    return frozenset(
        v for i, v in enumerate(g.vertices) if not (x >> i) & 1 and not reach[i] & x
    )


def closure_stages_mask(g: Graph, x: int, backend=None) -> list[int]:
    return _kern(g, backend).closure_stages(g.succ_masks, g.reach_masks, x)


def closure_stages(g: Graph, X: Iterable[str]) -> list[frozenset[str]]:
    """The fixpoint trace: tree of X, then one saturation step per stage.

    The last entry is the closure. Stage count never exceeds |E0| + 1.
    """
    return [g.names(m) for m in closure_stages_mask(g, g.mask(X))]


def closure_mask(g: Graph, x: int) -> int:
    return closure_stages_mask(g, x)[-1]


def closure(g: Graph, X: Iterable[str]) -> frozenset[str]:
    """Smallest hereditary saturated set containing X."""
    return g.names(closure_mask(g, g.mask(X)))


def hsat_sort_key(members: Iterable[str]):
    ordered = sorted(members)
    return (len(ordered), ordered)


def enumerate_hsat_masks(g: Graph, allow_lattice: bool = True, backend=None) -> list[int]:
    n = len(g.vertices)
    if n <= BRUTE_FORCE_MAX_VERTICES:
        k = _kern(g, backend)
        return k.enumerate_hsat(g.succ_masks, g.reach_masks)
    if not allow_lattice:
        raise ThresholdError(
            f"{n} vertices exceeds the brute-force limit of {BRUTE_FORCE_MAX_VERTICES}"
        )
    return _lattice_by_joins(g)


def _lattice_by_joins(g: Graph) -> list[int]:
    # Every H equals the closure of the union of its singleton closures,
    # so closing {0} U {closure(v)} under pairwise joins yields all of H_E.
    generators = {closure_mask(g, 1 << i) for i in range(len(g.vertices))}
    found = {0} | generators
    frontier = set(generators)
    while frontier:
        fresh = set()
        for a in frontier:
            for b in generators:
                joined = a | b
                if joined != a:
                    joined = closure_mask(g, joined)
                    if joined not in found:
                        fresh.add(joined)
        found |= fresh
        frontier = fresh
    return sorted(found)


def enumerate_hsat(g: Graph, allow_lattice: bool = True) -> list[frozenset[str]]:
    """All hereditary saturated subsets, sorted by (size, sorted members).

    Exhaustive over all subsets up to 20 vertices; beyond that the lattice
    is generated from singleton closures unless ``allow_lattice`` is off,
    in which case ``ThresholdError`` is raised.
    """
    sets = [g.names(m) for m in enumerate_hsat_masks(g, allow_lattice)]
    return sorted(sets, key=hsat_sort_key)
