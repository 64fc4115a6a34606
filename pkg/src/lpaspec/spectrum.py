"""Prime spectrum of L_K(E) from graph data, and the prime / primitive /
simple decisions.

Primes come in two families. Graded primes are I(H) with E0 \\ H a
maximal tail. Non-graded primes are indexed by a tau-tail M together with
a nonzero prime P of K[x, x^-1]; for each M the quotient F = E/(E0 \\ M)
has a unique exitless cycle mu, and the ideal generated by the closure
of mu0 in F is a matrix ring over K[x, x^-1] whose size is reported.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence, Union

from .constructions import DerivedGraph, outside_cycle_feeds, quotient_graph
from .cycles import (
    Cycle,
    comet_matrix_size,
    count_paths_into,
    enumerate_cycles,
    exitless_cycles,
    is_comet,
)
from .errors import InvariantViolation
from .graph import Graph
from .hsat import closure, enumerate_hsat
from .laurent import FieldSpec, LaurentPrime, enumerate_laurent_primes
from .tails import MaximalTail, TailKind, enumerate_maximal_tails, mt3_witness

INFINITE = "infinite"


@dataclass(frozen=True)
class NonGradedStructure:
    quotient: DerivedGraph
    mu: Cycle
    mu_closure: frozenset[str]
    matrix_size: Union[int, str]


@dataclass(frozen=True)
class Graded:
    H: frozenset[str]
    tail: MaximalTail

    kind = "graded"


@dataclass(frozen=True)
class NonGraded:
    tail: MaximalTail
    prime: LaurentPrime
    structure: NonGradedStructure

    kind = "nongraded"


@dataclass(frozen=True)
class NonGradedFamily:
    """All non-graded primes over one tau-tail when Spec* is infinite (K = Q)."""

    tail: MaximalTail
    field: FieldSpec
    structure: NonGradedStructure

    kind = "nongraded"


PrimeIdealDescriptor = Union[Graded, NonGraded, NonGradedFamily]


def graded_primes(g: Graph, allow_lattice: bool = True) -> list[Graded]:
    full = frozenset(g.vertices)
    return [Graded(full - t.members, t) for t in enumerate_maximal_tails(g, allow_lattice)]


def nongraded_structure(g: Graph, tail: MaximalTail) -> NonGradedStructure:
    if tail.kind is not TailKind.TAU:
        raise InvariantViolation("non-graded primes need a tau tail")
    H = frozenset(g.vertices) - tail.members
    F = quotient_graph(g, H)
    candidates = exitless_cycles(F.graph)
    if len(candidates) != 1 or candidates[0] != tail.cycle:
        raise InvariantViolation(
            f"quotient by {sorted(H)} has {len(candidates)} exitless cycles; expected one"
        )
    mu = candidates[0]
    mu_closure = closure(F.graph, mu.vertices)
    if outside_cycle_feeds(F.graph, mu_closure):
        size: Union[int, str] = INFINITE
    else:
        size = count_paths_into(F.graph, mu.vertices[0], mu.edges)
        if size is None:
            raise InvariantViolation("finite entering-path set but unbounded path count")
    return NonGradedStructure(F, mu, mu_closure, size)


def spectrum(
    g: Graph,
    k: FieldSpec,
    max_degree: int = 1,
    primes: Optional[Sequence[LaurentPrime]] = None,
    allow_lattice: bool = True,
) -> list[PrimeIdealDescriptor]:
    """Every prime ideal of L_K(E): graded ones first, then non-graded.

    Over GF(p) the Laurent primes are enumerated up to ``max_degree``
    unless ``primes`` is given. Over Q without explicit ``primes`` each
    tau-tail contributes one symbolic :class:`NonGradedFamily`.
    """
    graded = graded_primes(g, allow_lattice)
    out: list[PrimeIdealDescriptor] = list(graded)
    tau = [d.tail for d in graded if d.tail.kind is TailKind.TAU]
    if not tau:
        return out
    if primes is None and k.is_rational:
        return out + [NonGradedFamily(t, k, nongraded_structure(g, t)) for t in tau]
    if primes is None:
        primes = enumerate_laurent_primes(k, max_degree)
    ordered = sorted(primes, key=LaurentPrime.sort_key)
    for t in tau:
        structure = nongraded_structure(g, t)
        out.extend(NonGraded(t, P, structure) for P in ordered)
    return out


# -- decisions -------------------------------------------------------------


@dataclass(frozen=True)
class Decision:
    holds: bool
    witness: Optional[dict] = None

    def __bool__(self):
        return self.holds

    def describe(self) -> str:
        return describe_witness(self.witness)


def describe_witness(w: Optional[dict]) -> str:
    if w is None:
        return ""
    kind = w["kind"]
    if kind == "exitless_cycle":
        return "exitless cycle (" + " ".join(w["cycle"]) + ")"
    if kind == "mt3_pair":
        v, u = w["pair"]
        return f"no common successor for {v} and {u}"
    if kind == "proper_hsat":
        return "proper hereditary saturated set {" + ",".join(w["H"]) + "}"
    if kind == "empty_graph":
        return "graph has no vertices"
    return str(w)


def _mt3_decision(g: Graph) -> Optional[dict]:
    if not g.vertices:
        return {"kind": "empty_graph"}
    pair = mt3_witness(g, g.vertices)
    return None if pair is None else {"kind": "mt3_pair", "pair": list(pair)}


def _exitless_witness(g: Graph) -> Optional[dict]:
    bad = exitless_cycles(g)
    return None if not bad else {"kind": "exitless_cycle", "cycle": list(bad[0].edges)}


def is_prime_algebra(g: Graph) -> Decision:
    """Prime iff E0 itself satisfies MT3."""
    w = _mt3_decision(g)
    return Decision(w is None, w)


def is_primitive_algebra(g: Graph) -> Decision:
    """Primitive iff Condition (L) and MT3 hold."""
    w = _exitless_witness(g) or _mt3_decision(g)
    return Decision(w is None, w)


def is_simple_algebra(g: Graph) -> Decision:
    """Simple iff Condition (L) holds and H_E is just {empty, E0}."""
    w = _exitless_witness(g)
    if w is None and not g.vertices:
        w = {"kind": "empty_graph"}
    if w is None:
        full = frozenset(g.vertices)
        proper = [H for H in enumerate_hsat(g) if H and H != full]
        if proper:
            w = {"kind": "proper_hsat", "H": sorted(proper[0])}
    return Decision(w is None, w)


# -- recognition ----------------------------------------------------------


@dataclass(frozen=True)
class AlgebraDescriptor:
    tag: str
    n: Optional[int] = None
    witness: dict = field(default_factory=dict)

    def __str__(self):
        names = {
            "MatrixOverField": "M_{n}(K)",
            "LaurentRing": "K[x,x^-1]",
            "LeavittAlgebra": "L(1,{n})",
            "ToeplitzPattern": "Toeplitz algebra",
            "MatrixOverLaurent": "M_{n}(K[x,x^-1])",
            "Unrecognized": "unrecognized",
        }
        return names[self.tag].format(n=self.n)


def _line_order(g: Graph) -> Optional[list[str]]:
    n = len(g.vertices)
    if n == 0 or len(g.edges) != n - 1:
        return None
    if any(e.source == e.range for e in g.edges):
        return None
    starts = [v for v in g.vertices if not g.in_edges[v]]
    if len(starts) != 1:
        return None
    order = [starts[0]]
    while g.out_edges[order[-1]]:
        out = g.out_edges[order[-1]]
        if len(out) != 1 or len(g.in_edges[out[0].range]) != 1:
            return None
        order.append(out[0].range)
        if len(order) > n:
            return None
    return order if len(order) == n else None


def recognize_algebra(g: Graph) -> AlgebraDescriptor:
    """Match a handful of named graph shapes with known Leavitt path algebras."""
    order = _line_order(g)
    if order is not None:
        return AlgebraDescriptor("MatrixOverField", len(order), {"line": order})
    if len(g.vertices) == 1 and g.edges:
        loops = [e.name for e in g.edges]
        if len(loops) == 1:
            return AlgebraDescriptor("LaurentRing", None, {"loop": loops[0]})
        return AlgebraDescriptor("LeavittAlgebra", len(loops), {"loops": loops})
    if len(g.vertices) == 2 and len(g.edges) == 2:
        loops = [e for e in g.edges if e.source == e.range]
        others = [e for e in g.edges if e.source != e.range]
        if (
            len(loops) == 1
            and len(others) == 1
            and others[0].source == loops[0].source
            and not g.out_edges[others[0].range]
        ):
            return AlgebraDescriptor(
                "ToeplitzPattern", None, {"loop": loops[0].name, "exit": others[0].name}
            )
    if is_comet(g):
        mu = enumerate_cycles(g)[0]
        return AlgebraDescriptor(
            "MatrixOverLaurent", comet_matrix_size(g), {"cycle": list(mu.edges)}
        )
    return AlgebraDescriptor("Unrecognized")
