"""JSON report assembly. Text output is always rendered from these dicts."""

from __future__ import annotations

import json
from importlib import resources
from typing import Optional, Sequence

from .cycles import condition_L
from .graph import Graph
from .laurent import FieldSpec, LaurentPrime
from .spectrum import (
    Graded,
    NonGraded,
    NonGradedFamily,
    is_prime_algebra,
    is_primitive_algebra,
    is_simple_algebra,
    recognize_algebra,
    spectrum,
)
from .tails import MaximalTail


def graph_json(g: Graph) -> dict:
    return {
        "vertices": list(g.vertices),
        "edges": [{"name": e.name, "source": e.source, "range": e.range} for e in g.edges],
    }


def tail_json(t: MaximalTail) -> dict:
    return {
        "members": t.sorted_members,
        "kind": t.kind.value,
        "no_exit_cycle": list(t.cycle.edges) if t.cycle else None,
    }


def _structure_json(s) -> dict:
    return {
        "mu": list(s.mu.edges),
        "mu_closure": sorted(s.mu_closure),
        "matrix_size": s.matrix_size,
    }


def descriptor_json(d) -> dict:
    if isinstance(d, Graded):
        return {"type": "graded", "H": sorted(d.H), "tail": d.tail.sorted_members}
    if isinstance(d, NonGraded):
        return {
            "type": "nongraded",
            "tail": d.tail.sorted_members,
            "polynomial": str(d.prime),
            **_structure_json(d.structure),
        }
    if isinstance(d, NonGradedFamily):
        return {
            "type": "nongraded",
            "tail": d.tail.sorted_members,
            "polynomial": f"Spec({d.field}[x,x^-1])* (infinite)",
            "symbolic": True,
            **_structure_json(d.structure),
        }
    raise TypeError(f"not a prime descriptor: {d!r}")


def decisions(g: Graph) -> dict:
    return {
        "prime": is_prime_algebra(g),
        "primitive": is_primitive_algebra(g),
        "simple": is_simple_algebra(g),
    }


def build_report(
    g: Graph,
    k: FieldSpec,
    max_degree: int = 1,
    primes: Optional[Sequence[LaurentPrime]] = None,
) -> dict:
    decided = decisions(g)
    spec = spectrum(g, k, max_degree, primes)
    tails = [d.tail for d in spec if isinstance(d, Graded)]
    algebra = recognize_algebra(g)
    return {
        "graph": graph_json(g),
        "field": str(k),
        "max_degree": max_degree,
        "prime": decided["prime"].holds,
        "primitive": decided["primitive"].holds,
        "simple": decided["simple"].holds,
        "witnesses": {name: dec.witness for name, dec in decided.items()},
        "condition_L": condition_L(g),
        "maximal_tails": [tail_json(t) for t in tails],
        "spectrum": [descriptor_json(d) for d in spec],
        "recognized": {
            "tag": algebra.tag,
            "n": algebra.n,
            "name": str(algebra),
            "witness": algebra.witness,
        },
    }


def report_schema() -> dict:
    text = resources.files("lpaspec").joinpath("report.schema.json").read_text("utf-8")
    return json.loads(text)
