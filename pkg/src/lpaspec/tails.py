"""Maximal tails: the MT1-MT3 predicates and the gamma/tau split."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional

from .cycles import Cycle, enumerate_cycles, exits_within
from .errors import DomainError, InvariantViolation
from .graph import Graph
from .hsat import enumerate_hsat_masks


class TailKind(str, enum.Enum):
    GAMMA = "gamma"
    TAU = "tau"


class MTCheck(NamedTuple):
    mt1: bool
    mt2: bool
    mt3: bool

    @property
    def ok(self):
        return self.mt1 and self.mt2 and self.mt3


@dataclass(frozen=True)
class MaximalTail:
    members: frozenset[str]
    kind: TailKind
    no_exit_cycles: tuple[Cycle, ...]

    @property
    def sorted_members(self) -> list[str]:
        return sorted(self.members)

    @property
    def cycle(self) -> Optional[Cycle]:
        return self.no_exit_cycles[0] if self.no_exit_cycles else None


def _mt1(g: Graph, m: int) -> bool:
    # every vertex reaching into M lies in M
    return all((m >> i) & 1 or not r & m for i, r in enumerate(g.reach_masks))


def _mt2(g: Graph, m: int) -> bool:
    succ = g.succ_masks
    return all(not (m >> i) & 1 or not s or s & m for i, s in enumerate(succ))


def mt3_witness(g: Graph, M: Iterable[str]) -> Optional[tuple[str, str]]:
    """A pair in M with no common successor in M, or None if MT3 holds.

    The common successor is searched inside M while reachability is taken
    in the whole graph.
    """
    m = g.mask(M)
    reach = g.reach_masks
    members = sorted(M)
    for a, v in enumerate(members):
        rv = reach[g.index[v]] & m
        for w in members[a + 1:]:
            if not rv & reach[g.index[w]]:
                return (v, w)
    return None


def check_mt(g: Graph, M: Iterable[str]) -> MTCheck:
    M = frozenset(M)
    m = g.mask(M)
    return MTCheck(_mt1(g, m), _mt2(g, m), mt3_witness(g, M) is None)


def tail_sort_key(members: Iterable[str]):
    ordered = sorted(members)
    return (-len(ordered), ordered)


def _no_exit_cycles(g: Graph, members: frozenset[str], cycles) -> tuple[Cycle, ...]:
    return tuple(
        c for c in cycles if c.vertex_set <= members and not exits_within(g, c, members)
    )


def _build_tail(g: Graph, members: frozenset[str], cycles) -> MaximalTail:
    bad = _no_exit_cycles(g, members, cycles)
    if len(bad) > 1:
        raise InvariantViolation(
            f"tail {sorted(members)} has {len(bad)} cycles without exits in it"
        )
    return MaximalTail(members, TailKind.TAU if bad else TailKind.GAMMA, bad)


def enumerate_maximal_tails(g: Graph, allow_lattice: bool = True) -> list[MaximalTail]:
    """All maximal tails, largest first, then by sorted members.

    Complements of hereditary saturated sets are exactly the sets with
    MT1 and MT2, so only MT3 is checked here.
    """
    full = g.full_mask
    cycles = enumerate_cycles(g)
    tails = []
    for h in enumerate_hsat_masks(g, allow_lattice):
        m = full & ~h
        if not m:
            continue
        members = g.names(m)
        if mt3_witness(g, members) is None:
            tails.append(_build_tail(g, members, cycles))
    tails.sort(key=lambda t: tail_sort_key(t.members))
    return tails


def tail_kind(g: Graph, M: Iterable[str]) -> TailKind:
    M = frozenset(M)
    if not M or not check_mt(g, M).ok:
        raise DomainError(f"{sorted(M)} is not a maximal tail")
    return _build_tail(g, M, enumerate_cycles(g)).kind


def make_tail(g: Graph, M: Iterable[str]) -> MaximalTail:
    M = frozenset(M)
    if not M or not check_mt(g, M).ok:
        raise DomainError(f"{sorted(M)} is not a maximal tail")
    return _build_tail(g, M, enumerate_cycles(g))
