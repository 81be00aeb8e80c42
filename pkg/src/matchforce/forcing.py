"""Exact forcing numbers, forcing sets, cycle packing and forcing spectra.

A subset S of a perfect matching M forces M iff the graph left after
deleting V(S) has no M-alternating cycle, equivalently iff it has exactly
one perfect matching.  The solver scans candidate subsets by cardinality,
squeezed between a disjoint-4-cycle packing lower bound and a greedy upper
bound, with every forcing check answered by the memoized matching-count
kernel.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from ._core.cycles import alternating_cycle_first
from .errors import CycleOverflowError, NoPerfectMatchingError, PreconditionError
from .graph import (
    AlternatingCycle,
    Edge,
    Graph,
    PerfectMatching,
    _kernel,
    alternating_four_cycles,
    check_perfect_matching,
    enumerate_alternating_cycles,
    enumerate_perfect_matchings,
)

DEFAULT_CYCLE_CAP = 10**5


@dataclass(frozen=True, slots=True)
class ForcingCertificate:
    """Optimal forcing set for one matching, with search bookkeeping.

    ``witness_set`` is the lexicographically first optimal set when the
    subset scan found it, or the greedy set when the greedy upper bound was
    already optimal.  ``nodes_explored`` counts candidate sets tested by the
    scan; ``lower_bound_used`` is the disjoint-4-cycle packing bound the
    scan started from.
    """

    matching: PerfectMatching
    optimum: int
    witness_set: tuple[Edge, ...]
    lower_bound_used: int
    nodes_explored: int


@dataclass(frozen=True, slots=True)
class CyclePacking:
    """Maximum number of vertex-disjoint alternating cycles found.

    ``exact`` is False when cycle enumeration overflowed its cap and the
    value is only the 4-cycle packing lower bound.
    """

    value: int
    exact: bool


@dataclass(frozen=True)
class SpectrumReport:
    """Forcing numbers of every perfect matching of one graph."""

    order: int
    per_matching: dict[PerfectMatching, int]
    spectrum: tuple[int, ...] = field(init=False)
    min_forcing: int = field(init=False)
    max_forcing: int = field(init=False)
    continuous: bool = field(init=False)

    def __post_init__(self):
        if not self.per_matching:
            raise ValueError("spectrum report needs at least one matching")
        values = sorted(set(self.per_matching.values()))
        object.__setattr__(self, "spectrum", tuple(values))
        object.__setattr__(self, "min_forcing", values[0])
        object.__setattr__(self, "max_forcing", values[-1])
        object.__setattr__(
            self, "continuous", values == list(range(values[0], values[-1] + 1))
        )

    @property
    def matching_count(self) -> int:
        return len(self.per_matching)


def _edge_subset_of(m: PerfectMatching, s) -> tuple[Edge, ...]:
    m_set = set(m.edges)
    out = []
    for item in s:
        e = item if isinstance(item, Edge) else Edge.of(*item)
        if e not in m_set:
            raise PreconditionError(f"edge {e} is not in the matching")
        out.append(e)
    if len(set(out)) != len(out):
        raise PreconditionError("forcing-set candidate repeats an edge")
    return tuple(sorted(out))


def is_forcing_set(
    g: Graph, m: PerfectMatching, s
) -> tuple[bool, Optional[AlternatingCycle]]:
    """Whether s (a subset of m) forces m; when it does not, also return an
    alternating cycle avoiding V(s) as the counterexample."""
    check_perfect_matching(g, m)
    edges = _edge_subset_of(m, s)
    removed = 0
    for e in edges:
        removed |= e.mask
    alive = g.full_mask & ~removed
    if _kernel(g).count2(alive) <= 1:
        return True, None
    raw = alternating_cycle_first(g.rows, m.mates(g.order), alive)
    return False, AlternatingCycle.canonical(raw)


def _four_cycle_triples(g: Graph, m: PerfectMatching) -> list[tuple[int, int, int]]:
    """Alternating 4-cycles as (vertex mask, edge index, edge index),
    pair-scan order.  Each 4-cycle joins exactly two matching edges, either
    by the parallel connectors or by the crossed ones."""
    out = []
    edges = m.edges
    for i in range(len(edges)):
        a, b = edges[i]
        for j in range(i + 1, len(edges)):
            c, d = edges[j]
            vm = (1 << a) | (1 << b) | (1 << c) | (1 << d)
            if g.has_edge(a, c) and g.has_edge(b, d):
                out.append((vm, i, j))
            if g.has_edge(a, d) and g.has_edge(b, c):
                out.append((vm, i, j))
    return out


def _greedy_four_cycle_packing(triples) -> int:
    used = 0
    count = 0
    for vm, _i, _j in triples:
        if not (vm & used):
            used |= vm
            count += 1
    return count


def _greedy_forcing_set(g, m, kern, edge_masks, triples) -> list[int]:
    """Greedy forcing set as edge indices: while some alternating cycle
    survives, take the matching edge lying on the most live 4-cycles (ties
    to the lowest index); with no live 4-cycles left, fall back to the
    lowest matching edge on a witness cycle."""
    vert_edge = {}
    for idx, e in enumerate(m.edges):
        vert_edge[e.u] = idx
        vert_edge[e.v] = idx
    mates = m.mates(g.order)
    removed = 0
    chosen: list[int] = []
    while kern.count2(g.full_mask & ~removed) > 1:
        counts = [0] * len(edge_masks)
        live_any = False
        for vm, i, j in triples:
            if not (vm & removed):
                live_any = True
                counts[i] += 1
                counts[j] += 1
        if live_any:
            pick = max(range(len(counts)), key=lambda i: (counts[i], -i))
        else:
            raw = alternating_cycle_first(g.rows, mates, g.full_mask & ~removed)
            pick = min(vert_edge[v] for v in raw)
        chosen.append(pick)
        removed |= edge_masks[pick]
    return chosen


def forcing_number(g: Graph, m: PerfectMatching) -> ForcingCertificate:
    """Exact minimum forcing set size for m, with a witness set.

    Candidate subsets are scanned lexicographically within each cardinality,
    cardinalities ascending from the 4-cycle packing bound; the scan stops
    early when it reaches the greedy upper bound.
    """
    check_perfect_matching(g, m)
    kern = _kernel(g)
    edge_masks = [e.mask for e in m.edges]
    triples = _four_cycle_triples(g, m)
    lower = _greedy_four_cycle_packing(triples)
    greedy = _greedy_forcing_set(g, m, kern, edge_masks, triples)
    upper = len(greedy)
    optimum = upper
    witness_idx: tuple[int, ...] = tuple(sorted(greedy))
    nodes = 0
    for size in range(lower, upper):
        found, tested = kern.forcing_scan(g.full_mask, edge_masks, size)
        nodes += tested
        if found is not None:
            optimum = size
            witness_idx = found
            break
    witness = tuple(m.edges[i] for i in witness_idx)
    return ForcingCertificate(m, optimum, witness, lower, nodes)


def _max_disjoint(masks: list[int]) -> int:
    best = 0

    def rec(cands: list[int], count: int) -> None:
        nonlocal best
        if count > best:
            best = count
        for i, cm in enumerate(cands):
            if count + len(cands) - i <= best:
                break
            rec([x for x in cands[i + 1 :] if not (x & cm)], count + 1)

    rec(masks, 0)
    return best


def cycle_packing(
    g: Graph, m: PerfectMatching, cap: int | None = None
) -> CyclePacking:
    """Maximum vertex-disjoint family of m-alternating cycles.

    Exact branch and bound over the full cycle list; when that list would
    exceed ``cap`` the packing is done over 4-cycles only and flagged as a
    lower bound.
    """
    if cap is None:
        cap = DEFAULT_CYCLE_CAP
    try:
        cycles = enumerate_alternating_cycles(g, m, cap=cap)
        exact = True
    except CycleOverflowError:
        cycles = alternating_four_cycles(g, m)
        exact = False
    return CyclePacking(_max_disjoint([c.mask for c in cycles]), exact)


def cycle_packing_number(g: Graph, m: PerfectMatching, cap: int | None = None) -> int:
    return cycle_packing(g, m, cap).value


def forcing_profile(g: Graph, matching_cap: int | None = None) -> SpectrumReport:
    """Forcing number of every perfect matching, in canonical matching order."""
    matchings = enumerate_perfect_matchings(g, cap=matching_cap)
    if not matchings:
        raise NoPerfectMatchingError("graph has no perfect matching")
    per = {m: forcing_number(g, m).optimum for m in matchings}
    return SpectrumReport(g.order, per)
