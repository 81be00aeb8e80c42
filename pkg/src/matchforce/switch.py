"""Matching 2-switch dynamics.

Nodes of the switch graph are the perfect matchings of a host graph;
two matchings are adjacent when they differ by one alternating 4-cycle.
Several distinct 4-cycles can realize the same transition, so the graph is
kept simple and the realizing cycles ride along as edge annotations.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Optional

from .errors import PreconditionError
from .forcing import SpectrumReport, forcing_profile
from .graph import (
    AlternatingCycle,
    Graph,
    PerfectMatching,
    alternating_four_cycles,
    apply_cycle,
    check_perfect_matching,
    is_alternating_cycle,
)


def alternating_4_cycles(
    g: Graph, m: PerfectMatching
) -> tuple[AlternatingCycle, ...]:
    """All m-alternating 4-cycles, canonical rotation, sorted."""
    check_perfect_matching(g, m)
    return alternating_four_cycles(g, m)


def two_switch(
    g: Graph, m: PerfectMatching, c: AlternatingCycle
) -> PerfectMatching:
    """Exchange the matching along an alternating 4-cycle (an involution)."""
    check_perfect_matching(g, m)
    if len(c) != 4 or not is_alternating_cycle(g, m, c):
        raise PreconditionError("not an alternating 4-cycle for this matching")
    return apply_cycle(m, c)


@dataclass(frozen=True)
class SwitchGraph:
    """Transition graph over all perfect matchings of one host graph."""

    nodes: tuple[PerfectMatching, ...]
    forcing: tuple[int, ...]
    adjacency: tuple[tuple[int, ...], ...]
    edge_cycles: dict[tuple[int, int], tuple[AlternatingCycle, ...]]

    @cached_property
    def node_index(self) -> dict[PerfectMatching, int]:
        return {m: i for i, m in enumerate(self.nodes)}

    def edges(self) -> list[tuple[int, int]]:
        return sorted(self.edge_cycles)

    def component_masks(self) -> list[int]:
        seen = 0
        comps = []
        for root in range(len(self.nodes)):
            if (seen >> root) & 1:
                continue
            comp = 1 << root
            queue = deque([root])
            while queue:
                u = queue.popleft()
                for v in self.adjacency[u]:
                    if not (comp >> v) & 1:
                        comp |= 1 << v
                        queue.append(v)
            seen |= comp
            comps.append(comp)
        return comps


@dataclass(frozen=True, slots=True)
class SwitchPath:
    """Matching sequence where each step applies the recorded 4-cycle."""

    matchings: tuple[PerfectMatching, ...]
    cycles: tuple[AlternatingCycle, ...]

    def __post_init__(self):
        if len(self.matchings) != len(self.cycles) + 1:
            raise ValueError("path needs one more matching than cycles")

    def __len__(self) -> int:
        return len(self.cycles)


@dataclass(frozen=True, slots=True)
class ContinuityReport:
    """Spectrum continuity facts for one graph.

    ``applicable`` marks graphs whose maximum forcing number is maximal;
    ``reach_max`` states that every matching can be switched into one of
    maximal forcing number, which is the mechanism behind continuity.
    """

    applicable: bool
    spectrum_continuous: bool
    reach_max: bool


def build_switch_graph(
    g: Graph,
    matching_cap: int | None = None,
    profile: SpectrumReport | None = None,
) -> SwitchGraph:
    """Full switch graph with forcing numbers annotated per node."""
    if profile is None:
        profile = forcing_profile(g, matching_cap=matching_cap)
    nodes = tuple(profile.per_matching)
    forcing = tuple(profile.per_matching[m] for m in nodes)
    index = {m: i for i, m in enumerate(nodes)}
    neighbor_sets: list[set[int]] = [set() for _ in nodes]
    edge_cycles: dict[tuple[int, int], set[AlternatingCycle]] = {}
    for i, m in enumerate(nodes):
        for cyc in alternating_four_cycles(g, m):
            j = index[apply_cycle(m, cyc)]
            key = (i, j) if i < j else (j, i)
            neighbor_sets[i].add(j)
            edge_cycles.setdefault(key, set()).add(cyc)
    adjacency = tuple(tuple(sorted(s)) for s in neighbor_sets)
    cycles_sorted = {
        key: tuple(sorted(v, key=lambda c: c.vertices))
        for key, v in sorted(edge_cycles.items())
    }
    return SwitchGraph(nodes, forcing, adjacency, cycles_sorted)


def switch_path(
    sg: SwitchGraph, src: PerfectMatching, dst: PerfectMatching
) -> Optional[SwitchPath]:
    """Shortest switch path from src to dst, BFS with canonical node order
    breaking ties; None when they lie in different components."""
    try:
        a = sg.node_index[src]
        b = sg.node_index[dst]
    except KeyError:
        raise PreconditionError(
            "matching is not a node of the switch graph"
        ) from None
    if a == b:
        return SwitchPath((src,), ())
    prev: dict[int, int] = {a: a}
    queue = deque([a])
    while queue and b not in prev:
        u = queue.popleft()
        for v in sg.adjacency[u]:
            if v not in prev:
                prev[v] = u
                queue.append(v)
    if b not in prev:
        return None
    hops = [b]
    while hops[-1] != a:
        hops.append(prev[hops[-1]])
    hops.reverse()
    matchings = tuple(sg.nodes[i] for i in hops)
    cycles = []
    for u, v in zip(hops, hops[1:]):
        key = (u, v) if u < v else (v, u)
        cycles.append(sg.edge_cycles[key][0])
    return SwitchPath(matchings, tuple(cycles))


def verify_switch_bound(
    sg: SwitchGraph,
) -> tuple[bool, Optional[tuple[PerfectMatching, PerfectMatching]]]:
    """Check that adjacent matchings have forcing numbers within 1."""
    for i, j in sg.edges():
        if abs(sg.forcing[i] - sg.forcing[j]) > 1:
            return False, (sg.nodes[i], sg.nodes[j])
    return True, None


def verify_spectrum_continuity(
    g: Graph,
    matching_cap: int | None = None,
    profile: SpectrumReport | None = None,
    sg: SwitchGraph | None = None,
) -> ContinuityReport:
    """Continuity facts: spectrum interval-ness and reachability of a
    maximal-forcing matching from every matching."""
    if profile is None:
        profile = forcing_profile(g, matching_cap=matching_cap)
    if sg is None:
        sg = build_switch_graph(g, profile=profile)
    n = g.order // 2
    applicable = n >= 1 and profile.max_forcing == n - 1
    top = 0
    for i, f in enumerate(sg.forcing):
        if f == n - 1:
            top |= 1 << i
    reach = bool(sg.nodes) and all(c & top for c in sg.component_masks())
    return ContinuityReport(applicable, profile.continuous, reach)
