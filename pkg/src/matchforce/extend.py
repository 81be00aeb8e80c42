"""Matching extendability predicates and deficiency witnesses.

The induced-subgraph matching counts all run through the host graph's
kernel, so deleting vertices never copies the graph: factor-critical,
bicritical and extendability checks are all mask manipulations.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .errors import PreconditionError
from .graph import (
    Edge,
    Graph,
    PerfectMatching,
    _kernel,
    components_masks,
    enumerate_perfect_matchings,
    is_connected,
    iter_bits,
    mask_of,
    vertex_connectivity,
)
from .structure import (
    has_max_forcing_n_minus_1,
    is_knn_plus,
    pairwise_alternating_condition,
)


@dataclass(frozen=True, slots=True)
class DeficiencyWitness:
    """Certificate that a graph is not l-extendable: a vertex set s whose
    induced subgraph holds l independent edges while g - s splits into
    |s| - 2l + 2 odd factor-critical components."""

    s: tuple[int, ...]
    independent_edges: tuple[Edge, ...]
    components: tuple[tuple[int, ...], ...]
    factor_critical: tuple[bool, ...]
    l: int


@dataclass(frozen=True, slots=True)
class NonTwoExtendableStructure:
    """Labeled matching certifying failure of 2-extendability.

    ``u_side[i]``-``v_side[i]`` is the i-th matching edge.  In case "i" the
    v side induces one triangle plus isolated vertices and the u side has
    two independent edges; in case "ii" the v side minus ``pivot`` is
    independent and the required edges meet the pivot pair.
    """

    case: str
    matching: PerfectMatching
    u_side: tuple[int, ...]
    v_side: tuple[int, ...]
    pivot: Optional[int]


def is_factor_critical(g: Graph) -> bool:
    """True iff the order is odd and every single-vertex deletion leaves a
    perfect matching (the one-vertex graph qualifies vacuously)."""
    if g.order % 2 == 0 or g.order < 1:
        return False
    kern = _kernel(g)
    full = g.full_mask
    return all(kern.count2(full ^ (1 << v)) > 0 for v in range(g.order))


def is_bicritical(g: Graph) -> bool:
    """True iff g has an edge and every two-vertex deletion leaves a
    perfect matching."""
    if g.edge_count() == 0 or g.order % 2:
        return False
    kern = _kernel(g)
    full = g.full_mask
    return all(
        kern.count2(full ^ (1 << u) ^ (1 << v)) > 0
        for u in range(g.order)
        for v in range(u + 1, g.order)
    )


def is_brick(g: Graph) -> bool:
    """3-connected and bicritical."""
    return is_bicritical(g) and vertex_connectivity(g) >= 3


def _matchings_of_size(g: Graph, size: int):
    """All matchings of exactly `size` edges, lexicographic on edge tuples."""
    edges = g.edges()

    def rec(start: int, used: int, picked: list[Edge]):
        if len(picked) == size:
            yield tuple(picked)
            return
        for i in range(start, len(edges)):
            e = edges[i]
            if e.mask & used:
                continue
            picked.append(e)
            yield from rec(i + 1, used | e.mask, picked)
            picked.pop()

    yield from rec(0, 0, [])


def is_l_extendable(g: Graph, l: int) -> bool:
    """True iff g has a perfect matching and every matching of size l is
    contained in one.  Requires a connected graph of order >= 2l + 2."""
    if l < 0:
        raise PreconditionError("extendability level must be non-negative")
    if g.order < 2 * l + 2:
        raise PreconditionError(f"order {g.order} too small for {l}-extendability")
    if not is_connected(g):
        raise PreconditionError("extendability is defined for connected graphs")
    kern = _kernel(g)
    full = g.full_mask
    if kern.count2(full) == 0:
        return False
    if l == 0:
        return True
    for matching in _matchings_of_size(g, l):
        removed = 0
        for e in matching:
            removed |= e.mask
        if kern.count2(full ^ removed) == 0:
            return False
    return True


def _induced_matching_number_at_least(g: Graph, s_mask: int, l: int) -> bool:
    """Whether the subgraph induced by s_mask has l independent edges."""

    def rec(avail: int, need: int) -> bool:
        if need == 0:
            return True
        if avail.bit_count() < 2 * need:
            return False
        v_bit = avail & -avail
        v = v_bit.bit_length() - 1
        rest = avail ^ v_bit
        for u in iter_bits(g.rows[v] & rest):
            if rec(rest ^ (1 << u), need - 1):
                return True
        return rec(rest, need)

    return rec(s_mask, l)


def _first_independent_edges(g: Graph, s_mask: int, l: int) -> tuple[Edge, ...]:
    """Lexicographically first l disjoint edges inside the induced subgraph."""
    edges = [e for e in g.edges() if (s_mask >> e.u) & 1 and (s_mask >> e.v) & 1]
    for combo in combinations(edges, l):
        used = 0
        ok = True
        for e in combo:
            if e.mask & used:
                ok = False
                break
            used |= e.mask
        if ok:
            return tuple(combo)
    raise AssertionError("independent edge set vanished between checks")


def _component_factor_critical(g: Graph, comp_mask: int) -> bool:
    kern = _kernel(g)
    if comp_mask.bit_count() % 2 == 0:
        return False
    return all(kern.count2(comp_mask ^ (1 << v)) > 0 for v in iter_bits(comp_mask))


def deficiency_witness(g: Graph, l: int) -> Optional[DeficiencyWitness]:
    """Witness that an (l-1)-extendable graph is not l-extendable, or None.

    Searches vertex sets by size then lexicographic order, so the witness
    is deterministic and small.
    """
    if l < 1:
        raise PreconditionError("deficiency level must be at least 1")
    if g.order < 2 * l + 2:
        raise PreconditionError(f"order {g.order} too small for level {l}")
    if not is_l_extendable(g, l - 1):
        raise PreconditionError(f"graph is not {l - 1}-extendable")
    if is_l_extendable(g, l):
        return None
    full = g.full_mask
    for size in range(2 * l, g.order + 1):
        for combo in combinations(range(g.order), size):
            s_mask = mask_of(combo)
            if not _induced_matching_number_at_least(g, s_mask, l):
                continue
            comps = components_masks(g, full & ~s_mask)
            odd = sum(1 for c in comps if c.bit_count() & 1)
            if odd != size - 2 * l + 2 or odd != len(comps):
                continue
            if not all(_component_factor_critical(g, c) for c in comps):
                continue
            return DeficiencyWitness(
                tuple(combo),
                _first_independent_edges(g, s_mask, l),
                tuple(tuple(iter_bits(c)) for c in comps),
                (True,) * len(comps),
                l,
            )
    raise AssertionError("no witness found although the graph is not l-extendable")


def _v_side_is_triangle_plus_isolated(g: Graph, v_side: tuple[int, ...]) -> bool:
    inside = [
        (x, y)
        for i, x in enumerate(v_side)
        for y in v_side[i + 1 :]
        if g.has_edge(x, y)
    ]
    if len(inside) != 3:
        return False
    verts = {v for e in inside for v in e}
    return len(verts) == 3


def non_2_extendable_structure(g: Graph) -> Optional[NonTwoExtendableStructure]:
    """Structural certificate for non-2-extendability, per the
    characterization of graphs with maximal forcing number.

    Preconditions: maximal forcing number is attained, the graph is outside
    the one-sided-extras family, and the matching size is at least 3.
    Returns None exactly when the graph is 2-extendable.
    """
    n = g.order // 2
    if g.order % 2 or n < 3:
        raise PreconditionError("structure search needs even order >= 6")
    if is_knn_plus(g) is not None:
        raise PreconditionError("graph lies in the one-sided-extras family")
    first = has_max_forcing_n_minus_1(g)
    if first is None:
        raise PreconditionError("maximal forcing number is not attained")
    if is_l_extendable(g, 2):
        return None

    for m in enumerate_perfect_matchings(g):
        ok, _ = pairwise_alternating_condition(g, m)
        if not ok:
            continue
        edges = m.edges
        for orient in range(1 << n):
            u_side = tuple(
                e.v if (orient >> i) & 1 else e.u for i, e in enumerate(edges)
            )
            v_side = tuple(
                e.u if (orient >> i) & 1 else e.v for i, e in enumerate(edges)
            )
            if (
                n >= 4
                and _v_side_is_triangle_plus_isolated(g, v_side)
                and _induced_matching_number_at_least(g, mask_of(u_side), 2)
            ):
                return NonTwoExtendableStructure("i", m, u_side, v_side, None)
            for pivot in range(n):
                v_rest = [v_side[i] for i in range(n) if i != pivot]
                if any(
                    g.has_edge(x, y)
                    for i, x in enumerate(v_rest)
                    for y in v_rest[i + 1 :]
                ):
                    continue
                s_mask = mask_of(u_side) | (1 << v_side[pivot])
                if not _induced_matching_number_at_least(g, s_mask, 2):
                    continue
                if not any(g.has_edge(x, v_side[pivot]) for x in v_rest):
                    continue
                if not any(g.has_edge(x, u_side[pivot]) for x in v_rest):
                    continue
                return NonTwoExtendableStructure("ii", m, u_side, v_side, pivot)
    raise AssertionError(
        "graph is not 2-extendable but no structural labeling was found"
    )
