"""Graph substrate: bit-matrix graphs, perfect matchings, alternating cycles.

Vertices are integers ``0..order-1``.  Adjacency is a tuple of row masks,
one int per vertex, bit ``v`` of ``rows[u]`` set iff ``u ~ v``.  Everything
is immutable after construction and all operations are pure functions, so
values can be shared freely across threads and worker processes.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple, Optional, Sequence

from . import _core
from ._core.cycles import alternating_cycle_first, alternating_cycles
from .errors import PreconditionError

DEFAULT_MATCHING_CAP = 10**6


def iter_bits(mask: int) -> Iterator[int]:
    """Indices of set bits, ascending."""
    while mask:
        bit = mask & -mask
        mask ^= bit
        yield bit.bit_length() - 1


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Edge(NamedTuple):
    """Unordered vertex pair, stored with u < v."""

    u: int
    v: int

    @classmethod
    def of(cls, a: int, b: int) -> "Edge":
        if a == b:
            raise ValueError(f"loop at vertex {a}")
        if a < 0 or b < 0:
            raise ValueError(f"negative vertex in edge ({a}, {b})")
        return cls(a, b) if a < b else cls(b, a)

    @property
    def mask(self) -> int:
        return (1 << self.u) | (1 << self.v)


@dataclass(frozen=True, slots=True)
class Graph:
    """Undirected simple graph as vertex count plus symmetric row masks."""

    order: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("negative order")
        if len(self.rows) != self.order:
            raise ValueError("row count does not match order")
        full = (1 << self.order) - 1
        for u, row in enumerate(self.rows):
            if row & ~full:
                raise ValueError(f"row {u} references a vertex out of range")
            if (row >> u) & 1:
                raise ValueError(f"loop at vertex {u}")
        for u in range(self.order):
            for v in iter_bits(self.rows[u]):
                if not (self.rows[v] >> u) & 1:
                    raise ValueError(f"asymmetric adjacency at ({u}, {v})")

    @classmethod
    def from_edges(cls, order: int, pairs: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * order
        for a, b in pairs:
            e = Edge.of(a, b)
            if e.v >= order:
                raise ValueError(f"vertex {e.v} out of range for order {order}")
            if (rows[e.u] >> e.v) & 1:
                raise ValueError(f"duplicate edge ({e.u}, {e.v})")
            rows[e.u] |= 1 << e.v
            rows[e.v] |= 1 << e.u
        return cls(order, tuple(rows))

    @classmethod
    def empty(cls, order: int) -> "Graph":
        return cls(order, (0,) * order)

    @property
    def full_mask(self) -> int:
        return (1 << self.order) - 1

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def neighbors(self, v: int) -> Iterator[int]:
        return iter_bits(self.rows[v])

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def edges(self) -> tuple[Edge, ...]:
        out = []
        for u in range(self.order):
            for v in iter_bits(self.rows[u] >> (u + 1)):
                out.append(Edge(u, u + 1 + v))
        return tuple(out)


@lru_cache(maxsize=256)
def _kernel_cached(rows: tuple[int, ...]):
    return _core.make_kernel(rows)


def _kernel(g: Graph):
    return _kernel_cached(g.rows)


@dataclass(frozen=True, slots=True)
class PerfectMatching:
    """Vertex-disjoint edges covering the whole host graph, canonically sorted."""

    edges: tuple[Edge, ...]

    def __post_init__(self):
        seen = 0
        last = -1
        for e in self.edges:
            if not isinstance(e, Edge) or e.u >= e.v:
                raise ValueError(f"non-canonical edge {e}")
            if e.u <= last:
                raise ValueError("edges not sorted by smaller endpoint")
            last = e.u
            if seen & e.mask:
                raise ValueError(f"edge {e} reuses a vertex")
            seen |= e.mask

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> "PerfectMatching":
        return cls(tuple(sorted(Edge.of(a, b) for a, b in pairs)))

    def __iter__(self) -> Iterator[Edge]:
        return iter(self.edges)

    def __len__(self) -> int:
        return len(self.edges)

    @property
    def cover_mask(self) -> int:
        m = 0
        for e in self.edges:
            m |= e.mask
        return m

    def mates(self, order: int) -> tuple[int, ...]:
        """Partner array: mates[v] is the vertex matched to v, -1 if none."""
        mate = [-1] * order
        for e in self.edges:
            mate[e.u] = e.v
            mate[e.v] = e.u
        return tuple(mate)

    def as_pairs(self) -> list[list[int]]:
        return [[e.u, e.v] for e in self.edges]


@dataclass(frozen=True, slots=True)
class AlternatingCycle:
    """Even cycle whose edges alternate between a matching and its complement.

    Stored as the vertex sequence in canonical rotation: the smallest vertex
    first, then its smaller cycle-neighbour.  Whether the first consecutive
    pair is the matching edge or the non-matching edge depends on the cycle.
    """

    vertices: tuple[int, ...]

    def __post_init__(self):
        k = len(self.vertices)
        if k < 4 or k % 2:
            raise ValueError("alternating cycle needs even length >= 4")
        if len(set(self.vertices)) != k:
            raise ValueError("cycle vertices must be distinct")

    @classmethod
    def canonical(cls, seq: Sequence[int]) -> "AlternatingCycle":
        seq = tuple(seq)
        i = seq.index(min(seq))
        rot = seq[i:] + seq[:i]
        if rot[-1] < rot[1]:
            rot = (rot[0],) + tuple(reversed(rot[1:]))
        return cls(rot)

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def mask(self) -> int:
        return mask_of(self.vertices)

    def pairs(self) -> list[Edge]:
        vs = self.vertices
        return [Edge.of(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]


def check_perfect_matching(g: Graph, m: PerfectMatching) -> None:
    """Raise PreconditionError unless m is a perfect matching of g."""
    if m.cover_mask != g.full_mask or 2 * len(m) != g.order:
        raise PreconditionError("matching does not cover every vertex")
    for e in m.edges:
        if not g.has_edge(e.u, e.v):
            raise PreconditionError(f"matching edge {e} is not in the graph")


def is_alternating_cycle(g: Graph, m: PerfectMatching, c: AlternatingCycle) -> bool:
    """True iff every cycle edge is in g and membership in m alternates."""
    pairs = c.pairs()
    if not all(g.has_edge(e.u, e.v) for e in pairs):
        return False
    m_set = set(m.edges)
    flags = [e in m_set for e in pairs]
    return all(flags[i] != flags[(i + 1) % len(flags)] for i in range(len(flags)))


# ---------------------------------------------------------------------------
# graph operations


def complement(g: Graph) -> Graph:
    full = g.full_mask
    rows = tuple((full ^ r) & ~(1 << u) for u, r in enumerate(g.rows))
    return Graph(g.order, rows)


def induced_subgraph(g: Graph, t: Iterable[int]) -> Graph:
    """Subgraph induced by t, relabeled 0..len(t)-1 in the order given."""
    verts = list(t)
    for v in verts:
        if not 0 <= v < g.order:
            raise ValueError(f"vertex {v} out of range")
    if len(set(verts)) != len(verts):
        raise ValueError("induced vertex set has repeats")
    index = {v: i for i, v in enumerate(verts)}
    rows = [0] * len(verts)
    for v, i in index.items():
        for w in iter_bits(g.rows[v]):
            j = index.get(w)
            if j is not None:
                rows[i] |= 1 << j
    return Graph(len(verts), tuple(rows))


def enumerate_perfect_matchings(
    g: Graph, cap: int | None = None
) -> tuple[PerfectMatching, ...]:
    """Every perfect matching exactly once, lexicographic on the edge list.

    Odd order yields the empty tuple; order zero yields the single empty
    matching.  Raises MatchingOverflowError past ``cap`` matchings.
    """
    if cap is None:
        cap = DEFAULT_MATCHING_CAP
    flats = _kernel(g).enumerate_pms(g.full_mask, cap)
    out = []
    for flat in flats:
        edges = tuple(Edge(flat[i], flat[i + 1]) for i in range(0, len(flat), 2))
        out.append(PerfectMatching(edges))
    return tuple(out)


def has_perfect_matching(g: Graph) -> bool:
    return _kernel(g).count2(g.full_mask) > 0


def find_alternating_cycle(
    g: Graph, m: PerfectMatching, alive: int | None = None
) -> Optional[AlternatingCycle]:
    """Some m-alternating cycle of g (restricted to ``alive``), or None.

    The first cycle in the deterministic search order is returned, so equal
    inputs give equal witnesses.
    """
    check_perfect_matching(g, m)
    if alive is None:
        alive = g.full_mask
    raw = alternating_cycle_first(g.rows, m.mates(g.order), alive)
    return None if raw is None else AlternatingCycle.canonical(raw)


def enumerate_alternating_cycles(
    g: Graph, m: PerfectMatching, cap: int | None = None
) -> tuple[AlternatingCycle, ...]:
    """All m-alternating cycles, canonicalized, sorted by (length, vertices).

    Raises CycleOverflowError when more than ``cap`` cycles exist.
    """
    check_perfect_matching(g, m)
    raws = alternating_cycles(g.rows, m.mates(g.order), g.full_mask, cap=cap)
    cyc = [AlternatingCycle.canonical(r) for r in raws]
    cyc.sort(key=lambda c: (len(c), c.vertices))
    return tuple(cyc)


def alternating_four_cycles(
    g: Graph, m: PerfectMatching
) -> tuple[AlternatingCycle, ...]:
    """All m-alternating 4-cycles, canonicalized and sorted.

    A 4-cycle alternating with m joins two matching edges either by the two
    "parallel" connectors or by the two "crossed" ones, so a pair scan over
    matching edges finds every witness.
    """
    out = []
    edges = m.edges
    for i in range(len(edges)):
        a, b = edges[i]
        for j in range(i + 1, len(edges)):
            c, d = edges[j]
            if g.has_edge(a, c) and g.has_edge(b, d):
                out.append(AlternatingCycle.canonical((a, c, d, b)))
            if g.has_edge(a, d) and g.has_edge(b, c):
                out.append(AlternatingCycle.canonical((a, d, c, b)))
    out.sort(key=lambda cy: cy.vertices)
    return tuple(out)


def apply_cycle(m: PerfectMatching, c: AlternatingCycle) -> PerfectMatching:
    """Symmetric difference of m with the cycle's edges; an involution."""
    m_set = set(m.edges)
    pairs = c.pairs()
    flags = [e in m_set for e in pairs]
    if not all(flags[i] != flags[(i + 1) % len(flags)] for i in range(len(flags))):
        raise PreconditionError("cycle does not alternate with the matching")
    swapped = (m_set - set(pairs)) | {e for e, f in zip(pairs, flags) if not f}
    return PerfectMatching(tuple(sorted(swapped)))


# ---------------------------------------------------------------------------
# connectivity and components


def components_masks(g: Graph, within: int | None = None) -> list[int]:
    """Connected components (as vertex masks) of the induced subgraph."""
    rows = g.rows
    rem = g.full_mask if within is None else within
    comps = []
    while rem:
        comp = rem & -rem
        frontier = comp
        while frontier:
            nxt = 0
            for u in iter_bits(frontier):
                nxt |= rows[u] & rem
            frontier = nxt & ~comp
            comp |= frontier
        comps.append(comp)
        rem &= ~comp
    return comps


def is_connected(g: Graph) -> bool:
    return g.order <= 1 or len(components_masks(g)) == 1


def odd_component_count(g: Graph, removed: Iterable[int]) -> int:
    """Number of odd-order components after deleting the given vertices."""
    rm = mask_of(removed)
    if rm & ~g.full_mask:
        raise ValueError("removed set references a vertex out of range")
    within = g.full_mask & ~rm
    return sum(1 for comp in components_masks(g, within) if comp.bit_count() & 1)


def is_bipartite(g: Graph) -> Optional[tuple[tuple[int, ...], tuple[int, ...]]]:
    """A bipartition (two sorted vertex tuples) or None."""
    color = [-1] * g.order
    for root in range(g.order):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in iter_bits(g.rows[u]):
                if color[v] == -1:
                    color[v] = color[u] ^ 1
                    queue.append(v)
                elif color[v] == color[u]:
                    return None
    side0 = tuple(v for v in range(g.order) if color[v] == 0)
    side1 = tuple(v for v in range(g.order) if color[v] == 1)
    return side0, side1


def _max_vertex_disjoint_paths(g: Graph, s: int, t: int) -> int:
    """Internally vertex-disjoint s-t paths via unit-capacity flow with
    vertex splitting (in-copy 2v, out-copy 2v+1)."""
    n = g.order
    cap: dict[tuple[int, int], int] = {}

    def add(u, v, c):
        cap[(u, v)] = cap.get((u, v), 0) + c
        cap.setdefault((v, u), 0)

    big = n + 1
    for v in range(n):
        add(2 * v, 2 * v + 1, big if v in (s, t) else 1)
    for u in range(n):
        for v in iter_bits(g.rows[u]):
            add(2 * u + 1, 2 * v, 1)
    adj: dict[int, list[int]] = {}
    for (u, v) in cap:
        adj.setdefault(u, []).append(v)
    for lst in adj.values():
        lst.sort()

    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while True:
        prev = {source: source}
        queue = deque([source])
        while queue and sink not in prev:
            u = queue.popleft()
            for v in adj.get(u, ()):  # deterministic order
                if v not in prev and cap[(u, v)] > 0:
                    prev[v] = u
                    queue.append(v)
        if sink not in prev:
            return flow
        v = sink
        while v != source:
            u = prev[v]
            cap[(u, v)] -= 1
            cap[(v, u)] += 1
            v = u
        flow += 1


def vertex_connectivity(g: Graph) -> int:
    """Exact vertex connectivity; order-1 for complete graphs, 0 when
    disconnected or order <= 1.  Menger: minimum over non-adjacent pairs of
    the maximum number of vertex-disjoint paths."""
    n = g.order
    if n <= 1:
        return 0
    best = n - 1
    seen_pair = False
    for u in range(n):
        for v in range(u + 1, n):
            if g.has_edge(u, v):
                continue
            seen_pair = True
            k = _max_vertex_disjoint_paths(g, u, v)
            if k < best:
                best = k
                if best == 0:
                    return 0
    return best if seen_pair else n - 1
