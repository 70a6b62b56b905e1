"""Immutable simple graphs on at most 64 vertices, stored as bitset rows.

Every mutator returns a fresh Graph; adjacency rows fit in one machine
word so neighborhood intersections are single AND operations.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import CapacityError, EdgeStateError

MAX_VERTICES = 64


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; adj[v] is the neighbor bitmask of v."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_VERTICES:
            raise CapacityError(f"order {self.n} outside 1..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match order")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"row {v} references vertices >= {self.n}")
            if (row >> v) & 1:
                raise ValueError(f"self-loop at vertex {v}")
        for v in range(self.n):
            for u in bits(self.adj[v]):
                if not (self.adj[u] >> v) & 1:
                    raise ValueError(f"asymmetric edge {v}-{u}")

    # -- queries ------------------------------------------------------

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> Iterator[int]:
        return bits(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in bits(self.adj[u] >> (u + 1)):
                yield (u, u + 1 + v)

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted((row.bit_count() for row in self.adj), reverse=True))

    def max_degree(self) -> int:
        return max(row.bit_count() for row in self.adj)

    # -- copy-on-write mutators ---------------------------------------

    def add_edge(self, u: int, v: int) -> "Graph":
        if u == v:
            raise EdgeStateError("cannot add a self-loop")
        if self.has_edge(u, v):
            raise EdgeStateError(f"edge {u}-{v} already present")
        rows = list(self.adj)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, tuple(rows))

    def remove_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise EdgeStateError(f"edge {u}-{v} not present")
        rows = list(self.adj)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self.n, tuple(rows))

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Subgraph induced by the given vertices, relabeled in sorted order."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        rows = [0] * len(keep)
        for v in keep:
            for u in bits(self.adj[v]):
                if u in index:
                    rows[index[v]] |= 1 << index[u]
        return Graph(len(keep), tuple(rows))

    def delete_vertex(self, v: int) -> "Graph":
        return self.induced(u for u in range(self.n) if u != v)

    def with_new_vertex(self, neighbor_mask: int) -> "Graph":
        """Append one vertex adjacent to the vertices in neighbor_mask."""
        if self.n + 1 > MAX_VERTICES:
            raise CapacityError("order would exceed 64")
        rows = list(self.adj)
        z = self.n
        for u in bits(neighbor_mask):
            rows[u] |= 1 << z
        rows.append(neighbor_mask)
        return Graph(self.n + 1, tuple(rows))

    def permuted(self, perm: Iterable[int]) -> "Graph":
        """Relabel: vertex v becomes perm[v]."""
        perm = list(perm)
        rows = [0] * self.n
        for v in range(self.n):
            for u in bits(self.adj[v]):
                rows[perm[v]] |= 1 << perm[u]
        return Graph(self.n, tuple(rows))

    # -- connectivity -------------------------------------------------

    def reachable_mask(self, start: int) -> int:
        seen = 1 << start
        frontier = seen
        while frontier:
            grow = 0
            for v in bits(frontier):
                grow |= self.adj[v]
            frontier = grow & ~seen
            seen |= frontier
        return seen

    def is_connected(self) -> bool:
        return self.reachable_mask(0) == (1 << self.n) - 1

    def components(self) -> list[int]:
        """Vertex bitmasks of the connected components, by least vertex."""
        remaining = (1 << self.n) - 1
        comps = []
        while remaining:
            start = (remaining & -remaining).bit_length() - 1
            mask = self.reachable_mask(start)
            comps.append(mask)
            remaining &= ~mask
        return comps


# -- standard constructions -------------------------------------------


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    rows = [0] * n
    for u, v in edges:
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def empty_graph(k: int) -> Graph:
    return Graph(k, (0,) * k)


def path(k: int) -> Graph:
    """P_k: k vertices in a line; P_1 is a single vertex."""
    if not 1 <= k <= MAX_VERTICES:
        raise CapacityError(f"path order {k} outside 1..{MAX_VERTICES}")
    return from_edges(k, ((i, i + 1) for i in range(k - 1)))


def cycle(k: int) -> Graph:
    if k < 3:
        raise CapacityError(f"cycle needs order >= 3, got {k}")
    if k > MAX_VERTICES:
        raise CapacityError(f"cycle order {k} exceeds {MAX_VERTICES}")
    return from_edges(k, [(i, (i + 1) % k) for i in range(k)])


def star(k: int) -> Graph:
    """K_{1,k-1} with the center at vertex 0."""
    if not 1 <= k <= MAX_VERTICES:
        raise CapacityError(f"star order {k} outside 1..{MAX_VERTICES}")
    return from_edges(k, ((0, i) for i in range(1, k)))


def complete(k: int) -> Graph:
    if not 1 <= k <= MAX_VERTICES:
        raise CapacityError(f"complete order {k} outside 1..{MAX_VERTICES}")
    return from_edges(k, ((i, j) for i in range(k) for j in range(i + 1, k)))


def disjoint_union(graphs: Iterable[Graph]) -> Graph:
    graphs = list(graphs)
    if not graphs:
        raise CapacityError("union of zero graphs")
    total = sum(g.n for g in graphs)
    if total > MAX_VERTICES:
        raise CapacityError(f"union order {total} exceeds {MAX_VERTICES}")
    rows: list[int] = []
    offset = 0
    for g in graphs:
        rows.extend(row << offset for row in g.adj)
        offset += g.n
    return Graph(total, tuple(rows))


def join_one(g: Graph) -> Graph:
    """K_1 v g: one new vertex adjacent to every vertex of g."""
    if g.n + 1 > MAX_VERTICES:
        raise CapacityError("join would exceed order 64")
    return g.with_new_vertex((1 << g.n) - 1)
