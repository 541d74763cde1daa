"""Simple undirected graphs, BFS distance matrices, and Cartesian products."""

from __future__ import annotations

import hashlib
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

import numpy as np

from . import _kernels


class DisconnectedGraphError(ValueError):
    """Raised when an operation that needs finite distances gets a disconnected graph."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on the vertex set 0..n-1.

    Edges are normalized (u, v) pairs with u < v, stored sorted. Instances
    are immutable and safe to share across threads. Build via
    :func:`from_edge_list` to get validation.
    """

    n: int
    edges: tuple[tuple[int, int], ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(b)) for b in nbrs)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @cached_property
    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted((len(b) for b in self.adjacency), reverse=True))

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self.edge_set

    @cached_property
    def sha(self) -> str:
        """SHA-256 of the canonical edge-list serialization."""
        lines = [f"{self.n} {self.m}"]
        lines.extend(f"{u} {v}" for u, v in self.edges)
        return hashlib.sha256("\n".join(lines).encode()).hexdigest()


@dataclass(frozen=True, eq=False)
class DistanceMatrix:
    """All-pairs hop distances of a connected graph.

    ``d`` is a read-only int32 array; ``graph_sha`` ties the matrix back to
    the graph it was computed from so certificates can reference it.
    """

    n: int
    d: np.ndarray
    graph_sha: str = ""

    def dist(self, u: int, v: int) -> int:
        return int(self.d[u, v])


@dataclass(frozen=True)
class ProductVertexCodec:
    """Bijection between factor vertex pairs (a, b) and product ids a*n2 + b."""

    n1: int
    n2: int

    def encode(self, a: int, b: int) -> int:
        if not (0 <= a < self.n1 and 0 <= b < self.n2):
            raise ValueError(f"pair ({a}, {b}) out of range for {self.n1}x{self.n2} product")
        return a * self.n2 + b

    def decode(self, x: int) -> tuple[int, int]:
        if not 0 <= x < self.n1 * self.n2:
            raise ValueError(f"product vertex {x} out of range")
        return divmod(x, self.n2)

    def pairs(self) -> Iterable[tuple[int, int]]:
        for a in range(self.n1):
            for b in range(self.n2):
                yield a, b


def from_edge_list(n: int, pairs: Iterable[tuple[int, int]]) -> Graph:
    """Build a normalized Graph, collapsing duplicates and ordering endpoints.

    Rejects self-loops and endpoints outside 0..n-1.
    """
    if n < 1:
        raise ValueError(f"vertex count must be positive, got {n}")
    seen: set[tuple[int, int]] = set()
    for u, v in pairs:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        if u > v:
            u, v = v, u
        seen.add((u, v))
    return Graph(n=n, edges=tuple(sorted(seen)))


def is_connected(g: Graph) -> bool:
    """True iff a BFS from vertex 0 reaches every vertex (K_1 is connected)."""
    reached = [False] * g.n
    reached[0] = True
    q = deque([0])
    count = 1
    while q:
        u = q.popleft()
        for w in g.adjacency[u]:
            if not reached[w]:
                reached[w] = True
                count += 1
                q.append(w)
    return count == g.n


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """BFS distance matrix of a connected graph; rejects disconnected input."""
    d = _kernels.bfs_all_pairs([list(b) for b in g.adjacency])
    if (d < 0).any():
        raise DisconnectedGraphError("graph is disconnected; distances are not all finite")
    d.setflags(write=False)
    return DistanceMatrix(n=g.n, d=d, graph_sha=g.sha)


def cartesian_product(g1: Graph, g2: Graph) -> tuple[Graph, ProductVertexCodec]:
    """Cartesian product with the canonical (a, b) -> a*n2 + b labeling.

    (a, b) ~ (c, d) iff a = c and bd is an edge of g2, or b = d and ac is an
    edge of g1.
    """
    codec = ProductVertexCodec(g1.n, g2.n)
    edges = []
    for a in range(g1.n):
        for b, bd in g2.edges:
            edges.append((codec.encode(a, b), codec.encode(a, bd)))
    for a, c in g1.edges:
        for b in range(g2.n):
            edges.append((codec.encode(a, b), codec.encode(c, b)))
    return from_edge_list(g1.n * g2.n, edges), codec


def product_set_distance(
    d1: DistanceMatrix,
    d2: DistanceMatrix,
    a: int,
    b: int,
    s1: Iterable[int],
    s2: Iterable[int],
) -> int:
    """Distance from (a, b) to the vertex set S1 x S2 in the product graph.

    Computed additively as d(a, S1) + d(b, S2), which equals the BFS distance
    in the product (exercised directly by the test suite).
    """
    s1 = tuple(s1)
    s2 = tuple(s2)
    if not s1 or not s2:
        raise ValueError("factor sets must be nonempty")
    return min(int(d1.d[a, x]) for x in s1) + min(int(d2.d[b, y]) for y in s2)
