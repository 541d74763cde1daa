"""Shared test infrastructure: seeded graph sampling and naive reference oracles.

The naive oracles enumerate candidates without any pruning and decide
resolvability through the public verifiers only, so they are independent of
the production search kernels they are used to check.
"""

from __future__ import annotations

import itertools
import random

from resolvekit import (
    Graph,
    OrderedPartition,
    VertexSequence,
    all_pairs_distances,
    from_edge_list,
    is_resolving_partition,
    is_resolving_set,
)


def random_connected_graph(rng: random.Random, n: int) -> Graph:
    """Random spanning tree plus a few extra edges; always connected."""
    edges = {(rng.randrange(v), v) for v in range(1, n)}
    all_pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    extra = rng.randrange(0, n)
    for u, v in rng.sample(all_pairs, min(len(all_pairs), extra)):
        edges.add((u, v))
    return from_edge_list(n, edges)


def rgs_partitions(n: int, t: int):
    """All partitions of 0..n-1 into exactly t blocks, restricted-growth order."""

    def rec(assign: list[int], used: int):
        v = len(assign)
        if v == n:
            if used == t:
                yield tuple(assign)
            return
        for c in range(min(used, t - 1) + 1):
            nused = used + (1 if c == used else 0)
            if nused + (n - v - 1) < t:
                continue
            assign.append(c)
            yield from rec(assign, nused)
            assign.pop()

    yield from rec([], 0)


def naive_dim(g: Graph) -> tuple[int, VertexSequence]:
    dm = all_pairs_distances(g)
    for k in range(0, g.n):
        for cols in itertools.combinations(range(g.n), k):
            s = VertexSequence(cols)
            if is_resolving_set(dm, s).resolving:
                return k, s
    raise AssertionError("V minus one vertex always resolves")


def naive_pd(g: Graph) -> tuple[int, OrderedPartition]:
    dm = all_pairs_distances(g)
    for t in range(1, g.n + 1):
        for assign in rgs_partitions(g.n, t):
            pi = OrderedPartition.from_assignment(assign)
            if is_resolving_partition(dm, pi).resolving:
                return t, pi
    raise AssertionError("the singleton partition always resolves")
