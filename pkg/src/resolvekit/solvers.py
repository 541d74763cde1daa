"""Exact metric dimension and partition dimension by pruned exhaustive search.

Subsets are scanned in lexicographic order for growing sizes; partitions are
scanned as restricted-growth strings for growing class counts. Distance-twin
lower bounds raise the starting layer, and the partition search prunes
branches in which an already-inseparable same-class pair exists. The first
success in canonical order is returned, which keeps witnesses reproducible
and thread-count independent.
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .graph import Graph, all_pairs_distances
from .resolvability import OrderedPartition, VertexSequence

PD_MAX_VERTICES = 16
DIM_MAX_VERTICES = 20


class DeskScaleError(RuntimeError):
    """Raised instead of starting a search that cannot finish at desk scale."""


@dataclass(frozen=True)
class DimResult:
    """Exact metric dimension with a minimum witness.

    ``value`` is None when no resolving set was found within the requested
    size limit; ``examined`` counts candidate subsets tested (the split
    across threads can inflate it, the value and witness never change).
    """

    value: int | None
    witness: VertexSequence | None
    examined: int


@dataclass(frozen=True)
class PdResult:
    """Exact partition dimension with a minimum witness partition."""

    value: int | None
    witness: OrderedPartition | None
    examined: int


def resolve_threads(threads: int | None) -> int:
    if threads is not None:
        return max(1, threads)
    env = os.environ.get("RESOLVEKIT_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def last_diff_matrix(d: np.ndarray) -> np.ndarray:
    """For each pair (u, v): the largest w outside {u, v} with d(u,w) != d(v,w).

    -1 means u and v are distance twins. This matrix drives both the twin
    lower bounds and the partition-search prune.
    """
    n = d.shape[0]
    ld = np.full((n, n), -1, dtype=np.int32)
    for u in range(n):
        for v in range(u + 1, n):
            neq = d[u] != d[v]
            neq[u] = neq[v] = False
            idx = np.flatnonzero(neq)
            if idx.size:
                ld[u, v] = ld[v, u] = idx[-1]
    return ld


def twin_groups(ld: np.ndarray) -> list[list[int]]:
    """Maximal groups of mutually twin vertices (components verified as cliques).

    Groups whose component is not a clique under the twin relation are split
    into singletons so the derived lower bounds stay sound.
    """
    n = ld.shape[0]
    seen = [False] * n
    groups = []
    for s in range(n):
        if seen[s]:
            continue
        comp = [s]
        seen[s] = True
        stack = [s]
        while stack:
            u = stack.pop()
            for v in range(n):
                if not seen[v] and ld[u, v] == -1:
                    seen[v] = True
                    comp.append(v)
                    stack.append(v)
        comp.sort()
        clique = all(ld[a, b] == -1 for a, b in itertools.combinations(comp, 2))
        if clique:
            groups.append(comp)
        else:
            groups.extend([v] for v in comp)
    return groups


def _first_success(tasks, threads: int):
    """Run ordered subsearch tasks; return (first_result, total_examined).

    Sequential execution exits early; concurrent execution gathers all
    results and takes the earliest task index, so the outcome is independent
    of scheduling.
    """
    if threads <= 1 or len(tasks) <= 1:
        examined = 0
        for task in tasks:
            result, ex = task()
            examined += ex
            if result is not None:
                return result, examined
        return None, examined
    with ThreadPoolExecutor(max_workers=threads) as pool:
        outcomes = list(pool.map(lambda t: t(), tasks))
    examined = sum(ex for _, ex in outcomes)
    for result, _ in outcomes:
        if result is not None:
            return result, examined
    return None, examined


def _dim_layer(d: np.ndarray, n: int, k: int, threads: int, maxd: int):
    """First resolving k-subset in lexicographic order, or None."""
    if k == 0:
        ok = _kernels.set_resolves(d, (), maxd)
        return ((), 1) if ok else (None, 1)

    def scan(first: int):
        count = 0
        for rest in itertools.combinations(range(first + 1, n), k - 1):
            cols = (first,) + rest
            count += 1
            if _kernels.set_resolves(d, cols, maxd):
                return cols, count
        return None, count

    tasks = [(lambda f=f: scan(f)) for f in range(n - k + 1)]
    return _first_success(tasks, threads)


def metric_dimension(
    g: Graph,
    limit: int | None = None,
    threads: int | None = None,
    max_vertices: int = DIM_MAX_VERTICES,
) -> DimResult:
    """Smallest k such that some k-subset resolves g, with a minimum witness.

    Searches k = lb, lb+1, ... where lb is the twin lower bound; within each
    layer subsets are scanned lexicographically, so the witness is canonical.
    Returns value None when no resolving set of size <= ``limit`` exists.
    """
    if g.n > max_vertices:
        raise DeskScaleError(
            f"dim search on {g.n} vertices exceeds the cap of {max_vertices}; "
            "raise max_vertices explicitly to override"
        )
    dm = all_pairs_distances(g)
    n = g.n
    if n == 1:
        return DimResult(0, VertexSequence(()), 1)
    d = dm.d
    maxd = int(d.max())
    ld = last_diff_matrix(d)
    lb = max(1, sum(len(grp) - 1 for grp in twin_groups(ld)))
    hi = n - 1 if limit is None else min(limit, n - 1)
    nthreads = resolve_threads(threads)
    examined = 0
    for k in range(lb, hi + 1):
        cols, ex = _dim_layer(d, n, k, nthreads, maxd)
        examined += ex
        if cols is not None:
            return DimResult(k, VertexSequence(cols), examined)
    return DimResult(None, None, examined)


def _rgs_prefixes(p: int, t: int) -> list[tuple[int, ...]]:
    """All restricted-growth prefixes of length p with class indices < t."""
    if p <= 0:
        return [()]
    out: list[tuple[int, ...]] = []

    def rec(s: list[int], mx: int) -> None:
        if len(s) == p:
            out.append(tuple(s))
            return
        for c in range(min(mx + 1, t - 1) + 1):
            s.append(c)
            rec(s, max(mx, c))
            s.pop()

    rec([0], 0)
    return out


def _pd_layer(d: np.ndarray, ld: np.ndarray, t: int, n: int, threads: int):
    if threads <= 1 or n < 3 or t < 2:
        return _kernels.search_pd(d, t, ld, ())
    prefixes = _rgs_prefixes(min(3, n), t)
    tasks = [(lambda p=p: _kernels.search_pd(d, t, ld, p)) for p in prefixes]
    return _first_success(tasks, threads)


def partition_dimension(
    g: Graph,
    limit: int | None = None,
    threads: int | None = None,
    max_vertices: int = PD_MAX_VERTICES,
) -> PdResult:
    """Smallest t such that some ordered t-class partition resolves g.

    Partitions are enumerated canonically as restricted-growth strings; the
    returned witness is the first resolving partition in that order.
    """
    if g.n > max_vertices:
        raise DeskScaleError(
            f"pd search on {g.n} vertices exceeds the cap of {max_vertices}; "
            "raise max_vertices explicitly to override"
        )
    dm = all_pairs_distances(g)
    n = g.n
    if n == 1:
        return PdResult(1, OrderedPartition(((0,),)), 1)
    d = dm.d
    ld = last_diff_matrix(d)
    lb = max(2, max(len(grp) for grp in twin_groups(ld)))
    hi = n if limit is None else min(limit, n)
    nthreads = resolve_threads(threads)
    examined = 0
    for t in range(lb, hi + 1):
        assign, ex = _pd_layer(d, ld, t, n, nthreads)
        examined += ex
        if assign is not None:
            return PdResult(t, OrderedPartition.from_assignment(assign), examined)
    return PdResult(None, None, examined)


def verify_minimality(g: Graph, claimed: DimResult | PdResult) -> bool:
    """Re-check a claimed minimum: witness resolves and the layer below fails."""
    from .resolvability import is_resolving_partition, is_resolving_set

    dm = all_pairs_distances(g)
    d = dm.d
    if isinstance(claimed, DimResult):
        if claimed.value is None or claimed.witness is None:
            return False
        if len(claimed.witness) != claimed.value:
            return False
        if not is_resolving_set(dm, claimed.witness).resolving:
            return False
        k = claimed.value - 1
        if k < 0:
            return True
        cols, _ = _dim_layer(d, g.n, k, 1, int(d.max()))
        return cols is None
    if isinstance(claimed, PdResult):
        if claimed.value is None or claimed.witness is None:
            return False
        if claimed.witness.t != claimed.value:
            return False
        if not is_resolving_partition(dm, claimed.witness).resolving:
            return False
        t = claimed.value - 1
        if t < 1:
            return True
        ld = last_diff_matrix(d)
        assign, _ = _kernels.search_pd(d, t, ld, ())
        return assign is None
    raise TypeError(f"unsupported claim type {type(claimed)!r}")
