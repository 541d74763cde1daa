"""Pure-Python search kernels.

The compiled twin of this module lives in ``_ckernels.pyx``; both expose the
same API and the backend is picked once at import time in ``_kernels``.
"""

from __future__ import annotations

from collections import deque

import numpy as np

INF = 10**9


def bfs_all_pairs(neighbors):
    """All-pairs hop distances from per-vertex adjacency lists.

    Returns an n x n int32 matrix with -1 for unreachable pairs.
    """
    n = len(neighbors)
    d = np.full((n, n), -1, dtype=np.int32)
    for s in range(n):
        row = d[s]
        row[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            du = row[u]
            for w in neighbors[u]:
                if row[w] < 0:
                    row[w] = du + 1
                    q.append(w)
    return d


def set_resolves(dist, cols, maxd=-1):
    """True iff the rows of dist restricted to ``cols`` are pairwise distinct.

    ``maxd`` is accepted for API parity with the compiled kernel (which uses
    it to pick an integer row encoding); it is ignored here.
    """
    n = dist.shape[0]
    if len(cols) == 0:
        return n == 1
    sub = dist[:, list(cols)]
    return np.unique(sub, axis=0).shape[0] == n


def search_pd(dist, t, last_diff, prefix=()):
    """First resolving partition of the vertex set into exactly ``t`` classes.

    Partitions are enumerated as restricted-growth strings over the vertex
    order 0..n-1, depth first, so the first hit is the canonical minimum
    witness. ``last_diff[u][v]`` must hold the largest w (w != u, v) with
    d(u, w) != d(v, w), or -1 when u and v are distance twins; it drives the
    sound branch prune: once every distinguishing vertex of a same-class pair
    is already assigned and their partial representations agree, no completion
    can separate them.

    ``prefix`` fixes the class indices of the first vertices, which is how
    callers split the search space across workers.

    Returns ``(assignment, examined)`` where ``assignment`` is a list mapping
    vertex -> class index (or None) and ``examined`` counts full partitions
    tested.
    """
    n = dist.shape[0]
    if t < 1 or t > n:
        return None, 0
    d = [[int(x) for x in row] for row in dist]
    ld = [[int(x) for x in row] for row in last_diff]
    coords = [[INF] * t for _ in range(n)]
    assign = [-1] * n
    members: list[list[int]] = [[] for _ in range(t)]
    state = {"examined": 0}

    def place(v, c):
        col = [coords[u][c] for u in range(n)]
        dv = d[v]
        for u in range(n):
            if dv[u] < coords[u][c]:
                coords[u][c] = dv[u]
        assign[v] = c
        members[c].append(v)
        return col

    def unplace(v, c, col):
        for u in range(n):
            coords[u][c] = col[u]
        assign[v] = -1
        members[c].pop()

    def pruned(v, c):
        ldv = ld[v]
        cv = coords[v]
        for u in members[c]:
            if u == v:
                continue
            if ldv[u] <= v and coords[u] == cv:
                return True
        return False

    def dfs(v, used):
        if v == n:
            state["examined"] += 1
            return len({tuple(coords[u]) for u in range(n)}) == n
        cmax = min(used, t - 1)
        for c in range(cmax + 1):
            nused = used + 1 if c == used else used
            if nused + (n - v - 1) < t:
                continue
            col = place(v, c)
            if not pruned(v, c):
                if dfs(v + 1, nused):
                    return True
            unplace(v, c, col)
        return False

    # Apply the fixed prefix, rejecting invalid or provably dead subspaces.
    used = 0
    for v, c in enumerate(prefix):
        if c < 0 or c > min(used, t - 1):
            return None, 0
        nused = used + 1 if c == used else used
        if nused + (n - v - 1) < t:
            return None, 0
        place(v, c)
        if pruned(v, c):
            return None, 0
        used = nused

    if dfs(len(prefix), used):
        return assign.copy(), state["examined"]
    return None, state["examined"]
