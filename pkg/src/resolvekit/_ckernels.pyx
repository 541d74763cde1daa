# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled search kernels; API mirrors ``_pykernels``.

Instances whose representation rows do not pack into 64 bits are delegated
to the pure backend, so callers never need to care which lane they hit.
"""

from libc.stdlib cimport free, malloc

import numpy as np

from . import _pykernels

cdef int INF = 1000000000


def bfs_all_pairs(neighbors):
    """All-pairs hop distances; -1 marks unreachable pairs."""
    cdef int n = len(neighbors)
    indptr_np = np.zeros(n + 1, dtype=np.int32)
    cdef int i, total = 0
    for i in range(n):
        total += len(neighbors[i])
        indptr_np[i + 1] = total
    indices_np = np.empty(max(total, 1), dtype=np.int32)
    cdef int pos = 0
    for i in range(n):
        for w in neighbors[i]:
            indices_np[pos] = w
            pos += 1
    out = np.full((n, n), -1, dtype=np.int32)
    cdef int[::1] indptr = indptr_np
    cdef int[::1] indices = indices_np
    cdef int[:, ::1] d = out
    cdef int* queue = <int*> malloc(max(n, 1) * sizeof(int))
    if queue == NULL:
        raise MemoryError()
    cdef int s, head, tail, u, j, x, du
    with nogil:
        for s in range(n):
            d[s, s] = 0
            queue[0] = s
            head = 0
            tail = 1
            while head < tail:
                u = queue[head]
                head += 1
                du = d[s, u]
                for j in range(indptr[u], indptr[u + 1]):
                    x = indices[j]
                    if d[s, x] < 0:
                        d[s, x] = du + 1
                        queue[tail] = x
                        tail += 1
    free(queue)
    return out


def set_resolves(dist, cols, maxd=-1):
    """True iff the rows of dist restricted to ``cols`` are pairwise distinct."""
    cdef int n = dist.shape[0]
    cdef int k = len(cols)
    if k == 0:
        return n == 1
    md = int(maxd)
    if md < 0:
        md = int(dist.max())
    cdef int bits = max(1, md.bit_length())
    if bits * k > 64:
        return _pykernels.set_resolves(dist, cols)
    dist32 = np.ascontiguousarray(dist, dtype=np.int32)
    cols32 = np.ascontiguousarray(cols, dtype=np.int32)
    cdef const int[:, ::1] d = dist32
    cdef int[::1] cc = cols32
    cdef unsigned long long* codes = <unsigned long long*> malloc(n * sizeof(unsigned long long))
    if codes == NULL:
        raise MemoryError()
    cdef int u, v, j
    cdef unsigned long long code
    cdef bint ok = True
    with nogil:
        for u in range(n):
            code = 0
            for j in range(k):
                code = (code << bits) | <unsigned long long> d[u, cc[j]]
            codes[u] = code
        for u in range(n):
            if not ok:
                break
            for v in range(u + 1, n):
                if codes[u] == codes[v]:
                    ok = False
                    break
    free(codes)
    return bool(ok)


cdef struct PdCtx:
    int n
    int t
    int bits
    const int* d
    const int* ld
    int* coords      # n * t partial representations
    int* assign
    int* members     # t rows of n
    int* mcount
    int* undo        # n rows of n: saved coords column per depth
    unsigned long long* codes
    long long examined


cdef void pd_place(PdCtx* c, int v, int cls) noexcept nogil:
    cdef int u, duv
    cdef int* und = c.undo + v * c.n
    for u in range(c.n):
        und[u] = c.coords[u * c.t + cls]
        duv = c.d[u * c.n + v]
        if duv < c.coords[u * c.t + cls]:
            c.coords[u * c.t + cls] = duv
    c.assign[v] = cls
    c.members[cls * c.n + c.mcount[cls]] = v
    c.mcount[cls] += 1


cdef void pd_unplace(PdCtx* c, int v, int cls) noexcept nogil:
    cdef int u
    cdef int* und = c.undo + v * c.n
    for u in range(c.n):
        c.coords[u * c.t + cls] = und[u]
    c.mcount[cls] -= 1
    c.assign[v] = -1


cdef bint pd_pruned(PdCtx* c, int v, int cls) noexcept nogil:
    # A same-class pair whose every distinguishing vertex is already assigned
    # and whose partial representations agree can never be separated.
    cdef int idx, u, i
    cdef bint equal
    for idx in range(c.mcount[cls]):
        u = c.members[cls * c.n + idx]
        if u == v:
            continue
        if c.ld[u * c.n + v] <= v:
            equal = True
            for i in range(c.t):
                if c.coords[u * c.t + i] != c.coords[v * c.t + i]:
                    equal = False
                    break
            if equal:
                return True
    return False


cdef bint pd_dfs(PdCtx* c, int v, int used) noexcept nogil:
    cdef int cmax, cls, nused, u, i
    cdef unsigned long long code
    if v == c.n:
        c.examined += 1
        for u in range(c.n):
            code = 0
            for i in range(c.t):
                code = (code << c.bits) | <unsigned long long> c.coords[u * c.t + i]
            c.codes[u] = code
        for u in range(c.n):
            for i in range(u + 1, c.n):
                if c.codes[u] == c.codes[i]:
                    return False
        return True
    cmax = used if used < c.t - 1 else c.t - 1
    for cls in range(cmax + 1):
        nused = used + 1 if cls == used else used
        if nused + (c.n - v - 1) < c.t:
            continue
        pd_place(c, v, cls)
        if not pd_pruned(c, v, cls):
            if pd_dfs(c, v + 1, nused):
                return True
        pd_unplace(c, v, cls)
    return False


def search_pd(dist, int t, last_diff, prefix=()):
    """First resolving partition into exactly ``t`` classes, canonical order.

    Same contract as ``_pykernels.search_pd``.
    """
    cdef int n = dist.shape[0]
    if t < 1 or t > n:
        return None, 0
    md = int(dist.max()) if n else 0
    cdef int bits = max(1, md.bit_length())
    if bits * t > 64:
        return _pykernels.search_pd(dist, t, last_diff, prefix)
    dist32 = np.ascontiguousarray(dist, dtype=np.int32)
    ld32 = np.ascontiguousarray(last_diff, dtype=np.int32)
    cdef const int[:, ::1] dmv = dist32
    cdef const int[:, ::1] ldmv = ld32

    cdef PdCtx ctx
    ctx.n = n
    ctx.t = t
    ctx.bits = bits
    ctx.d = &dmv[0, 0]
    ctx.ld = &ldmv[0, 0]
    ctx.examined = 0
    ctx.coords = <int*> malloc(n * t * sizeof(int))
    ctx.assign = <int*> malloc(n * sizeof(int))
    ctx.members = <int*> malloc(n * t * sizeof(int))
    ctx.mcount = <int*> malloc(t * sizeof(int))
    ctx.undo = <int*> malloc(n * n * sizeof(int))
    ctx.codes = <unsigned long long*> malloc(n * sizeof(unsigned long long))
    if (ctx.coords == NULL or ctx.assign == NULL or ctx.members == NULL
            or ctx.mcount == NULL or ctx.undo == NULL or ctx.codes == NULL):
        free(ctx.coords); free(ctx.assign); free(ctx.members)
        free(ctx.mcount); free(ctx.undo); free(ctx.codes)
        raise MemoryError()

    cdef int i, v, c, used, nused
    cdef bint ok = False, dead = False
    try:
        for i in range(n * t):
            ctx.coords[i] = INF
            ctx.members[i] = 0
        for i in range(n):
            ctx.assign[i] = -1
        for i in range(t):
            ctx.mcount[i] = 0

        used = 0
        for v, cobj in enumerate(prefix):
            c = cobj
            if c < 0 or c > min(used, t - 1):
                dead = True
                break
            nused = used + 1 if c == used else used
            if nused + (n - v - 1) < t:
                dead = True
                break
            pd_place(&ctx, v, c)
            if pd_pruned(&ctx, v, c):
                dead = True
                break
            used = nused
        if dead:
            return None, 0

        v = len(prefix)
        with nogil:
            ok = pd_dfs(&ctx, v, used)
        if ok:
            return [ctx.assign[i] for i in range(n)], int(ctx.examined)
        return None, int(ctx.examined)
    finally:
        free(ctx.coords); free(ctx.assign); free(ctx.members)
        free(ctx.mcount); free(ctx.undo); free(ctx.codes)
