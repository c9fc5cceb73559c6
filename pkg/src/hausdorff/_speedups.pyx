# Compiled twins of the kernels in _kernels.py. Results must match exactly.
from libc.stdlib cimport malloc, calloc, free
from libc.math cimport INFINITY

cdef extern from *:
    int __builtin_ctz(unsigned int x) nogil

BACKEND = "cython"

MAX_BITS = 30


def cover_dp(int n, masks, weights):
    if n < 0 or n > MAX_BITS:
        raise ValueError(f"universe size {n} outside [0, {MAX_BITS}]")
    cdef Py_ssize_t nc = len(masks)
    cdef unsigned int full = (1u << n) - 1
    cdef unsigned int *cm = <unsigned int *> malloc(max(nc, 1) * sizeof(unsigned int))
    cdef double *cw = <double *> malloc(max(nc, 1) * sizeof(double))
    cdef int *off = <int *> calloc(n + 2, sizeof(int))
    cdef int *idx = NULL
    cdef double *dp = NULL
    cdef int *choice = NULL
    cdef Py_ssize_t j, k, total = 0
    cdef int i
    cdef unsigned int r, m
    cdef double best, v
    cdef int bc
    try:
        if cm == NULL or cw == NULL or off == NULL:
            raise MemoryError()
        for j in range(nc):
            cm[j] = <unsigned int> masks[j]
            cw[j] = <double> weights[j]
            m = cm[j]
            for i in range(n):
                if (m >> i) & 1u:
                    off[i + 1] += 1
                    total += 1
        for i in range(n):
            off[i + 1] += off[i]
        idx = <int *> malloc(max(total, 1) * sizeof(int))
        dp = <double *> malloc((<size_t> full + 1) * sizeof(double))
        choice = <int *> malloc((<size_t> full + 1) * sizeof(int))
        if idx == NULL or dp == NULL or choice == NULL:
            raise MemoryError()
        # fill CSR lists in increasing candidate order; off[i] is used as a cursor
        for j in range(nc):
            m = cm[j]
            for i in range(n):
                if (m >> i) & 1u:
                    idx[off[i]] = <int> j
                    off[i] += 1
        for i in range(n, 0, -1):
            off[i] = off[i - 1]
        off[0] = 0

        dp[0] = 0.0
        choice[0] = -1
        with nogil:
            for r in range(1, full + 1):
                i = __builtin_ctz(r)
                best = INFINITY
                bc = -1
                for k in range(off[i], off[i + 1]):
                    j = idx[k]
                    v = cw[j] + dp[r & ~cm[j]]
                    if v < best:
                        best = v
                        bc = <int> j
                dp[r] = best
                choice[r] = bc

        if dp[full] == INFINITY:
            return INFINITY, []
        chosen = []
        r = full
        while r:
            bc = choice[r]
            chosen.append(bc)
            r &= ~cm[bc]
        return dp[full], chosen
    finally:
        free(cm)
        free(cw)
        free(off)
        free(idx)
        free(dp)
        free(choice)


cdef void _extend(unsigned int clique, unsigned int cand, unsigned int *adj, list out):
    cdef unsigned int low
    cdef int u
    out.append(clique)
    while cand:
        low = cand & (~cand + 1u)
        u = __builtin_ctz(low)
        cand ^= low
        _extend(clique | low, cand & adj[u], adj, out)


def clique_masks(adj):
    cdef Py_ssize_t n = len(adj)
    if n > MAX_BITS:
        raise ValueError(f"graph size {n} exceeds {MAX_BITS}")
    cdef unsigned int a[32]
    cdef Py_ssize_t v
    cdef unsigned int higher
    out = []
    for v in range(n):
        a[v] = <unsigned int> adj[v]
    for v in range(n):
        higher = ~((1u << (v + 1)) - 1u) if v < 31 else 0u
        _extend(1u << v, a[v] & higher, a, out)
    return out
