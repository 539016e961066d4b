# cython: language_level=3
# cython: boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled backend for the exact-coloring kernels.

Semantics are pinned to hypercolor._fallback (the pure-Python reference):
same search order, same tie-breaks, same outputs.  See that module for the
algorithm documentation.
"""

from libc.stdlib cimport free, malloc
from libc.string cimport memset

BACKEND_NAME = "cython"


cdef bint _graph_rec(int n, int k, const unsigned char* adj, const int* deg,
                     int* colors, int* sat_counts, int* sat,
                     int colored, int used) noexcept:
    cdef int v, u, c, s, limit, row, idx
    cdef int best, best_sat, best_deg
    if colored == n:
        return True
    best = -1
    best_sat = -1
    best_deg = -1
    for v in range(n):
        if colors[v] >= 0:
            continue
        s = sat[v]
        if s > best_sat or (s == best_sat and deg[v] > best_deg):
            best = v
            best_sat = s
            best_deg = deg[v]
    v = best
    row = v * n
    limit = used + 1 if used < k else k
    for c in range(limit):
        if sat_counts[v * k + c] > 0:
            continue
        colors[v] = c
        for u in range(n):
            if adj[row + u] and colors[u] < 0:
                idx = u * k + c
                if sat_counts[idx] == 0:
                    sat[u] += 1
                sat_counts[idx] += 1
        if _graph_rec(n, k, adj, deg, colors, sat_counts, sat,
                      colored + 1, used + 1 if c == used else used):
            return True
        for u in range(n):
            if adj[row + u] and colors[u] < 0:
                idx = u * k + c
                sat_counts[idx] -= 1
                if sat_counts[idx] == 0:
                    sat[u] -= 1
        colors[v] = -1
    return False


def graph_color_k(int n, adj, deg, int k):
    """Proper k-coloring of a simple graph, or None if none exists."""
    if n == 0:
        return []
    if k <= 0:
        return None
    cdef const unsigned char[::1] adj_view = adj
    cdef int* colors = NULL
    cdef int* sat_counts = NULL
    cdef int* sat = NULL
    cdef int* degs = NULL
    cdef int v
    cdef bint ok
    try:
        colors = <int*> malloc(n * sizeof(int))
        sat_counts = <int*> malloc(n * k * sizeof(int))
        sat = <int*> malloc(n * sizeof(int))
        degs = <int*> malloc(n * sizeof(int))
        if colors == NULL or sat_counts == NULL or sat == NULL or degs == NULL:
            raise MemoryError()
        for v in range(n):
            colors[v] = -1
            sat[v] = 0
            degs[v] = deg[v]
        memset(sat_counts, 0, n * k * sizeof(int))
        ok = _graph_rec(n, k, &adj_view[0], degs, colors, sat_counts, sat, 0, 0)
        if not ok:
            return None
        return [colors[v] for v in range(n)]
    finally:
        free(colors)
        free(sat_counts)
        free(sat)
        free(degs)


cdef bint _hyper_rec(int v, int used, int n, int k, int* colors,
                     const int* rest_range, const int* rest_off,
                     const int* rest_len, const int* rests_flat,
                     unsigned char* forbidden_buf) noexcept:
    cdef int r, c, c0, idx, off, length, limit
    cdef bint mono
    cdef unsigned char* forbidden
    if v == n:
        return True
    forbidden = forbidden_buf + v * k
    memset(forbidden, 0, k)
    for r in range(rest_range[v], rest_range[v + 1]):
        off = rest_off[r]
        length = rest_len[r]
        c0 = colors[rests_flat[off]]
        mono = True
        for idx in range(off + 1, off + length):
            if colors[rests_flat[idx]] != c0:
                mono = False
                break
        if mono:
            forbidden[c0] = 1
    limit = used + 1 if used < k else k
    for c in range(limit):
        if forbidden[c]:
            continue
        colors[v] = c
        if _hyper_rec(v + 1, used + 1 if c == used else used, n, k, colors,
                      rest_range, rest_off, rest_len, rests_flat, forbidden_buf):
            return True
    colors[v] = -1
    return False


def hypergraph_color_k(int n, edges, int k):
    """Proper k-coloring of a hypergraph (no edge monochromatic), or None."""
    if n == 0:
        return []
    if k <= 0:
        return None
    # Group rest-of-edge vertex lists by each edge's maximum vertex.
    by_max = [[] for _ in range(n)]
    for e in edges:
        by_max[e[len(e) - 1]].append(e[: len(e) - 1])
    cdef int total_rests = len(edges)
    cdef int total_verts = 0
    for e in edges:
        total_verts += len(e) - 1
    cdef int* colors = NULL
    cdef int* rest_range = NULL
    cdef int* rest_off = NULL
    cdef int* rest_len = NULL
    cdef int* rests_flat = NULL
    cdef unsigned char* forbidden_buf = NULL
    cdef int v, r, pos, w
    cdef bint ok
    try:
        colors = <int*> malloc(n * sizeof(int))
        rest_range = <int*> malloc((n + 1) * sizeof(int))
        rest_off = <int*> malloc((total_rests if total_rests else 1) * sizeof(int))
        rest_len = <int*> malloc((total_rests if total_rests else 1) * sizeof(int))
        rests_flat = <int*> malloc((total_verts if total_verts else 1) * sizeof(int))
        forbidden_buf = <unsigned char*> malloc(n * k)
        if (colors == NULL or rest_range == NULL or rest_off == NULL
                or rest_len == NULL or rests_flat == NULL or forbidden_buf == NULL):
            raise MemoryError()
        for v in range(n):
            colors[v] = -1
        r = 0
        pos = 0
        for v in range(n):
            rest_range[v] = r
            for rest in by_max[v]:
                rest_off[r] = pos
                rest_len[r] = len(rest)
                for w in rest:
                    rests_flat[pos] = w
                    pos += 1
                r += 1
        rest_range[n] = r
        ok = _hyper_rec(0, 0, n, k, colors, rest_range, rest_off, rest_len,
                        rests_flat, forbidden_buf)
        if not ok:
            return None
        return [colors[v] for v in range(n)]
    finally:
        free(colors)
        free(rest_range)
        free(rest_off)
        free(rest_len)
        free(rests_flat)
        free(forbidden_buf)
