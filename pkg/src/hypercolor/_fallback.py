"""Pure-Python backend for the exact-coloring kernels.

Mirrors hypercolor._kernels (the Cython extension) exactly: same search
order, same tie-breaks, same outputs.  The compiled module is preferred at
import time (see hypercolor.kernels); this module is the fallback and the
semantic reference.

Both solvers decide fixed-k feasibility by depth-first search with one
shared symmetry break: colors are introduced in first-use order, so a vertex
may only use an already-used color or the single next fresh one (the first
vertex is thereby forced to color 0).
"""

from __future__ import annotations

BACKEND_NAME = "python"


def graph_color_k(n: int, adj: bytearray, deg: list[int], k: int) -> list[int] | None:
    """Proper k-coloring of a simple graph, or None if none exists.

    ``adj`` is a flat n*n 0/1 matrix; ``deg`` the vertex degrees.  Vertices
    are chosen DSATUR-style: maximum saturation (distinct colors among
    colored neighbors), then maximum degree, then minimum index.
    """
    if n == 0:
        return []
    if k <= 0:
        return None
    colors = [-1] * n
    # sat_counts[v*k + c]: colored neighbors of v holding color c
    sat_counts = [0] * (n * k)
    sat = [0] * n

    def rec(colored: int, used: int) -> bool:
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
                best, best_sat, best_deg = v, s, deg[v]
        v = best
        row = v * n
        limit = used + 1 if used < k else k
        for c in range(limit):
            if sat_counts[v * k + c] > 0:
                continue
            colors[v] = c
            touched = []
            for u in range(n):
                if adj[row + u] and colors[u] < 0:
                    idx = u * k + c
                    if sat_counts[idx] == 0:
                        sat[u] += 1
                    sat_counts[idx] += 1
                    touched.append(u)
            if rec(colored + 1, used + 1 if c == used else used):
                return True
            for u in touched:
                idx = u * k + c
                sat_counts[idx] -= 1
                if sat_counts[idx] == 0:
                    sat[u] -= 1
            colors[v] = -1
        return False

    return colors if rec(0, 0) else None


def hypergraph_color_k(
    n: int, edges: tuple[tuple[int, ...], ...], k: int
) -> list[int] | None:
    """Proper k-coloring of a hypergraph (no edge monochromatic), or None.

    Vertices are colored in id order.  An edge constrains the search exactly
    when its last (maximum) vertex is colored: the common color of the other
    vertices, if they are monochromatic, is forbidden.
    """
    if n == 0:
        return []
    if k <= 0:
        return None
    # closing[v]: rest-of-edge tuples for edges whose maximum vertex is v
    closing: list[list[tuple[int, ...]]] = [[] for _ in range(n)]
    for e in edges:
        closing[e[-1]].append(e[:-1])
    colors = [-1] * n

    def rec(v: int, used: int) -> bool:
        if v == n:
            return True
        forbidden = 0  # bitmask over colors; k <= n stays well under word limits
        for rest in closing[v]:
            c0 = colors[rest[0]]
            if all(colors[w] == c0 for w in rest):
                forbidden |= 1 << c0
        limit = used + 1 if used < k else k
        for c in range(limit):
            if forbidden >> c & 1:
                continue
            colors[v] = c
            if rec(v + 1, used + 1 if c == used else used):
                return True
        colors[v] = -1
        return False

    return colors if rec(0, 0) else None
