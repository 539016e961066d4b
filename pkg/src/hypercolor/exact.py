"""Exact decision procedures: bipartiteness, graph k-coloring, chromatic numbers.

These are the ground truth the rest of the package is checked against.
Exact search is capped (GRAPH_CAP vertices for graph solvers, VERTEX_CAP for
the hypergraph oracle); exceeding a cap raises LimitExceeded rather than
degrading to a heuristic.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from . import kernels
from .core import EdgeClassColoring, Hypergraph, IntersectionGraph, VertexColoring, is_proper
from .errors import LimitExceeded

GRAPH_CAP = 64
VERTEX_CAP = 24


@dataclass(frozen=True)
class OddCycle:
    """Witness that a graph is not bipartite: vertex indices of an odd cycle."""

    edges: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.edges)


def bipartition(g: IntersectionGraph) -> EdgeClassColoring | OddCycle:
    """2-class the graph, or return an odd-cycle witness.

    Deterministic: BFS from the lowest-index unvisited vertex; the
    first-discovered side of each component is class 0.
    """
    side = [-1] * g.m
    parent = [-1] * g.m
    for root in range(g.m):
        if side[root] != -1:
            continue
        side[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.neighbors[u]:
                if side[w] == -1:
                    side[w] = 1 - side[u]
                    parent[w] = u
                    queue.append(w)
                elif side[w] == side[u]:
                    return OddCycle(_odd_cycle_witness(parent, u, w))
    return EdgeClassColoring(classes=tuple(side), k=2)


def _odd_cycle_witness(parent: list[int], u: int, w: int) -> tuple[int, ...]:
    # Walk both BFS-tree paths to the root, cut at the lowest common ancestor.
    path_u = [u]
    while parent[path_u[-1]] != -1:
        path_u.append(parent[path_u[-1]])
    path_w = [w]
    while parent[path_w[-1]] != -1:
        path_w.append(parent[path_w[-1]])
    ancestors_u = {x: i for i, x in enumerate(path_u)}
    for j, x in enumerate(path_w):
        if x in ancestors_u:
            i = ancestors_u[x]
            # u .. lca .. w, closed by the u-w edge; length i+j+1 is odd
            return tuple(path_u[: i + 1] + path_w[:j][::-1])
    raise AssertionError("BFS tree paths must meet")


def _adjacency_matrix(g: IntersectionGraph) -> tuple[bytearray, list[int]]:
    n = g.m
    adj = bytearray(n * n)
    for i, nbrs in enumerate(g.neighbors):
        for j in nbrs:
            adj[i * n + j] = 1
    return adj, g.degrees()


def graph_k_coloring(
    g: IntersectionGraph, k: int, cap: int = GRAPH_CAP
) -> EdgeClassColoring | None:
    """Exact: a proper k-class coloring of g, or None iff none exists.

    Backtracking with DSATUR vertex selection (max saturation, then max
    degree, then min index) and first-use color symmetry breaking; the
    first vertex chosen is forced to class 0.  Deterministic.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if g.m > cap:
        raise LimitExceeded("1-intersection graph", g.m, cap)
    adj, deg = _adjacency_matrix(g)
    colors = kernels.graph_color_k(g.m, adj, deg, k)
    if colors is None:
        return None
    return EdgeClassColoring(classes=tuple(colors), k=k)


def _greedy_clique(g: IntersectionGraph) -> list[int]:
    """A maximal clique, greedily: sound lower bound for the chromatic number."""
    if g.m == 0:
        return []
    deg = g.degrees()
    order = sorted(range(g.m), key=lambda v: (-deg[v], v))
    clique = [order[0]]
    members = {order[0]}
    for v in order[1:]:
        if all(u in g.neighbors[v] for u in members):
            clique.append(v)
            members.add(v)
    return clique


def graph_chromatic_number(g: IntersectionGraph, cap: int = GRAPH_CAP) -> int:
    """Exact chromatic number, searching upward from the greedy-clique bound."""
    if g.m > cap:
        raise LimitExceeded("1-intersection graph", g.m, cap)
    if g.m == 0:
        return 0
    k = max(1, len(_greedy_clique(g)))
    while graph_k_coloring(g, k, cap=cap) is None:
        k += 1
    return k


def _pair_clique_bound(h: Hypergraph) -> int:
    """Clique bound from the 2-uniform sub-hypergraph (a simple graph)."""
    pairs = [e for e in h.edges if len(e) == 2]
    if not pairs:
        return 0
    nbrs: dict[int, set[int]] = {}
    for a, b in pairs:
        nbrs.setdefault(a, set()).add(b)
        nbrs.setdefault(b, set()).add(a)
    order = sorted(nbrs, key=lambda v: (-len(nbrs[v]), v))
    clique = {order[0]}
    for v in order[1:]:
        if clique <= nbrs[v]:
            clique.add(v)
    return len(clique)


def hypergraph_k_coloring(
    h: Hypergraph, k: int, cap: int = VERTEX_CAP
) -> VertexColoring | None:
    """Exact: a proper k-coloring of the hypergraph, or None iff none exists.

    Backtracking over vertices in id order with monochromatic-edge pruning
    and first-use color symmetry breaking.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if h.n > cap:
        raise LimitExceeded("hypergraph vertex set", h.n, cap)
    colors = kernels.hypergraph_color_k(h.n, h.edges, k)
    if colors is None:
        return None
    return VertexColoring(colors=tuple(colors))


def hypergraph_chromatic_number(
    h: Hypergraph, cap: int = VERTEX_CAP
) -> tuple[int, VertexColoring]:
    """Exact chromatic number of the hypergraph plus a witness coloring."""
    if h.n > cap:
        raise LimitExceeded("hypergraph vertex set", h.n, cap)
    if h.n == 0:
        return 0, VertexColoring(colors=())
    lower = 1 if h.m == 0 else max(2, _pair_clique_bound(h))
    k = min(lower, h.n)
    while True:
        witness = hypergraph_k_coloring(h, k, cap=cap)
        if witness is not None:
            ok, _ = is_proper(h, witness)
            if not ok:
                raise AssertionError("exact solver returned an improper coloring")
            return k, witness
        k += 1
