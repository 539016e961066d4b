"""Deterministic instance generators: named families and a seeded random sampler.

The named families pin down the extremal behaviour of the chromatic numbers:

* complete_graph(2l+1)      -- both chromatic numbers equal 2l+1;
* complete_graph(2l)        -- 1-intersection graph needs 2l-1 classes but
                               the hypergraph needs 2l colors (the negative
                               instances for odd class counts);
* complete_plus_triple(2l)  -- adding one 3-edge lifts both numbers to 2l;
* universal_vertex_family   -- 1-intersection graph is a clique of any size
                               while the hypergraph stays 2-colorable;
* fano_plane                -- 7 pairwise 1-intersecting 3-edges, 3-chromatic.
"""

from __future__ import annotations

import math
from itertools import combinations

from .core import Hypergraph, build_hypergraph
from .errors import OddOrder, Unsatisfiable
from .rng import Xoshiro256StarStar


def complete_graph(n: int) -> Hypergraph:
    """All pairs on n vertices as 2-edges, lexicographic order."""
    if n < 2:
        raise ValueError("complete graph needs n >= 2")
    return Hypergraph(n=n, edges=tuple(combinations(range(n), 2)))


def complete_plus_triple(n: int) -> Hypergraph:
    """The complete graph on an even n plus the 3-edge {0, 1, 2}."""
    if n < 4 or n % 2 != 0:
        raise OddOrder(f"need an even n >= 4, got {n}")
    base = complete_graph(n)
    return Hypergraph(n=n, edges=base.edges + ((0, 1, 2),))


def universal_vertex_family(m: int, size: int = 3) -> Hypergraph:
    """m edges of the given size, pairwise sharing exactly the vertex 0.

    Edge i is {0} plus a fresh block of size-1 vertices, so the
    1-intersection graph is the complete graph on m vertices.
    """
    if m < 1:
        raise ValueError("need at least one edge")
    if size < 2:
        raise ValueError("edges need size >= 2")
    block = size - 1
    edges = tuple(
        (0,) + tuple(range(1 + i * block, 1 + (i + 1) * block)) for i in range(m)
    )
    return Hypergraph(n=1 + m * block, edges=edges)


def fano_plane() -> Hypergraph:
    """The 7 lines of the Fano plane: {i, i+1, i+3} mod 7, i = 0..6."""
    edges = tuple(tuple(sorted(((i) % 7, (i + 1) % 7, (i + 3) % 7))) for i in range(7))
    return Hypergraph(n=7, edges=edges)


def distinct_edge_count(n: int, min_size: int, max_size: int) -> int:
    """Number of distinct hyperedges with sizes in [min_size, max_size]."""
    return sum(math.comb(n, s) for s in range(min_size, max_size + 1))


def sample_edges(
    rng: Xoshiro256StarStar, n: int, m: int, min_size: int, max_size: int
) -> list[tuple[int, ...]]:
    """Draw m distinct edges from an already-seeded generator.

    Contract (see rng module for the generator itself): edges are drawn
    sequentially; each draw takes a size s = randint(min_size, max_size),
    then collects s distinct vertices by repeated below(n) draws (repeats
    skipped), and sorts them; a drawn edge equal to an earlier one is
    discarded and the draw restarts, size included.
    """
    if not 2 <= min_size <= max_size <= n:
        raise ValueError(f"need 2 <= min_size <= max_size <= n, got {min_size}..{max_size} on n={n}")
    if m < 1:
        raise ValueError("need at least one edge")
    available = distinct_edge_count(n, min_size, max_size)
    if m > available:
        raise Unsatisfiable(
            f"asked for {m} distinct edges but only {available} exist "
            f"(n={n}, sizes {min_size}..{max_size})"
        )
    seen: set[tuple[int, ...]] = set()
    edges: list[tuple[int, ...]] = []
    while len(edges) < m:
        s = rng.randint(min_size, max_size)
        chosen: list[int] = []
        while len(chosen) < s:
            v = rng.below(n)
            if v not in chosen:
                chosen.append(v)
        edge = tuple(sorted(chosen))
        if edge in seen:
            continue
        seen.add(edge)
        edges.append(edge)
    return edges


def random_hypergraph(
    n: int, m: int, min_size: int, max_size: int, seed: int
) -> Hypergraph:
    """m distinct random edges with sizes uniform in [min_size, max_size].

    Fully reproducible: the draw sequence is pinned by the rng module's
    generator contract and the sampling order documented on sample_edges.
    """
    rng = Xoshiro256StarStar(seed)
    return build_hypergraph(n, sample_edges(rng, n, m, min_size, max_size))
