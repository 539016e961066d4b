"""Independent reference implementations used as test oracles.

Everything here recomputes results from first principles (full scans,
exhaustive enumeration, plain index-order backtracking) so that agreement
with the library is meaningful.  Nothing imports the library's solvers
except the type constructors.
"""

from __future__ import annotations

import itertools

from hypercolor.core import Hypergraph, RecoloringTrace, build_hypergraph
from hypercolor.exact import OddCycle, bipartition
from hypercolor.core import one_intersection_graph, subhypergraph
from hypercolor.gen import distinct_edge_count, sample_edges
from hypercolor.rng import Xoshiro256StarStar, derive_seed


def naive_intersection_pairs(h: Hypergraph) -> set[frozenset[int]]:
    """All {i, j} with |edges[i] & edges[j]| == 1, by direct set intersection."""
    pairs = set()
    for i in range(h.m):
        for j in range(i + 1, h.m):
            if len(set(h.edges[i]) & set(h.edges[j])) == 1:
                pairs.add(frozenset((i, j)))
    return pairs


def naive_graph_chromatic(n: int, adj_pairs: set[frozenset[int]]) -> int:
    """Exact chromatic number by plain index-order backtracking.

    No saturation heuristic, no clique bounds, no symmetry breaking beyond
    trying colors in order; independent of the library's DSATUR solver.
    """
    if n == 0:
        return 0
    neighbors = [[] for _ in range(n)]
    for pair in adj_pairs:
        i, j = sorted(pair)
        neighbors[j].append(i)  # only earlier neighbors matter below

    def extend(k: int, assignment: list[int], v: int) -> bool:
        if v == n:
            return True
        for c in range(k):
            if all(assignment[u] != c for u in neighbors[v]):
                assignment[v] = c
                if extend(k, assignment, v + 1):
                    return True
        return False

    for k in range(1, n + 1):
        if extend(k, [0] * n, 0):
            return k
    raise AssertionError("unreachable: n colors always suffice")


def naive_graph_colorable_exhaustive(n: int, adj_pairs: set[frozenset[int]], k: int) -> bool:
    """Brute-force k-colorability over all k**n assignments (tiny n only)."""
    pairs = [tuple(sorted(p)) for p in adj_pairs]
    for assignment in itertools.product(range(k), repeat=n):
        if all(assignment[i] != assignment[j] for i, j in pairs):
            return True
    return False


def naive_hypergraph_chromatic(h: Hypergraph) -> int:
    """Exact chromatic number by exhaustive assignment enumeration.

    Fixes vertex 0 to color 0 (valid for the existence question by color
    permutation); everything else is tried.  Only for small n.
    """
    if h.m == 0:
        return 0 if h.n == 0 else 1
    for k in range(2, h.n + 1):
        for rest in itertools.product(range(k), repeat=h.n - 1):
            assignment = (0,) + rest
            if all(
                any(assignment[v] != assignment[e[0]] for v in e) for e in h.edges
            ):
                return k
    raise AssertionError("unreachable: n colors always suffice")


def replay_two_color(h: Hypergraph, trace: RecoloringTrace) -> tuple[int, ...]:
    """Re-run the documented repair process from the trace and verify it.

    Recomputes every step from first principles (full scans, no incremental
    counters) and asserts, step by step:

    * the trace's chosen edge is the queue head and is monochromatic when
      popped;
    * the flipped vertex is the lowest-index vertex of the head not yet
      recolored in the round (so no vertex is recolored twice);
    * the recorded newly-monochromatic set is exactly right, listed in
      ascending index order, and every member contains the flipped vertex
      and shares exactly one vertex with the head;
    * no edge is ever enqueued twice within a round;
    * the next queue is the old tail minus stale entries plus the new
      arrivals, in order;
    * within each round, edges monochromatic in the inserted edge's starting
      color lie on the inserted edge's side of the current 1-intersection
      graph's bipartition, and edges monochromatic in the other color lie on
      the other side.

    Returns the final color vector for comparison with the library's output.
    """
    colors = [0] * h.n

    def mono_color(edge: tuple[int, ...]) -> int | None:
        c = colors[edge[0]]
        return c if all(colors[v] == c for v in edge) else None

    round_iter = iter(trace.rounds)
    for inserted in range(h.m):
        edge = h.edges[inserted]
        if mono_color(edge) is None:
            continue  # arrival caused no repair; no round should be logged
        rnd = next(round_iter)
        assert rnd.inserted_edge == inserted
        assert rnd.initial_queue == (inserted,)

        current = list(range(inserted + 1))
        sub = subhypergraph(h, current)  # prefix, so indices are preserved
        split = bipartition(one_intersection_graph(sub))
        assert not isinstance(split, OddCycle)
        side = split.classes
        blue = mono_color(edge)

        queue = [inserted]
        ever_enqueued = {inserted}
        recolored: set[int] = set()
        for t, step in enumerate(rnd.steps):
            assert step.step == t
            head = queue[0]
            assert step.edge == head
            assert mono_color(h.edges[head]) is not None
            fresh = [v for v in h.edges[head] if v not in recolored]
            assert fresh, "head must keep an unrecolored vertex"
            assert step.vertex == fresh[0]
            recolored.add(step.vertex)
            was_mono = {i for i in current if mono_color(h.edges[i]) is not None}
            colors[step.vertex] = 1 - colors[step.vertex]
            newly = [
                i
                for i in current
                if i not in was_mono and mono_color(h.edges[i]) is not None
            ]
            assert tuple(newly) == step.became_monochromatic
            assert newly == sorted(newly)
            for i in newly:
                assert step.vertex in h.edges[i]
                assert len(set(h.edges[i]) & set(h.edges[head])) == 1
                assert i not in ever_enqueued, "edge enqueued twice"
                ever_enqueued.add(i)
            queue = [
                i for i in queue[1:] if mono_color(h.edges[i]) is not None
            ] + newly
            assert tuple(queue) == step.queue_after
            for i in current:
                c = mono_color(h.edges[i])
                if c is None:
                    continue
                if c == blue:
                    assert side[i] == side[inserted]
                else:
                    assert side[i] != side[inserted]
        assert not queue, "round must end with an empty queue"
        assert all(mono_color(h.edges[i]) is None for i in current)
    assert next(round_iter, None) is None, "trace has extra rounds"
    return tuple(colors)


def random_corpus(base_seed: int, count: int, n_range=(2, 12), m_range=(1, 12),
                  size_range=(2, 4)):
    """Yield ``count`` seeded random hypergraphs, skipping impossible draws.

    Mirrors the documented sampling scheme (per-instance seed, then n, m,
    then the edges) so instances are reproducible from ``base_seed`` alone.
    """
    produced = 0
    i = 0
    while produced < count:
        rng = Xoshiro256StarStar(derive_seed(base_seed, i))
        i += 1
        n = rng.randint(*n_range)
        m = rng.randint(*m_range)
        lo, hi = size_range
        hi = min(hi, n)
        if lo > hi or m > distinct_edge_count(n, lo, hi):
            continue
        yield build_hypergraph(n, sample_edges(rng, n, m, lo, hi))
        produced += 1


def lovasz_corpus(base_seed: int, count: int):
    """Hypergraphs whose 1-intersection graph is edgeless, by construction.

    Disjoint blocks of size >= 2 become edges; each block may also
    contribute one proper sub-edge of size >= 2.  Any two such edges share
    either nothing or at least two vertices, so no pair shares exactly one.
    """
    for i in range(count):
        rng = Xoshiro256StarStar(derive_seed(base_seed, i))
        blocks = rng.randint(1, 4)
        edges = []
        start = 0
        for _ in range(blocks):
            size = rng.randint(2, 5)
            block = tuple(range(start, start + size))
            edges.append(block)
            if size >= 3 and rng.randint(0, 1) == 1:
                sub_size = rng.randint(2, size - 1)
                edges.append(block[:sub_size])
            start += size
        yield build_hypergraph(start, edges)
