"""Constructive colorers driven by the 1-intersection graph.

Three algorithms:

* two_color    -- 2-colors any hypergraph whose 1-intersection graph is
                  bipartite, by inserting edges one at a time and repairing
                  each monochromatic arrival with a queue of currently
                  monochromatic edges, flipping one fresh vertex per step.
* four_color   -- 4-colors any hypergraph whose 1-intersection graph is
                  4-colorable, by splitting the edges along a proper 4-class
                  coloring into two spanning sub-hypergraphs with bipartite
                  1-intersection graphs, 2-coloring each, and summing.
* greedy_color -- (k+1)-colors any hypergraph given a proper k-class
                  coloring of its 1-intersection graph, coloring vertices in
                  id order; each class can forbid at most one color.

The repair process is guaranteed to terminate without ever re-enqueueing an
edge or re-flipping a vertex within a round; those guarantees are enforced
as runtime checks and raised as InternalInvariantViolation if an
implementation bug ever breaks them.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    EdgeClassColoring,
    Hypergraph,
    IntersectionGraph,
    RecoloringTrace,
    RepairRound,
    RepairStep,
    VertexColoring,
    is_proper,
    one_intersection_graph,
    subhypergraph,
)
from .errors import (
    InternalInvariantViolation,
    InvalidClasses,
    NoFreeColor,
    NotBipartiteIntersection,
    NotFourColorableIntersection,
)
from .exact import GRAPH_CAP, OddCycle, bipartition, graph_k_coloring


def two_color(h: Hypergraph) -> tuple[VertexColoring, RecoloringTrace]:
    """Proper 2-coloring of a hypergraph with bipartite 1-intersection graph.

    Raises NotBipartiteIntersection (with an odd-cycle witness) otherwise.
    Deterministic: edges are inserted in index order; each repair step flips
    the lowest-index vertex of the queue head not yet recolored in the
    current round; newly monochromatic edges are appended in ascending index
    order (the queue is strict FIFO).
    """
    split = bipartition(one_intersection_graph(h))
    if isinstance(split, OddCycle):
        raise NotBipartiteIntersection(split.edges)

    colors = [0] * h.n
    edges = h.edges
    sizes = [len(e) for e in edges]
    # ones[i]: vertices of edge i currently colored 1; maintained incrementally
    ones = [0] * h.m
    incidence: list[list[int]] = [[] for _ in range(h.n)]
    rounds: list[RepairRound] = []

    for inserted in range(h.m):
        edge = edges[inserted]
        ones[inserted] = sum(colors[v] for v in edge)
        for v in edge:
            incidence[v].append(inserted)
        if 0 < ones[inserted] < sizes[inserted]:
            continue
        rounds.append(_repair_round(inserted, edges, colors, ones, sizes, incidence))

    coloring = VertexColoring(colors=tuple(colors))
    ok, witnesses = is_proper(h, coloring)
    if not ok:
        raise InternalInvariantViolation(
            f"repair process finished with monochromatic edges {witnesses}"
        )
    return coloring, RecoloringTrace(rounds=tuple(rounds))


def _repair_round(
    inserted: int,
    edges: tuple[tuple[int, ...], ...],
    colors: list[int],
    ones: list[int],
    sizes: list[int],
    incidence: list[list[int]],
) -> RepairRound:
    def mono(i: int) -> bool:
        return ones[i] == 0 or ones[i] == sizes[i]

    queue: list[int] = [inserted]
    ever_enqueued = {inserted}
    recolored: set[int] = set()
    steps: list[RepairStep] = []
    t = 0
    while queue:
        head = queue[0]
        vertex = next((v for v in edges[head] if v not in recolored), -1)
        if vertex == -1:
            # Guaranteed impossible for bipartite input: every queue head
            # retains at least one never-recolored vertex.
            raise InternalInvariantViolation(
                f"queue head {head} has no unrecolored vertex left (round {inserted}, step {t})"
            )
        recolored.add(vertex)
        old = colors[vertex]
        colors[vertex] = 1 - old
        delta = 1 if old == 0 else -1
        newly_mono: list[int] = []
        # incidence lists hold inserted edges only, in ascending index order
        for i in incidence[vertex]:
            was = mono(i)
            ones[i] += delta
            if not was and mono(i):
                newly_mono.append(i)
        for i in newly_mono:
            if i in ever_enqueued:
                # Guaranteed impossible for bipartite input: no edge enters
                # the queue twice within a round.
                raise InternalInvariantViolation(
                    f"edge {i} re-enqueued (round {inserted}, step {t})"
                )
            ever_enqueued.add(i)
        queue = [i for i in queue[1:] if mono(i)] + newly_mono
        steps.append(
            RepairStep(
                step=t,
                edge=head,
                vertex=vertex,
                became_monochromatic=tuple(newly_mono),
                queue_after=tuple(queue),
            )
        )
        t += 1
    return RepairRound(inserted_edge=inserted, initial_queue=(inserted,), steps=tuple(steps))


@dataclass(frozen=True)
class FourColorResult:
    """A proper <= 4-coloring plus the decomposition that produced it.

    ``coloring[v] == low_coloring[v] + high_coloring[v]`` for every vertex:
    the low half contributes bit 0 (colors {0, 1}), the high half bit 1
    (colors {0, 2}).  ``edge_classes`` is the proper 4-class coloring of the
    1-intersection graph that split the edges; classes {0, 1} went to the
    low half, {2, 3} to the high half.
    """

    coloring: VertexColoring
    low_coloring: VertexColoring
    high_coloring: VertexColoring
    edge_classes: EdgeClassColoring
    low_trace: RecoloringTrace
    high_trace: RecoloringTrace


def four_color(h: Hypergraph, cap: int = GRAPH_CAP) -> FourColorResult:
    """Proper <= 4-coloring of a hypergraph with 4-colorable 1-intersection graph.

    Raises NotFourColorableIntersection otherwise, and propagates
    LimitExceeded from the exact 4-coloring of the 1-intersection graph.
    When the 1-intersection graph needs fewer than 4 classes the result only
    improves; the construction is unchanged.
    """
    g = one_intersection_graph(h)
    classes = graph_k_coloring(g, 4, cap=cap)
    if classes is None:
        raise NotFourColorableIntersection(
            "1-intersection graph has no proper 4-coloring"
        )
    low_edges = [i for i in range(h.m) if classes[i] < 2]
    high_edges = [i for i in range(h.m) if classes[i] >= 2]
    low, low_trace = two_color(subhypergraph(h, low_edges))
    high_bit, high_trace = two_color(subhypergraph(h, high_edges))
    high = VertexColoring(colors=tuple(2 * c for c in high_bit.colors))
    combined = VertexColoring(
        colors=tuple(a + b for a, b in zip(low.colors, high.colors))
    )
    ok, witnesses = is_proper(h, combined)
    if not ok:
        # The sum of proper colorings of the two halves cannot leave a
        # monochromatic edge; reaching this is an implementation bug.
        raise InternalInvariantViolation(
            f"combined coloring left monochromatic edges {witnesses}"
        )
    return FourColorResult(
        coloring=combined,
        low_coloring=low,
        high_coloring=high,
        edge_classes=classes,
        low_trace=low_trace,
        high_trace=high_trace,
    )


def validate_edge_classes(g: IntersectionGraph, classes: EdgeClassColoring) -> None:
    """Raise InvalidClasses unless adjacent edges all receive distinct classes."""
    if len(classes) != g.m:
        raise InvalidClasses(f"classes cover {len(classes)} edges, graph has {g.m}")
    for i, nbrs in enumerate(g.neighbors):
        for j in nbrs:
            if i < j and classes[i] == classes[j]:
                raise InvalidClasses(
                    f"edges {i} and {j} share exactly one vertex but both have class {classes[i]}"
                )


def greedy_color(h: Hypergraph, classes: EdgeClassColoring) -> VertexColoring:
    """Proper (k+1)-coloring from a proper k-class 1-intersection coloring.

    Vertices are colored in id order.  An edge becomes critical at its last
    uncolored vertex when the already-colored rest is monochromatic; two
    critical edges of the same class meet the vertex and (being non-adjacent
    in the 1-intersection graph) share a second, already-colored vertex, so
    they forbid the same color.  At most k colors are ever forbidden, and
    the smallest free color in 0..k is taken.
    """
    validate_edge_classes(one_intersection_graph(h), classes)
    k = classes.k
    # closing[v]: (class, rest-of-edge) for edges whose maximum vertex is v
    closing: list[list[tuple[int, tuple[int, ...]]]] = [[] for _ in range(h.n)]
    for i, e in enumerate(h.edges):
        closing[e[-1]].append((classes[i], e[:-1]))
    colors = [0] * h.n
    for v in range(h.n):
        forbidden: set[int] = set()
        for _, rest in closing[v]:
            c0 = colors[rest[0]]
            if all(colors[w] == c0 for w in rest):
                forbidden.add(c0)
        if len(forbidden) > k:
            raise InternalInvariantViolation(
                f"{len(forbidden)} colors forbidden at vertex {v} with only {k} classes"
            )
        color = next((c for c in range(k + 1) if c not in forbidden), -1)
        if color == -1:
            raise NoFreeColor(f"no color in 0..{k} available at vertex {v}")
        colors[v] = color
    coloring = VertexColoring(colors=tuple(colors))
    ok, witnesses = is_proper(h, coloring)
    if not ok:
        raise InternalInvariantViolation(
            f"greedy coloring left monochromatic edges {witnesses}"
        )
    return coloring
