"""Canonical data types: hypergraphs, colorings, and the 1-intersection graph.

Conventions used throughout the package:

* vertices are ids ``0..n-1``; hyperedges are sorted duplicate-free tuples;
* hyperedge identity is the index in the deduplicated, stable ingest order
  (traces and class colorings always refer to indices, never to contents);
* every type is immutable after construction, so instances can be shared
  freely between concurrent workers.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

from .errors import EdgeTooSmall, VertexOutOfRange


@dataclass(frozen=True)
class Hypergraph:
    """A vertex set ``0..n-1`` plus an ordered list of hyperedges.

    Invariants (enforced by build_hypergraph): every edge has >= 2 distinct
    vertices, all ids are < n, no two edges are equal as sets, and each edge
    tuple is sorted ascending.
    """

    n: int
    edges: tuple[tuple[int, ...], ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    def incidence(self) -> list[list[int]]:
        """Per-vertex lists of incident edge indices, each ascending."""
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for i, e in enumerate(self.edges):
            for v in e:
                inc[v].append(i)
        return inc


@dataclass(frozen=True)
class IntersectionGraph:
    """Simple graph on hyperedge indices: i ~ j iff |edges[i] & edges[j]| == 1."""

    m: int
    neighbors: tuple[tuple[int, ...], ...]

    @property
    def edge_count(self) -> int:
        return sum(len(nb) for nb in self.neighbors) // 2

    def adjacent(self, i: int, j: int) -> bool:
        return j in self.neighbors[i]

    def degrees(self) -> list[int]:
        return [len(nb) for nb in self.neighbors]


@dataclass(frozen=True)
class VertexColoring:
    """A total map vertex id -> color index.

    ``k`` is an upper-bound witness on the number of colors (1 + max color,
    0 for the empty vertex set); color indices need not be contiguous.
    """

    colors: tuple[int, ...]
    k: int = field(default=-1)

    def __post_init__(self) -> None:
        if any(c < 0 for c in self.colors):
            raise ValueError("color indices must be non-negative")
        if self.k == -1:
            object.__setattr__(self, "k", 1 + max(self.colors) if self.colors else 0)

    def __getitem__(self, v: int) -> int:
        return self.colors[v]

    def __len__(self) -> int:
        return len(self.colors)


@dataclass(frozen=True)
class EdgeClassColoring:
    """A total map hyperedge index -> class index, with ``k`` declared classes.

    Proper means adjacent hyperedges in the 1-intersection graph receive
    distinct classes; not every class need be used.
    """

    classes: tuple[int, ...]
    k: int

    def __post_init__(self) -> None:
        if any(c < 0 or c >= self.k for c in self.classes):
            raise ValueError("class indices must lie in [0, k)")

    def __getitem__(self, i: int) -> int:
        return self.classes[i]

    def __len__(self) -> int:
        return len(self.classes)


@dataclass(frozen=True)
class RepairStep:
    """One step of a repair round: the queue head, the vertex flipped, and the fallout."""

    step: int
    edge: int
    vertex: int
    became_monochromatic: tuple[int, ...]
    queue_after: tuple[int, ...]


@dataclass(frozen=True)
class RepairRound:
    """The queue process run after inserting one edge that arrived monochromatic."""

    inserted_edge: int
    initial_queue: tuple[int, ...]
    steps: tuple[RepairStep, ...]


@dataclass(frozen=True)
class RecoloringTrace:
    """Step log of the 2-coloring repair process, for assertions and diagnostics."""

    rounds: tuple[RepairRound, ...]


def build_hypergraph(n: int, raw_edges: list[list[int]] | tuple | list) -> Hypergraph:
    """Validate, sort, and deduplicate raw edges into a Hypergraph.

    Duplicate edges (as sets) are dropped with a warning, keeping the first
    occurrence: duplicates can never be 1-intersecting with each other and
    only inflate the instance.  Raises EdgeTooSmall for edges with < 2
    distinct vertices and VertexOutOfRange for ids >= n or < 0.
    """
    if n < 0:
        raise ValueError("vertex count must be >= 0")
    seen: set[tuple[int, ...]] = set()
    edges: list[tuple[int, ...]] = []
    for raw in raw_edges:
        edge = tuple(sorted(set(raw)))
        if len(edge) < 2:
            raise EdgeTooSmall(f"hyperedge {sorted(raw)} has fewer than 2 distinct vertices")
        if edge[0] < 0 or edge[-1] >= n:
            bad = edge[0] if edge[0] < 0 else edge[-1]
            raise VertexOutOfRange(f"vertex {bad} outside 0..{n - 1}")
        if edge in seen:
            warnings.warn(f"duplicate hyperedge {list(edge)} ignored", stacklevel=2)
            continue
        seen.add(edge)
        edges.append(edge)
    return Hypergraph(n=n, edges=tuple(edges))


def _shares_exactly_one(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    # Sorted-merge intersection count with early exit at 2.
    i = j = count = 0
    la, lb = len(a), len(b)
    while i < la and j < lb:
        x, y = a[i], b[j]
        if x == y:
            count += 1
            if count == 2:
                return False
            i += 1
            j += 1
        elif x < y:
            i += 1
        else:
            j += 1
    return count == 1


def one_intersection_graph(h: Hypergraph) -> IntersectionGraph:
    """The graph on edge indices joining pairs that share exactly one vertex."""
    m = h.m
    neighbors: list[list[int]] = [[] for _ in range(m)]
    for i in range(m):
        ei = h.edges[i]
        for j in range(i + 1, m):
            if _shares_exactly_one(ei, h.edges[j]):
                neighbors[i].append(j)
                neighbors[j].append(i)
    return IntersectionGraph(m=m, neighbors=tuple(tuple(nb) for nb in neighbors))


def is_proper(h: Hypergraph, coloring: VertexColoring) -> tuple[bool, list[int]]:
    """Whether no hyperedge is monochromatic; returns witnesses when false."""
    if len(coloring) != h.n:
        raise ValueError(f"coloring covers {len(coloring)} vertices, hypergraph has {h.n}")
    colors = coloring.colors
    mono = [
        i
        for i, e in enumerate(h.edges)
        if all(colors[v] == colors[e[0]] for v in e)
    ]
    return (not mono), mono


def subhypergraph(h: Hypergraph, edge_indices: list[int] | tuple[int, ...]) -> Hypergraph:
    """Spanning sub-hypergraph keeping the given edges (same vertex set)."""
    return Hypergraph(n=h.n, edges=tuple(h.edges[i] for i in edge_indices))
