"""Exception types shared across the package."""

from __future__ import annotations


class HypercolorError(Exception):
    """Base class for all errors raised by this package."""


class EdgeTooSmall(HypercolorError, ValueError):
    """A hyperedge has fewer than 2 distinct vertices."""


class VertexOutOfRange(HypercolorError, ValueError):
    """A hyperedge references a vertex id >= n."""


class FormatError(HypercolorError, ValueError):
    """A text-format file is malformed.

    Carries the 1-based line number of the offending line.
    """

    def __init__(self, line: int, message: str) -> None:
        self.line = line
        super().__init__(f"line {line}: {message}")


class LimitExceeded(HypercolorError, RuntimeError):
    """An exact solver was asked to exceed its configured size cap.

    Never a silent fallback: callers must either raise the cap or treat the
    instance as out of reach.
    """

    def __init__(self, what: str, actual: int, cap: int) -> None:
        self.what = what
        self.actual = actual
        self.cap = cap
        super().__init__(f"{what} has size {actual}, exceeding the exact-solver cap {cap}")


class NotBipartiteIntersection(HypercolorError):
    """The hypergraph's 1-intersection graph is not bipartite.

    ``odd_cycle`` is a witness: hyperedge indices forming an odd cycle in the
    1-intersection graph.
    """

    def __init__(self, odd_cycle: tuple[int, ...]) -> None:
        self.odd_cycle = odd_cycle
        super().__init__(
            "1-intersection graph is not bipartite; odd cycle through hyperedges "
            + " -> ".join(map(str, odd_cycle))
        )


class NotFourColorableIntersection(HypercolorError):
    """The hypergraph's 1-intersection graph admits no proper 4-coloring."""


class InvalidClasses(HypercolorError, ValueError):
    """An edge-class assignment is not a proper coloring of the 1-intersection graph."""


class NoFreeColor(HypercolorError, RuntimeError):
    """Greedy coloring found no available color at some vertex.

    Unreachable when the supplied classes properly color the 1-intersection
    graph; firing on validated input would falsify the k+1 bound argument.
    """


class Unsatisfiable(HypercolorError, ValueError):
    """A random sample was requested with more distinct edges than exist."""


class OddOrder(HypercolorError, ValueError):
    """A family constructor requiring an even vertex count got an odd one."""


class InternalInvariantViolation(HypercolorError, RuntimeError):
    """A runtime assertion backed by a proved statement fired.

    Signals an implementation bug, never a property of the input.
    """
