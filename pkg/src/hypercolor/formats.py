"""Text file formats for hypergraphs and colorings.

Hypergraph format (UTF-8, LF newlines):

    # comment lines start with '#'
    p hyper <n> <m>          (optional header; n vertices, m edge lines)
    e <v1> <v2> ... <vk>     (one edge per line, 0-based vertex ids)

Without a header, n is inferred as 1 + the largest vertex id.  The header m
counts edge lines before deduplication.

Coloring format: one line per vertex, ``<vertex_id> <color_index>``, sorted
by vertex id and covering 0..n-1 with no gaps.

Both parsers reject malformed input with a line-numbered FormatError.
Writers emit byte-stable output: same object, same bytes.
"""

from __future__ import annotations

import os
from typing import TextIO

from .core import Hypergraph, VertexColoring, build_hypergraph
from .errors import FormatError


def parse_hypergraph(text: str) -> Hypergraph:
    header: tuple[int, int] | None = None
    raw_edges: list[list[int]] = []
    edge_lines: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if fields[0] == "p":
            if header is not None:
                raise FormatError(lineno, "duplicate header line")
            if raw_edges:
                raise FormatError(lineno, "header must precede edge lines")
            if len(fields) != 4 or fields[1] != "hyper":
                raise FormatError(lineno, f"malformed header {line!r}; expected 'p hyper <n> <m>'")
            try:
                n, m = int(fields[2]), int(fields[3])
            except ValueError:
                raise FormatError(lineno, f"non-integer counts in header {line!r}") from None
            if n < 0 or m < 0:
                raise FormatError(lineno, "header counts must be non-negative")
            header = (n, m)
        elif fields[0] == "e":
            try:
                ids = [int(f) for f in fields[1:]]
            except ValueError:
                raise FormatError(lineno, f"non-integer vertex id in {line!r}") from None
            if len(set(ids)) < 2:
                raise FormatError(
                    lineno, f"hyperedge {line!r} needs at least 2 distinct vertices"
                )
            if min(ids) < 0:
                raise FormatError(lineno, f"negative vertex id in {line!r}")
            if header is not None and max(ids) >= header[0]:
                raise FormatError(
                    lineno, f"vertex {max(ids)} outside 0..{header[0] - 1} declared in header"
                )
            raw_edges.append(ids)
            edge_lines.append(lineno)
        else:
            raise FormatError(lineno, f"unrecognized line {line!r}")
    if header is not None:
        n, m = header
        if m != len(raw_edges):
            raise FormatError(
                edge_lines[-1] if edge_lines else 1,
                f"header declares {m} edges but file has {len(raw_edges)}",
            )
    else:
        n = 1 + max((max(e) for e in raw_edges), default=-1)
    return build_hypergraph(n, raw_edges)


def emit_hypergraph(h: Hypergraph) -> str:
    lines = [f"p hyper {h.n} {h.m}"]
    lines.extend("e " + " ".join(map(str, e)) for e in h.edges)
    return "\n".join(lines) + "\n"


def parse_coloring(text: str) -> VertexColoring:
    colors: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise FormatError(lineno, f"expected '<vertex_id> <color_index>', got {line!r}")
        try:
            vid, color = int(fields[0]), int(fields[1])
        except ValueError:
            raise FormatError(lineno, f"non-integer field in {line!r}") from None
        if vid != len(colors):
            raise FormatError(
                lineno,
                f"vertex ids must be sorted and gap-free; expected {len(colors)}, got {vid}",
            )
        if color < 0:
            raise FormatError(lineno, f"negative color index in {line!r}")
        colors.append(color)
    return VertexColoring(colors=tuple(colors))


def emit_coloring(c: VertexColoring) -> str:
    return "".join(f"{v} {color}\n" for v, color in enumerate(c.colors))


def read_hypergraph(path: str | os.PathLike) -> Hypergraph:
    with open(path, encoding="utf-8") as f:
        return parse_hypergraph(f.read())


def write_text(path_or_file: str | os.PathLike | TextIO, text: str) -> None:
    if isinstance(path_or_file, (str, os.PathLike)):
        with open(path_or_file, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
    else:
        path_or_file.write(text)


def read_coloring(path: str | os.PathLike) -> VertexColoring:
    with open(path, encoding="utf-8") as f:
        return parse_coloring(f.read())
