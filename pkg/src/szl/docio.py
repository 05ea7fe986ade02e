"""Plain-text graph documents.

One directive per line, ``#`` starts a comment::

    vertices 4
    edge 0 1 3
    edge 2 3 1
    boundary 5 5 5 5
    ell 5

``vertices`` must come before any ``edge``; each unordered pair appears at most once.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional

from szl.boundary import BoundarySpec
from szl.graph import Multigraph

_INT = re.compile(r"-?[0-9]+")


class GraphFileError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


@dataclass(frozen=True)
class GraphDocument:
    graph: Multigraph
    ell: Optional[int] = None
    # raw residues; turned into a BoundarySpec once l is known
    boundary: Optional[tuple[int, ...]] = None

    def boundary_spec(self, ell: int) -> BoundarySpec:
        if self.boundary is None:
            raise ValueError("document has no boundary")
        return BoundarySpec(ell, self.boundary)


def _ints(words: list[str], lineno: int) -> list[int]:
    out = []
    for w in words:
        if not _INT.fullmatch(w):
            raise GraphFileError(lineno, f"expected an integer, got {w!r}")
        out.append(int(w))
    return out


def parse_graph_file(text: str) -> GraphDocument:
    n: Optional[int] = None
    ell: Optional[int] = None
    boundary: Optional[tuple[int, ...]] = None
    boundary_line = 0
    edges: dict[tuple[int, int], int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        words = raw.split("#", 1)[0].split()
        if not words:
            continue
        key, args = words[0], words[1:]
        if key == "vertices":
            if n is not None:
                raise GraphFileError(lineno, "repeated 'vertices'")
            (n,) = _arity(_ints(args, lineno), 1, lineno, key)
            if n < 1:
                raise GraphFileError(lineno, "need at least one vertex")
        elif key == "ell":
            if ell is not None:
                raise GraphFileError(lineno, "repeated 'ell'")
            (ell,) = _arity(_ints(args, lineno), 1, lineno, key)
            if ell < 2:
                raise GraphFileError(lineno, "ell must be at least 2")
        elif key == "edge":
            if n is None:
                raise GraphFileError(lineno, "'edge' before 'vertices'")
            u, v, m = _arity(_ints(args, lineno), 3, lineno, key)
            if u == v:
                raise GraphFileError(lineno, f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFileError(lineno, f"vertex index out of range [0, {n})")
            if m < 0:
                raise GraphFileError(lineno, "negative multiplicity")
            pair = (min(u, v), max(u, v))
            if pair in edges:
                raise GraphFileError(lineno, f"duplicate pair {pair[0]} {pair[1]}")
            edges[pair] = m
        elif key == "boundary":
            if boundary is not None:
                raise GraphFileError(lineno, "repeated 'boundary'")
            boundary = tuple(_ints(args, lineno))
            boundary_line = lineno
        else:
            raise GraphFileError(lineno, f"unknown directive {key!r}")
    if n is None:
        raise GraphFileError(0, "missing 'vertices'")
    if boundary is not None:
        if len(boundary) != n:
            raise GraphFileError(boundary_line, f"boundary has {len(boundary)} values for {n} vertices")
        if ell is not None and any(not 0 <= b < 2 * ell for b in boundary):
            raise GraphFileError(boundary_line, f"boundary values must lie in [0, {2 * ell})")
    try:
        G = Multigraph.from_edges(n, ((u, v, m) for (u, v), m in edges.items()))
    except ValueError as exc:
        raise GraphFileError(0, str(exc)) from exc
    return GraphDocument(G, ell, boundary)


def _arity(values: list[int], k: int, lineno: int, key: str) -> list[int]:
    if len(values) != k:
        raise GraphFileError(lineno, f"'{key}' takes {k} value(s), got {len(values)}")
    return values


def format_document(doc: GraphDocument) -> str:
    lines = []
    if doc.ell is not None:
        lines.append(f"ell {doc.ell}")
    lines.append(f"vertices {doc.graph.n}")
    lines.extend(f"edge {u} {v} {m}" for u, v, m in doc.graph.edges())
    if doc.boundary is not None:
        lines.append("boundary " + " ".join(map(str, doc.boundary)))
    return "\n".join(lines) + "\n"
