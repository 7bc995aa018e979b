"""Plain-text formats for triangulations, embeddings, graphs, and scripts.

All formats are line based.  '#' starts a comment, blank lines are
ignored, vertices are numbered 1..V on disk and 0..V-1 in memory.

triangulation (.tri)        p tri V F
                            k c1 .. cV          optional, colors in 1..3
                            f i j k             F times

even embedding (.emb)       p emb V E W
                            n b1 .. bV          parts, bits 0/1
                            e i j               E times
                            w v1 .. vk          W times, closed walks

bipartite graph (.bip)      p bip V E
                            n b1 .. bV
                            e i j               E times

operation script (.ops)     one op per line:
                            add-leaf v w        split-edge u v p q
                            add-corner x y z w  del-leaf w
                            smooth-path u p q v del-corner w

Parsers report malformed text as ParseError with a line number; semantic
failures (a face list that is no surface, walks that close nothing) keep
their own exception types.  Writers renumber vertices contiguously in
sorted order and emit sorted faces and edges.
"""

from __future__ import annotations

from typing import Sequence

from .bipartite import BipGraph, BipOp, BipOpKind, OP_ARITY
from .embeddings import EvenEmbedding
from .errors import ParseError
from .surface import Coloring, Triangulation, validate


def _significant_lines(text: str) -> list[tuple[int, list[str]]]:
    out = []
    for ln, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            out.append((ln, body.split()))
    return out


def _int_fields(ln: int, fields: Sequence[str], what: str) -> list[int]:
    try:
        return [int(f) for f in fields]
    except ValueError:
        raise ParseError(f"line {ln}: {what} must be integers, got {fields!r}")


def _vertex(ln: int, value: int, count: int) -> int:
    if not 1 <= value <= count:
        raise ParseError(f"line {ln}: vertex {value} out of range 1..{count}")
    return value - 1


def _header(lines, tag: str, argc: int) -> tuple[list[int], list]:
    if not lines:
        raise ParseError("empty input")
    ln, fields = lines[0]
    if len(fields) != 2 + argc or fields[0] != "p" or fields[1] != tag:
        raise ParseError(
            f"line {ln}: expected header 'p {tag}{' N' * argc}', got {' '.join(fields)!r}"
        )
    return _int_fields(ln, fields[2:], "header counts"), lines[1:]


# -- triangulations ------------------------------------------------------------

def parse_tri(text: str) -> tuple[Triangulation, Coloring | None]:
    """Parse a .tri document; the optional coloring is returned as given.

    Surface validity is enforced (the face list must close up a surface);
    properness of the coloring is the caller's concern.
    """
    (nv, nf), rest = _header(_significant_lines(text), "tri", 2)
    faces: list[tuple[int, int, int]] = []
    colors: list[int] | None = None
    for ln, fields in rest:
        if fields[0] == "k":
            if colors is not None:
                raise ParseError(f"line {ln}: second 'k' line")
            vals = _int_fields(ln, fields[1:], "colors")
            if len(vals) != nv:
                raise ParseError(f"line {ln}: expected {nv} colors, got {len(vals)}")
            if not all(1 <= c <= 3 for c in vals):
                raise ParseError(f"line {ln}: colors must lie in 1..3")
            colors = vals
        elif fields[0] == "f":
            vals = _int_fields(ln, fields[1:], "face vertices")
            if len(vals) != 3:
                raise ParseError(f"line {ln}: a face needs 3 vertices, got {len(vals)}")
            faces.append(tuple(_vertex(ln, v, nv) for v in vals))
        else:
            raise ParseError(f"line {ln}: unknown record {fields[0]!r}")
    if len(faces) != nf:
        raise ParseError(f"header promises {nf} faces, found {len(faces)}")
    tri = validate(faces)
    if tri.vertex_count != nv:
        raise ParseError(
            f"header promises {nv} vertices, faces use {tri.vertex_count}"
        )
    col = Coloring({v: colors[v] - 1 for v in range(nv)}) if colors else None
    return tri, col


def format_tri(tri: Triangulation, col: Coloring | None = None) -> str:
    order = {v: i for i, v in enumerate(sorted(tri.vertices))}
    lines = [f"p tri {tri.vertex_count} {tri.face_count}"]
    if col is not None:
        ordered = sorted(tri.vertices, key=order.__getitem__)
        lines.append("k " + " ".join(str(col[v] + 1) for v in ordered))
    for face in sorted(tuple(sorted(order[v] for v in f)) for f in tri.faces):
        lines.append("f " + " ".join(str(v + 1) for v in face))
    return "\n".join(lines) + "\n"


# -- bipartite graphs ----------------------------------------------------------

def _parse_parts_edges(nv, ne, rest, allow):
    parts: list[int] | None = None
    edges: list[tuple[int, int]] = []
    extra = []
    for ln, fields in rest:
        if fields[0] == "n":
            if parts is not None:
                raise ParseError(f"line {ln}: second 'n' line")
            vals = _int_fields(ln, fields[1:], "part bits")
            if len(vals) != nv:
                raise ParseError(f"line {ln}: expected {nv} bits, got {len(vals)}")
            if not all(b in (0, 1) for b in vals):
                raise ParseError(f"line {ln}: parts must be 0 or 1")
            parts = vals
        elif fields[0] == "e":
            vals = _int_fields(ln, fields[1:], "edge endpoints")
            if len(vals) != 2:
                raise ParseError(f"line {ln}: an edge needs 2 endpoints")
            edges.append(tuple(_vertex(ln, v, nv) for v in vals))
        elif fields[0] in allow:
            extra.append((ln, fields))
        else:
            raise ParseError(f"line {ln}: unknown record {fields[0]!r}")
    if parts is None:
        raise ParseError("missing 'n' parts line")
    if len(edges) != ne:
        raise ParseError(f"header promises {ne} edges, found {len(edges)}")
    return parts, edges, extra


def parse_bip(text: str) -> BipGraph:
    (nv, ne), rest = _header(_significant_lines(text), "bip", 2)
    parts, edges, _ = _parse_parts_edges(nv, ne, rest, allow=())
    return BipGraph({v: parts[v] for v in range(nv)}, edges)


def format_bip(g: BipGraph) -> str:
    order = {v: i for i, v in enumerate(sorted(g.parts))}
    lines = [f"p bip {len(g.parts)} {g.edge_count()}"]
    lines.append("n " + " ".join(str(g.part(v)) for v in sorted(g.parts)))
    for u, v in sorted(tuple(sorted((order[u], order[v]))) for u, v in g.edges):
        lines.append(f"e {u + 1} {v + 1}")
    return "\n".join(lines) + "\n"


# -- even embeddings -----------------------------------------------------------

def parse_emb(text: str) -> EvenEmbedding:
    (nv, ne, nw), rest = _header(_significant_lines(text), "emb", 3)
    parts, edges, extra = _parse_parts_edges(nv, ne, rest, allow=("w",))
    walks = []
    for ln, fields in extra:
        vals = _int_fields(ln, fields[1:], "walk vertices")
        if len(vals) < 4:
            raise ParseError(f"line {ln}: a walk needs at least 4 vertices")
        walks.append(tuple(_vertex(ln, v, nv) for v in vals))
    if len(walks) != nw:
        raise ParseError(f"header promises {nw} walks, found {len(walks)}")
    return EvenEmbedding(BipGraph({v: parts[v] for v in range(nv)}, edges), walks)


def format_emb(emb: EvenEmbedding) -> str:
    g = emb.graph
    order = {v: i for i, v in enumerate(sorted(g.parts))}
    lines = [f"p emb {len(g.parts)} {g.edge_count()} {len(emb.walks)}"]
    lines.append("n " + " ".join(str(g.part(v)) for v in sorted(g.parts)))
    for u, v in sorted(tuple(sorted((order[u], order[v]))) for u, v in g.edges):
        lines.append(f"e {u + 1} {v + 1}")
    for walk in emb.walks:
        lines.append("w " + " ".join(str(order[v] + 1) for v in walk))
    return "\n".join(lines) + "\n"


# -- operation scripts ---------------------------------------------------------

_KIND_BY_NAME = {k.value: k for k in BipOpKind}


def parse_bip_script(text: str) -> list[BipOp]:
    """Parse operation lines; vertex numbers are 1-based and unbounded
    above (new vertices may use any unused number)."""
    ops = []
    for ln, fields in _significant_lines(text):
        kind = _KIND_BY_NAME.get(fields[0])
        if kind is None:
            raise ParseError(f"line {ln}: unknown operation {fields[0]!r}")
        vals = _int_fields(ln, fields[1:], "operation arguments")
        if len(vals) != OP_ARITY[kind]:
            raise ParseError(
                f"line {ln}: {kind.value} takes {OP_ARITY[kind]} arguments, "
                f"got {len(vals)}"
            )
        if any(v < 1 for v in vals):
            raise ParseError(f"line {ln}: vertex numbers start at 1")
        ops.append(BipOp(kind, tuple(v - 1 for v in vals)))
    return ops


def format_bip_script(ops: Sequence[BipOp]) -> str:
    return "".join(str(op) + "\n" for op in ops)
