"""Canonical codes for triangulations and isomorphism testing.

The code is flag based: a flag is a (face, directed edge of that face) pair.
Starting from a flag, a breadth-first sweep over the face-adjacency graph
relabels vertices in first-touch order and emits each visited face as three
labels; crossing an edge flips the traversal direction, so a fixed local
orientation propagates.  The face stream alone reconstructs the face set, so
two triangulations share a code exactly when some flag-to-flag bijection
matches them up, which is exactly isomorphism.  Taking the lexicographic
minimum over all 6F start flags (both directions of every face edge, which
also covers the two local orientations on non-orientable surfaces) removes
the dependence on vertex numbering.

Color handling appends one byte per relabeled vertex after the face stream;
the stream length is fixed by (V, F), so byte-wise comparison stays
lexicographic on (faces, colors).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import permutations

from .errors import MissingColoring
from .surface import Coloring, Triangulation, edge_key, validate


class ColorMode(enum.Enum):
    IGNORE = "ignore"
    FIXED = "fixed"
    UP_TO_PERMUTATION = "up-to-permutation"


_COLOR_PERMS = tuple(permutations(range(3)))


@dataclass(frozen=True, order=True)
class CanonicalCode:
    """Representation-independent byte form of a triangulation."""

    mode: str
    data: bytes

    def hex(self) -> str:
        return self.data.hex()


def _emit_from_flag(
    t: Triangulation, face, u: int, v: int
) -> tuple[list[int], dict[int, int]]:
    """Label stream of the deterministic sweep started at flag (face, u->v)."""
    label: dict[int, int] = {}
    out: list[int] = []
    visited = {face}
    # queue entries: (face key, entry direction a->b)
    queue = [(face, u, v)]
    head = 0
    edge_faces = t._edge_faces
    while head < len(queue):
        f, a, b = queue[head]
        head += 1
        c = next(x for x in f if x != a and x != b)
        for x in (a, b, c):
            if x not in label:
                label[x] = len(label)
        out.append(label[a])
        out.append(label[b])
        out.append(label[c])
        for x, y in ((a, b), (b, c), (c, a)):
            g1, g2 = edge_faces[edge_key(x, y)]
            g = g2 if g1 == f else g1
            if g not in visited:
                visited.add(g)
                queue.append((g, y, x))
    return out, label


def _start_flags(t: Triangulation):
    """Start flags restricted to the minimal degree-triple class.

    The degree triple (deg a, deg b, deg c) of a flag with entry edge a->b
    and third corner c is isomorphism invariant, so the minimal code over
    flags with the minimal triple equals the minimal code over all flags.
    """
    deg = t._degrees
    best_key = None
    flags = []
    for f in t.faces:
        a, b, c = f
        for u, v, w in (
            (a, b, c), (b, a, c), (a, c, b),
            (c, a, b), (b, c, a), (c, b, a),
        ):
            key = (deg[u], deg[v], deg[w])
            if best_key is None or key < best_key:
                best_key = key
                flags = [(f, u, v)]
            elif key == best_key:
                flags.append((f, u, v))
    return flags


def _color_suffix(label: dict[int, int], col: Coloring, perm) -> bytes:
    by_label = [0] * len(label)
    for v, i in label.items():
        by_label[i] = perm[col[v]]
    return bytes(by_label)


def _default_mode(col: Coloring | None, mode: ColorMode | None) -> ColorMode:
    if mode is not None:
        return mode
    return ColorMode.IGNORE if col is None else ColorMode.UP_TO_PERMUTATION


def canonical_code(
    t: Triangulation,
    col: Coloring | None = None,
    mode: ColorMode | None = None,
) -> CanonicalCode:
    """Lexicographically least code over all start flags (and color perms)."""
    code, _, _ = _canonical(t, col, _default_mode(col, mode))
    return code


def canonical_form(
    t: Triangulation,
    col: Coloring | None = None,
    mode: ColorMode | None = None,
) -> tuple[Triangulation, Coloring | None, dict[int, int]]:
    """Relabeled representative whose code equals t's, plus the label map.

    Returns (triangulation on ids 0..V-1, coloring or None in IGNORE mode,
    map original id -> canonical id).  Isomorphic inputs produce identical
    representatives, which makes the form usable as a search-state key that
    can still be flipped further.
    """
    mode = _default_mode(col, mode)
    _, labels, perm = _canonical(t, col, mode)
    faces = [
        tuple(sorted((labels[a], labels[b], labels[c])))
        for a, b, c in t.faces
    ]
    form = validate(faces)
    new_col = None
    if mode is not ColorMode.IGNORE:
        assert col is not None
        new_col = Coloring({labels[v]: perm[col[v]] for v in t.vertices})
    return form, new_col, labels


def _canonical(t, col, mode):
    if mode is not ColorMode.IGNORE and col is None:
        raise MissingColoring(f"mode {mode.value!r} requires a coloring")
    header = len(t.vertices).to_bytes(2, "big") + len(t.faces).to_bytes(2, "big")
    perms = _COLOR_PERMS if mode is ColorMode.UP_TO_PERMUTATION else (
        (0, 1, 2),
    )

    best_body: bytes | None = None
    best_suffix = b""
    best_labels: dict[int, int] = {}
    best_perm = (0, 1, 2)
    for f, u, v in _start_flags(t):
        stream, labels = _emit_from_flag(t, f, u, v)
        body = b"".join(x.to_bytes(2, "big") for x in stream)
        if best_body is not None and body > best_body:
            continue
        if mode is ColorMode.IGNORE:
            if best_body is None or body < best_body:
                best_body, best_labels = body, labels
            continue
        for perm in perms:
            suffix = _color_suffix(labels, col, perm)
            if (
                best_body is None
                or body < best_body
                or (body == best_body and suffix < best_suffix)
            ):
                best_body, best_suffix = body, suffix
                best_labels, best_perm = labels, perm
    assert best_body is not None
    return (
        CanonicalCode(mode.value, header + best_body + best_suffix),
        best_labels,
        best_perm,
    )


def is_isomorphic(
    t1: Triangulation,
    t2: Triangulation,
    col1: Coloring | None = None,
    col2: Coloring | None = None,
    mode: ColorMode | None = None,
) -> bool:
    """Code equality; mode defaults to up-to-permutation when colored.

    With no colorings supplied the comparison ignores colors, matching the
    uncolored notion of isomorphism; on balanced triangulations the colored
    and uncolored notions agree because colorings are unique up to
    permutation.
    """
    if mode is None:
        mode = (
            ColorMode.UP_TO_PERMUTATION
            if col1 is not None and col2 is not None
            else ColorMode.IGNORE
        )
    if len(t1.vertices) != len(t2.vertices) or len(t1.faces) != len(t2.faces):
        return False
    return canonical_code(t1, col1, mode) == canonical_code(t2, col2, mode)
