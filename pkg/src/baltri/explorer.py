"""Searching the flip graph of balanced triangulations.

States are canonical codes (colors up to permutation), so isomorphic
triangulations collapse to one node.  Because of that, a path is a list
of sites with replay semantics: each site applies to the canonical form
of the previous result, not to the raw vertex ids the previous flip
produced.  replay_path implements exactly that convention.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .canon import CanonicalCode, ColorMode, canonical_code, canonical_form
from .embeddings import cube_embedding, face_subdivision
from .errors import NotConnectedWithinCaps, SurfaceMismatch
from .flips import (
    INVERSE_KIND,
    VERTEX_DELTA,
    FlipKind,
    FlipSite,
    apply_flip,
    enumerate_sites,
    inverse_site,
)
from .surface import Coloring, Triangulation, find_coloring, surface_id, validate


# -- stock triangulations ------------------------------------------------------

def build_octahedron() -> tuple[Triangulation, Coloring]:
    """Three antipodal pairs, one vertex from each pair per face."""
    faces = [(a, b, c) for a in (0, 1) for b in (2, 3) for c in (4, 5)]
    return validate(faces), Coloring({0: 0, 1: 0, 2: 1, 3: 1, 4: 2, 5: 2})


def build_k333_torus() -> tuple[Triangulation, Coloring]:
    """The complete tripartite graph on 3+3+3 vertices, laid on the torus."""

    def v(i: int, j: int) -> int:
        return 3 * (i % 3) + (j % 3)

    faces = set()
    for i in range(3):
        for j in range(3):
            faces.add(tuple(sorted((v(i, j), v(i + 1, j), v(i, j + 1)))))
            faces.add(tuple(sorted((v(i + 1, j), v(i, j + 1), v(i + 1, j + 1)))))
    tri = validate(sorted(faces))
    col = Coloring({3 * i + j: (i - j) % 3 for i in range(3) for j in range(3)})
    assert all(tri.degree(x) == 6 for x in tri.vertices)  # complete tripartite
    return tri, col


def build_cube_subdivision() -> tuple[Triangulation, Coloring]:
    return face_subdivision(cube_embedding())


def classify(t: Triangulation) -> dict[str, bool]:
    """Cheap structural facts that decide which moves can ever apply."""
    octa, _ = build_octahedron()
    return {
        "is_octahedron": canonical_code(t) == canonical_code(octa),
        "ps_applicable": bool(enumerate_sites(t, [FlipKind.PS])),
        "pc_applicable": bool(enumerate_sites(t, [FlipKind.PC])),
        "all_degrees_four": all(t.degree(v) == 4 for v in t.vertices),
    }


# -- breadth-first exploration --------------------------------------------------

@dataclass
class FlipGraphView:
    """A finite window of the flip graph: canonical states and flip edges."""

    start: CanonicalCode
    states: dict[CanonicalCode, tuple[Triangulation, Coloring]]
    edges: tuple[tuple[CanonicalCode, FlipKind, CanonicalCode], ...]
    truncated: bool = False

    @property
    def state_count(self) -> int:
        return len(self.states)

    @property
    def edge_count(self) -> int:
        return len(self.edges)


def _norm_kinds(kinds: Iterable[FlipKind] | None) -> tuple[FlipKind, ...]:
    if kinds is None:
        return tuple(FlipKind)
    out = tuple(dict.fromkeys(kinds))
    return out


def bfs(
    t: Triangulation,
    col: Coloring | None = None,
    kinds: Iterable[FlipKind] | None = None,
    *,
    max_vertices: int,
    max_states: int,
) -> FlipGraphView:
    """Explore flips outward from t, bounded in vertices and state count.

    Children above the vertex cap are not generated at all.  Hitting the
    state cap stops discovery of new states but still records edges among
    known ones, and sets the truncated flag.
    """
    kinds = _norm_kinds(kinds)
    col = col if col is not None else find_coloring(t)
    mode = ColorMode.UP_TO_PERMUTATION
    start = canonical_code(t, col, mode)
    form, fcol, _ = canonical_form(t, col, mode)
    states: dict[CanonicalCode, tuple[Triangulation, Coloring]] = {start: (form, fcol)}
    edges: set[tuple[CanonicalCode, FlipKind, CanonicalCode]] = set()
    frontier = [start]
    truncated = False
    while frontier:
        nxt: list[CanonicalCode] = []
        for code in sorted(frontier):
            cur, ccol = states[code]
            for site in enumerate_sites(cur, kinds):
                if cur.vertex_count + VERTEX_DELTA[site.kind] > max_vertices:
                    continue
                child, childcol = apply_flip(cur, site, ccol)
                ccode = canonical_code(child, childcol, mode)
                if ccode not in states:
                    if len(states) >= max_states:
                        truncated = True
                        continue
                    states[ccode] = canonical_form(child, childcol, mode)[:2]
                    nxt.append(ccode)
                edges.add((code, site.kind, ccode))
        frontier = nxt
    ordered = sorted(edges, key=lambda e: (e[0], e[1].value, e[2]))
    return FlipGraphView(start, states, tuple(ordered), truncated)


# -- path search ----------------------------------------------------------------

def replay_path(
    t: Triangulation, col: Coloring | None, steps: Sequence[FlipSite]
) -> tuple[Triangulation, Coloring]:
    """Apply steps where each one addresses the canonical form so far."""
    col = col if col is not None else find_coloring(t)
    cur, ccol, _ = canonical_form(t, col, ColorMode.UP_TO_PERMUTATION)
    for site in steps:
        raw, rawcol = apply_flip(cur, site, ccol)
        cur, ccol, _ = canonical_form(raw, rawcol, ColorMode.UP_TO_PERMUTATION)
    return cur, ccol


def connect(
    t1: Triangulation,
    t2: Triangulation,
    col1: Coloring | None = None,
    col2: Coloring | None = None,
    kinds: Iterable[FlipKind] | None = None,
    *,
    max_vertices: int,
    max_states: int,
) -> list[FlipSite]:
    """A flip path from t1 to t2 (replay semantics), or an error.

    Bidirectional search: one ball grows from t1 under the given kinds,
    the other from t2 under their inverses, and a state known to both
    sides yields the path.  Caps apply to each side separately.
    SurfaceMismatch and NotConnectedWithinCaps report the two failure
    modes; the latter never proves disconnection.
    """
    kinds = _norm_kinds(kinds)
    back_kinds = tuple(dict.fromkeys(INVERSE_KIND[k] for k in kinds))
    col1 = col1 if col1 is not None else find_coloring(t1)
    col2 = col2 if col2 is not None else find_coloring(t2)
    if surface_id(t1) != surface_id(t2):
        raise SurfaceMismatch(
            "no flip changes the underlying surface, the inputs lie on two"
        )
    mode = ColorMode.UP_TO_PERMUTATION

    # side 0 entry: (state, parent code, site on the parent form reaching here)
    # side 1 entry: (state, parent code, site on THIS form stepping toward t2)
    sides: list[dict[CanonicalCode, tuple]] = [{}, {}]
    frontiers: list[list[CanonicalCode]] = [[], []]
    for idx, (t, col) in enumerate(((t1, col1), (t2, col2))):
        code = canonical_code(t, col, mode)
        sides[idx][code] = (canonical_form(t, col, mode)[:2], None, None)
        frontiers[idx] = [code]

    def assemble(meet: CanonicalCode) -> list[FlipSite]:
        steps: list[FlipSite] = []
        cur = meet
        while True:
            _, parent, site = sides[0][cur]
            if parent is None:
                break
            steps.append(site)
            cur = parent
        steps.reverse()
        cur = meet
        while True:
            _, parent, site = sides[1][cur]
            if parent is None:
                break
            steps.append(site)
            cur = parent
        return steps

    start1 = frontiers[0][0]
    if start1 in sides[1]:
        return assemble(start1)

    stalled = [False, False]
    while not all(stalled):
        # grow the smaller live frontier first
        order = sorted((0, 1), key=lambda i: (stalled[i], len(sides[i])))
        idx = order[0]
        if stalled[idx] or not frontiers[idx]:
            stalled[idx] = True
            continue
        use_kinds = kinds if idx == 0 else back_kinds
        here, there = sides[idx], sides[1 - idx]
        nxt: list[CanonicalCode] = []
        for code in sorted(frontiers[idx]):
            cur, ccol = here[code][0]
            for site in enumerate_sites(cur, use_kinds):
                if cur.vertex_count + VERTEX_DELTA[site.kind] > max_vertices:
                    continue
                raw, rawcol = apply_flip(cur, site, ccol)
                ccode = canonical_code(raw, rawcol, mode)
                if ccode in here:
                    continue
                # a state closing the path is admitted even past the cap
                if len(here) >= max_states and ccode not in there:
                    continue
                form, fcol, labels = canonical_form(raw, rawcol, mode)
                if idx == 0:
                    here[ccode] = ((form, fcol), code, site)
                else:
                    back = inverse_site(cur, site)
                    mapped = FlipSite(
                        back.kind, tuple(labels[v] for v in back.vertices)
                    )
                    here[ccode] = ((form, fcol), code, mapped)
                if ccode in there:
                    return assemble(ccode)
                nxt.append(ccode)
        frontiers[idx] = nxt
        if not nxt or len(here) >= max_states:
            stalled[idx] = True
    raise NotConnectedWithinCaps(
        f"no path within {max_vertices} vertices and {max_states} states per side"
    )


def random_walk(
    t: Triangulation,
    col: Coloring | None = None,
    kinds: Iterable[FlipKind] | None = None,
    steps: int = 10,
    seed: int = 0,
    max_vertices: int | None = None,
) -> tuple[Triangulation, Coloring, list[FlipSite]]:
    """Take uniformly random applicable flips; stops early if none remain.

    Unlike connect, the returned sites replay directly with apply_flip:
    no canonicalization happens between steps.
    """
    kinds = _norm_kinds(kinds)
    col = col if col is not None else find_coloring(t)
    rng = random.Random(seed)
    taken: list[FlipSite] = []
    for _ in range(steps):
        sites = enumerate_sites(t, kinds)
        if max_vertices is not None:
            sites = [
                s
                for s in sites
                if t.vertex_count + VERTEX_DELTA[s.kind] <= max_vertices
            ]
        if not sites:
            break
        site = rng.choice(sites)
        t, col = apply_flip(t, site, col)
        taken.append(site)
    return t, col, taken
