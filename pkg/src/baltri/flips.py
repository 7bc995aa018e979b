"""The eight local moves that preserve balancedness.

Every move exchanges one disk-shaped patch of faces for another patch with
the same boundary, keeps all vertex degrees even, and extends the proper
3-coloring without any choice: colors of created vertices are copied from a
designated existing vertex.  Applicability is therefore purely combinatorial
and enumerate_sites() never needs a coloring.

 kind    site tuple               vertex delta   patch exchanged
 ----    ----------               ------------   ---------------
 bts     (a,b,c)                  +3             face abc -> its 7-face triple subdivision
 btw     (p,q,r,a,b,c)            -3             inverse of bts; p,q,r interior, x paired
                                                 with the outer vertex it is NOT adjacent to
 bes     (a,b,c,d)                +2             edge ab (opposite corners c,d) -> double
                                                 subdivision with two new vertices
 bew     (p,q)                    -2             inverse of bes; p,q the two interior
                                                 degree-4 vertices
 ps      (v,w,x,y,z)              +1             fan w-x-y-z around v -> split v off a new
                                                 degree-4 vertex over the fan, chord wz
 pc      (u,w,x,y,z,v)            -1             inverse of ps; contract degree-4 u through
                                                 link edge wz into the far vertex v
 nflip   (v1..v6)                  0             re-chord a 4-face hexagon strip
 p2flip  (v1..v5,q,p)              0             slide the degree-4 pair q,p across the
                                                 pentagon v1..v5

New vertices take ids above max_vertex_id in the listed order, so results
are reproducible and inverse_site() can name them before the move runs.

Site strings (CLI and file interchange) are 1-based: "ps:1,2,3,4,5" names
in-memory vertices 0..4.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import (
    InvalidSite,
    ParseError,
    WouldCreateDoubleEdge,
    WouldCreateDuplicateFace,
)
from .surface import Coloring, Face, Triangulation, face_key, validate


class FlipKind(enum.Enum):
    BTS = "bts"
    BTW = "btw"
    BES = "bes"
    BEW = "bew"
    PS = "ps"
    PC = "pc"
    NFLIP = "nflip"
    P2FLIP = "p2flip"


_KIND_ORDER = {k: i for i, k in enumerate(FlipKind)}
_KIND_BY_VALUE = {k.value: k for k in FlipKind}

SITE_ARITY = {
    FlipKind.BTS: 3,
    FlipKind.BTW: 6,
    FlipKind.BES: 4,
    FlipKind.BEW: 2,
    FlipKind.PS: 5,
    FlipKind.PC: 6,
    FlipKind.NFLIP: 6,
    FlipKind.P2FLIP: 7,
}

VERTEX_DELTA = {
    FlipKind.BTS: 3,
    FlipKind.BTW: -3,
    FlipKind.BES: 2,
    FlipKind.BEW: -2,
    FlipKind.PS: 1,
    FlipKind.PC: -1,
    FlipKind.NFLIP: 0,
    FlipKind.P2FLIP: 0,
}

INVERSE_KIND = {
    FlipKind.BTS: FlipKind.BTW,
    FlipKind.BTW: FlipKind.BTS,
    FlipKind.BES: FlipKind.BEW,
    FlipKind.BEW: FlipKind.BES,
    FlipKind.PS: FlipKind.PC,
    FlipKind.PC: FlipKind.PS,
    FlipKind.NFLIP: FlipKind.NFLIP,
    FlipKind.P2FLIP: FlipKind.P2FLIP,
}


@dataclass(frozen=True)
class FlipSite:
    """A move kind with the vertex tuple it acts on."""

    kind: FlipKind
    vertices: tuple[int, ...]

    def __post_init__(self):
        want = SITE_ARITY[self.kind]
        if len(self.vertices) != want:
            raise InvalidSite(
                f"{self.kind.value} site needs {want} vertices, "
                f"got {len(self.vertices)}"
            )

    def __lt__(self, other: "FlipSite") -> bool:
        a = (_KIND_ORDER[self.kind], self.vertices)
        b = (_KIND_ORDER[other.kind], other.vertices)
        return a < b

    def __str__(self) -> str:
        return site_to_str(self)


def site_to_str(site: FlipSite) -> str:
    """1-based textual form, e.g. "bes:1,2,3,4"."""
    return site.kind.value + ":" + ",".join(str(v + 1) for v in site.vertices)


def site_from_str(text: str) -> FlipSite:
    head, sep, rest = text.partition(":")
    if not sep:
        raise ParseError(f"site {text!r} lacks a ':' separator")
    kind = _KIND_BY_VALUE.get(head.strip().lower())
    if kind is None:
        raise ParseError(f"unknown move kind {head.strip()!r}")
    parts = [p.strip() for p in rest.split(",")] if rest.strip() else []
    try:
        nums = [int(p) for p in parts]
    except ValueError:
        raise ParseError(f"site {text!r} has a non-integer vertex") from None
    if len(nums) != SITE_ARITY[kind]:
        raise ParseError(
            f"{kind.value} site needs {SITE_ARITY[kind]} vertices, got {len(nums)}"
        )
    if any(n < 1 for n in nums):
        raise ParseError(f"site {text!r} has a vertex below 1 (sites are 1-based)")
    return FlipSite(kind, tuple(n - 1 for n in nums))


# -- precondition helpers ----------------------------------------------------

def _need_distinct(verts) -> None:
    if len(set(verts)) != len(verts):
        raise InvalidSite(f"site vertices {verts} are not distinct")


def _need_vertex(t: Triangulation, v: int) -> None:
    if v not in t._degrees:
        raise InvalidSite(f"no vertex {v}")


def _need_face(t: Triangulation, a: int, b: int, c: int) -> None:
    if not t.has_face(a, b, c):
        raise InvalidSite(f"missing face {{{a},{b},{c}}}")


def _need_no_edge(t: Triangulation, u: int, v: int) -> None:
    if t.has_edge(u, v):
        raise WouldCreateDoubleEdge(f"edge {{{u},{v}}} already present")


def _need_no_face(t: Triangulation, a: int, b: int, c: int) -> None:
    if t.has_face(a, b, c):
        raise WouldCreateDuplicateFace(f"face {{{a},{b},{c}}} already present")


def _need_degree(t: Triangulation, v: int, want: int) -> None:
    _need_vertex(t, v)
    if t.degree(v) != want:
        raise InvalidSite(f"vertex {v} has degree {t.degree(v)}, needs {want}")


# -- rewrite rules ------------------------------------------------------------
#
# Each _rw_* validates the site against t and returns
#   (faces to remove, faces to add, vertices removed, color sources)
# where color sources maps each created vertex id to the existing vertex
# whose color it copies.

_Rewrite = tuple[list[Face], list[Face], tuple[int, ...], dict[int, int]]


def _rw_bts(t: Triangulation, verts) -> _Rewrite:
    a, b, c = verts
    _need_distinct(verts)
    _need_face(t, a, b, c)
    m = t.max_vertex_id
    p, q, r = m + 1, m + 2, m + 3  # partners of a, b, c
    rem = [face_key(a, b, c)]
    add = [
        face_key(a, b, r), face_key(a, q, c), face_key(p, b, c),
        face_key(a, q, r), face_key(p, b, r), face_key(p, q, c),
        face_key(p, q, r),
    ]
    return rem, add, (), {p: a, q: b, r: c}


def _rw_btw(t: Triangulation, verts) -> _Rewrite:
    p, q, r, a, b, c = verts
    _need_distinct(verts)
    for v in (p, q, r):
        _need_degree(t, v, 4)
    for f in (
        (p, q, r), (a, b, r), (a, q, c), (p, b, c),
        (a, q, r), (p, b, r), (p, q, c),
    ):
        _need_face(t, *f)
    _need_no_face(t, a, b, c)
    rem = [
        face_key(p, q, r), face_key(a, b, r), face_key(a, q, c),
        face_key(p, b, c), face_key(a, q, r), face_key(p, b, r),
        face_key(p, q, c),
    ]
    return rem, [face_key(a, b, c)], (p, q, r), {}


def _rw_bes(t: Triangulation, verts) -> _Rewrite:
    a, b, c, d = verts
    if c == d:
        raise InvalidSite("opposite corners coincide")
    _need_face(t, a, b, c)
    _need_face(t, a, b, d)
    m = t.max_vertex_id
    p, q = m + 1, m + 2  # partners of a, b
    rem = [face_key(a, b, c), face_key(a, b, d)]
    add = [
        face_key(a, q, c), face_key(p, b, c), face_key(a, q, d),
        face_key(p, b, d), face_key(p, q, c), face_key(p, q, d),
    ]
    return rem, add, (), {p: a, q: b}


def bew_patch(t: Triangulation, p: int, q: int) -> tuple[int, int, int, int]:
    """Recover (a, b, c, d) of the double-subdivision patch from its pair.

    a is the neighbor of q outside the patch interior, b the one of p, and
    c < d are the two shared wing vertices.  Raises InvalidSite when p, q do
    not sit inside such a patch.
    """
    _need_degree(t, p, 4)
    _need_degree(t, q, 4)
    if not t.has_edge(p, q):
        raise InvalidSite(f"vertices {p} and {q} are not adjacent")
    common = t.neighbors(p) & t.neighbors(q)
    if len(common) != 2:
        raise InvalidSite(
            f"vertices {p} and {q} share {len(common)} neighbors, need 2"
        )
    c, d = sorted(common)
    rest_q = t.neighbors(q) - {p, c, d}
    rest_p = t.neighbors(p) - {q, c, d}
    if len(rest_q) != 1 or len(rest_p) != 1:
        raise InvalidSite(f"vertices {p} and {q} do not bound a double subdivision")
    (a,) = rest_q
    (b,) = rest_p
    return a, b, c, d


def _rw_bew(t: Triangulation, verts) -> _Rewrite:
    p, q = verts
    if p == q:
        raise InvalidSite("site vertices coincide")
    a, b, c, d = bew_patch(t, p, q)
    if a == b:
        raise InvalidSite("patch closes up on itself")
    _need_no_edge(t, a, b)
    for f in ((p, b, c), (p, b, d), (p, q, c), (p, q, d), (q, a, c), (q, a, d)):
        _need_face(t, *f)
    rem = [
        face_key(p, b, c), face_key(p, b, d), face_key(p, q, c),
        face_key(p, q, d), face_key(q, a, c), face_key(q, a, d),
    ]
    add = [face_key(a, b, c), face_key(a, b, d)]
    return rem, add, (p, q), {}


def _rw_ps(t: Triangulation, verts) -> _Rewrite:
    v, w, x, y, z = verts
    _need_distinct((w, x, y, z))
    _need_face(t, v, w, x)
    _need_face(t, v, x, y)
    _need_face(t, v, y, z)
    _need_no_edge(t, w, z)
    n = t.max_vertex_id + 1
    rem = [face_key(v, w, x), face_key(v, x, y), face_key(v, y, z)]
    add = [
        face_key(v, w, z), face_key(n, w, x), face_key(n, x, y),
        face_key(n, y, z), face_key(n, w, z),
    ]
    return rem, add, (), {n: v}


def _rw_pc(t: Triangulation, verts) -> _Rewrite:
    u, w, x, y, z, v = verts
    _need_distinct(verts)
    _need_degree(t, u, 4)
    for f in ((u, w, x), (u, x, y), (u, y, z), (u, w, z)):
        _need_face(t, *f)
    _need_face(t, v, w, z)
    _need_no_edge(t, v, x)
    _need_no_edge(t, v, y)
    rem = [
        face_key(u, w, x), face_key(u, x, y), face_key(u, y, z),
        face_key(u, w, z), face_key(v, w, z),
    ]
    add = [face_key(v, w, x), face_key(v, x, y), face_key(v, y, z)]
    return rem, add, (u,), {}


def _rw_nflip(t: Triangulation, verts) -> _Rewrite:
    v1, v2, v3, v4, v5, v6 = verts
    _need_distinct(verts)
    for f in ((v1, v2, v3), (v1, v3, v4), (v1, v4, v6), (v4, v5, v6)):
        _need_face(t, *f)
    _need_no_edge(t, v2, v6)
    _need_no_edge(t, v2, v5)
    _need_no_edge(t, v3, v5)
    rem = [
        face_key(v1, v2, v3), face_key(v1, v3, v4),
        face_key(v1, v4, v6), face_key(v4, v5, v6),
    ]
    add = [
        face_key(v1, v2, v6), face_key(v2, v5, v6),
        face_key(v2, v3, v5), face_key(v3, v4, v5),
    ]
    return rem, add, (), {}


def _rw_p2flip(t: Triangulation, verts) -> _Rewrite:
    v1, v2, v3, v4, v5, q, p = verts
    _need_distinct(verts)
    _need_degree(t, q, 4)
    _need_degree(t, p, 4)
    for f in (
        (v1, v2, v3), (v1, v3, q), (q, v3, p), (p, v3, v4),
        (p, v4, v5), (q, p, v5), (v1, q, v5),
    ):
        _need_face(t, *f)
    _need_no_edge(t, v1, v4)
    m = t.max_vertex_id
    q2, p2 = m + 1, m + 2  # q2 takes v3's color, p2 takes v1's
    rem = [
        face_key(v1, v2, v3), face_key(v1, v3, q), face_key(q, v3, p),
        face_key(p, v3, v4), face_key(p, v4, v5), face_key(q, p, v5),
        face_key(v1, q, v5),
    ]
    add = [
        face_key(v1, v2, q2), face_key(v2, p2, q2), face_key(v2, v3, p2),
        face_key(p2, v3, v4), face_key(q2, p2, v4), face_key(v1, q2, v4),
        face_key(v1, v4, v5),
    ]
    return rem, add, (q, p), {q2: v3, p2: v1}


_REWRITES = {
    FlipKind.BTS: _rw_bts,
    FlipKind.BTW: _rw_btw,
    FlipKind.BES: _rw_bes,
    FlipKind.BEW: _rw_bew,
    FlipKind.PS: _rw_ps,
    FlipKind.PC: _rw_pc,
    FlipKind.NFLIP: _rw_nflip,
    FlipKind.P2FLIP: _rw_p2flip,
}


def apply_flip(
    t: Triangulation,
    site: FlipSite,
    col: Coloring | None = None,
) -> tuple[Triangulation, Coloring | None]:
    """Apply one move, returning the new triangulation (and coloring).

    Raises InvalidSite (or a subclass) when a precondition fails; in that
    case nothing is modified.  The input tuple may be any orientation the
    rewrite rule accepts, it is not required to be in enumerate_sites()'s
    normalized form.
    """
    rem, add, gone, color_src = _REWRITES[site.kind](t, site.vertices)
    face_set = set(t.faces)
    face_set.difference_update(rem)
    for f in add:
        assert f not in face_set  # guaranteed by the precondition checks
        face_set.add(f)
    t2 = validate(sorted(face_set))
    if col is None:
        return t2, None
    col2 = col.updated({v: col[src] for v, src in color_src.items()}, removed=gone)
    return t2, col2


def inverse_site(t: Triangulation, site: FlipSite) -> FlipSite:
    """The site that undoes `site`, named before the move is applied.

    Takes the triangulation the move is *about to* act on, because the
    undo site refers both to surviving vertices and to the ids the move
    will create.  Applying site and then the returned site restores a
    triangulation isomorphic to t (identical to t except that moves whose
    undo re-creates vertices use fresh ids for them).
    """
    _REWRITES[site.kind](t, site.vertices)  # validate against t
    m = t.max_vertex_id
    k, v = site.kind, site.vertices
    if k is FlipKind.BTS:
        return FlipSite(FlipKind.BTW, (m + 1, m + 2, m + 3) + v)
    if k is FlipKind.BTW:
        return FlipSite(FlipKind.BTS, face_key(*v[3:]))
    if k is FlipKind.BES:
        return FlipSite(FlipKind.BEW, (m + 1, m + 2))
    if k is FlipKind.BEW:
        a, b, c, d = bew_patch(t, *v)
        if a > b:
            a, b = b, a
        return FlipSite(FlipKind.BES, (a, b, c, d))
    if k is FlipKind.PS:
        vv, w, x, y, z = v
        if w > z:
            w, x, y, z = z, y, x, w
        return FlipSite(FlipKind.PC, (m + 1, w, x, y, z, vv))
    if k is FlipKind.PC:
        u, w, x, y, z, vv = v
        if w > z:
            w, x, y, z = z, y, x, w
        return FlipSite(FlipKind.PS, (vv, w, x, y, z))
    if k is FlipKind.NFLIP:
        v1, v2, v3, v4, v5, v6 = v
        back = (v2, v1, v6, v5, v4, v3)
        return FlipSite(FlipKind.NFLIP, min(back, back[3:] + back[:3]))
    assert k is FlipKind.P2FLIP
    v1, v2, v3, v4, v5, _, _ = v
    return FlipSite(FlipKind.P2FLIP, (v1, v5, v4, v3, v2, m + 1, m + 2))


def site_footprint(t: Triangulation, site: FlipSite) -> frozenset[int]:
    """Existing vertices whose star the move changes.

    Covers the site tuple plus, for the double-subdivision inverse, the four
    patch-boundary vertices its two-vertex site leaves implicit.
    """
    _REWRITES[site.kind](t, site.vertices)
    if site.kind is FlipKind.BEW:
        return frozenset(site.vertices) | frozenset(bew_patch(t, *site.vertices))
    return frozenset(site.vertices)


# -- site enumeration ---------------------------------------------------------

def _candidates_bts(t: Triangulation):
    yield from t.faces


def _candidates_btw(t: Triangulation):
    deg = t._degrees
    for f in t.faces:
        p, q, r = f
        if deg[p] != 4 or deg[q] != 4 or deg[r] != 4:
            continue
        outer = (t.neighbors(p) | t.neighbors(q) | t.neighbors(r)) - {p, q, r}
        if len(outer) != 3:
            continue
        partners = []
        for interior in (p, q, r):
            away = outer - t.neighbors(interior)
            if len(away) != 1:
                break
            partners.append(next(iter(away)))
        else:
            yield (p, q, r, *partners)


def _candidates_bes(t: Triangulation):
    for a, b in t.edges:
        c, d = t.edge_opposites(a, b)
        yield (a, b, c, d)


def _candidates_bew(t: Triangulation):
    deg = t._degrees
    for p, q in t.edges:
        if deg[p] == 4 and deg[q] == 4:
            yield (p, q)


def _candidates_ps(t: Triangulation):
    for v in t.vertices:
        link = t.link_cycle(v)
        d = len(link)
        if d < 4:
            continue
        for i in range(d):
            w, x, y, z = (
                link[i], link[(i + 1) % d], link[(i + 2) % d], link[(i + 3) % d],
            )
            if w > z:
                w, x, y, z = z, y, x, w
            yield (v, w, x, y, z)


def _candidates_pc(t: Triangulation):
    for u in t.vertices:
        if t.degree(u) != 4:
            continue
        link = t.link_cycle(u)
        for i in range(4):
            e1, e2 = link[i], link[(i + 1) % 4]
            far1, far2 = link[(i - 1) % 4], link[(i + 2) % 4]
            if e1 < e2:
                w, x, y, z = e1, far1, far2, e2
            else:
                w, x, y, z = e2, far2, far1, e1
            v = t.other_face_third(w, z, u)
            yield (u, w, x, y, z, v)


def _candidates_nflip(t: Triangulation):
    for e1, e2 in t.edges:
        thirds = t.edge_opposites(e1, e2)
        for v1, v4 in ((e1, e2), (e2, e1)):
            for v3 in thirds:
                v6 = thirds[0] if v3 == thirds[1] else thirds[1]
                v2 = t.other_face_third(v1, v3, v4)
                v5 = t.other_face_third(v4, v6, v1)
                tup = (v1, v2, v3, v4, v5, v6)
                yield min(tup, tup[3:] + tup[:3])


def _candidates_p2flip(t: Triangulation):
    deg = t._degrees
    for e1, e2 in t.edges:
        if deg[e1] != 4 or deg[e2] != 4:
            continue
        thirds = t.edge_opposites(e1, e2)
        for q, p in ((e1, e2), (e2, e1)):
            for v3 in thirds:
                v5 = thirds[0] if v3 == thirds[1] else thirds[1]
                rest_q = t.neighbors(q) - {v3, p, v5}
                rest_p = t.neighbors(p) - {q, v3, v5}
                if len(rest_q) != 1 or len(rest_p) != 1:
                    continue
                (v1,) = rest_q
                (v4,) = rest_p
                if not t.has_face(v1, v3, q):
                    continue
                v2 = t.other_face_third(v1, v3, q)
                yield (v1, v2, v3, v4, v5, q, p)


_CANDIDATES = {
    FlipKind.BTS: _candidates_bts,
    FlipKind.BTW: _candidates_btw,
    FlipKind.BES: _candidates_bes,
    FlipKind.BEW: _candidates_bew,
    FlipKind.PS: _candidates_ps,
    FlipKind.PC: _candidates_pc,
    FlipKind.NFLIP: _candidates_nflip,
    FlipKind.P2FLIP: _candidates_p2flip,
}


def enumerate_sites(t: Triangulation, kinds=None) -> list[FlipSite]:
    """All applicable sites, normalized, sorted by (kind, vertex tuple).

    A site is listed exactly once per distinct rewrite it denotes; symmetric
    orientations of the same rewrite are collapsed to a normal form (least
    fan end for the splitting moves, least rotation for the hexagon move).
    """
    if kinds is None:
        want = tuple(FlipKind)
    else:
        want = tuple(sorted(set(kinds), key=_KIND_ORDER.__getitem__))
    out: list[FlipSite] = []
    for kind in want:
        rewrite = _REWRITES[kind]
        found = set()
        for verts in _CANDIDATES[kind](t):
            tup = tuple(verts)
            if tup in found:
                continue
            try:
                rewrite(t, tup)
            except InvalidSite:
                continue
            found.add(tup)
        out.extend(FlipSite(kind, tup) for tup in sorted(found))
    return out
