"""Colouring tiling patches and drawing them as SVG.

colour_patch pulls a colouring (a coset table of a qualifying subgroup)
onto a geometric patch: triangles are grouped into the tiles of the
chosen tiling by the stabilizer mirrors, each group gets one colour,
and a subgroup that does not actually contain the stabilizer gets
caught red-handed when a group straddles two colours.

The drawing pipeline is deliberately dumb: subdivide geodesic edges,
project, format floats at fixed precision, emit polygons in tile order.
Equal inputs give byte-equal SVG.
"""
from __future__ import annotations

import colorsys
import math
from dataclasses import dataclass, field

import numpy as np

from .census import Scope, TilingKind, required_words
from .coset import CosetTable
from .errors import DomainError, MergeInconsistency
from .geometry import TrianglePatch, form_matrix, matrix_key
from .presentations import Geometry
from .subgroups import is_orientation_subgroup
from .words import Word


@dataclass(frozen=True, eq=False)
class ColouredPatch:
    patch: TrianglePatch
    table: CosetTable
    kind: TilingKind
    scope: Scope
    k: int  # number of colours
    colours: tuple[int, ...]  # per triangle, 1-based
    polygons: tuple[tuple[int, ...], ...]  # triangle ids per merged tile
    polygon_size: int  # triangles in a complete merged tile


def _even_ranks(t: CosetTable) -> dict[int, int]:
    """Rank the orientation-preserving cosets in increasing order.

    Coset i is orientation-preserving when words reaching it have even
    length; for an orientation subgroup the table is bipartite, so the
    side of each coset is well defined.
    """
    side = [-1] * t.n
    side[0] = 0
    stack = [0]
    while stack:
        i = stack.pop()
        for c in range(t.alphabet.size):
            j = t.rows[i][c]
            if side[j] == -1:
                side[j] = side[i] ^ 1
                stack.append(j)
    evens = [i for i in range(t.n) if side[i] == 0]
    return {cos: r for r, cos in enumerate(evens)}


def colour_patch(
    patch: TrianglePatch,
    table: CosetTable,
    kind: TilingKind,
    scope: Scope = Scope.FULL,
) -> ColouredPatch:
    """Colour the patch by the subgroup of the (reflection) coset table.

    The table's base coset must literally be fixed by the stabilizer
    words of the tiling kind (census representatives are stored that
    way).  Full scope: the colour of triangle f(F) is the coset of
    f^-1.  Rotation scope: the subgroup lies in the rotation half and
    colours are its cosets there; an odd triangle word is completed to
    an even one by a stabilizer mirror, which lands in the same merged
    tile by construction.
    """
    words = required_words(kind, Scope.FULL)
    r1, r2 = words[0][0], words[1][0]
    tri = patch.triangle
    alphabet = table.alphabet
    n_tiles = len(patch.tiles)

    if scope is Scope.ROTATION:
        if not is_orientation_subgroup(table):
            raise DomainError("rotation-scope colouring needs an orientation subgroup")
        ranks = _even_ranks(table)
        k = table.n // 2
    else:
        ranks = None
        k = table.n

    colours: list[int] = []
    for t in patch.tiles:
        w = t.word
        if ranks is not None and len(w) % 2:
            w = w + (r2,)
        cos = table.apply(0, alphabet.inverse_word(w))
        colours.append(cos + 1 if ranks is None else ranks[cos] + 1)

    # group triangles into merged tiles: neighbours across the two
    # stabilizer mirrors belong together
    parent = list(range(n_tiles))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, t in enumerate(patch.tiles):
        for g in (r1, r2):
            j = patch.find(t.matrix @ tri.mirrors[g])
            if j is not None:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[max(ri, rj)] = min(ri, rj)

    groups: dict[int, list[int]] = {}
    for i in range(n_tiles):
        groups.setdefault(find(i), []).append(i)
    polygons = tuple(tuple(g) for _, g in sorted(groups.items()))

    for poly in polygons:
        first = colours[poly[0]]
        for i in poly[1:]:
            if colours[i] != first:
                raise MergeInconsistency(
                    f"merged tile {poly} got colours {first} and {colours[i]}: "
                    "the subgroup does not contain this tile stabilizer"
                )

    size = {TilingKind.PQ: 2 * patch.p, TilingKind.QP: 2 * patch.q, TilingKind.LAVES: 4}[
        kind
    ]
    return ColouredPatch(
        patch, table, kind, scope, k, tuple(colours), polygons, size
    )


def verify_perfect_on_patch(cp: ColouredPatch, w: Word) -> bool:
    """Does the symmetry w permute the patch colours as the table says?

    Maps every triangle through w's matrix, collects (colour, image
    colour) pairs for images inside the patch, and checks they form a
    single-valued injective map agreeing with colour_permutation.  For
    a rotation-scope colouring only orientation-preserving words are
    colour symmetries, so odd words fail.
    """
    patch = cp.patch
    tri = patch.triangle
    table = cp.table
    if cp.scope is Scope.ROTATION and len(w) % 2:
        return False
    M = tri.word_matrix(w)
    mapping: dict[int, int] = {}
    for i, t in enumerate(patch.tiles):
        j = patch.find(M @ t.matrix)
        if j is None:
            continue
        ci, cj = cp.colours[i], cp.colours[j]
        if mapping.setdefault(ci, cj) != cj:
            return False
    pairs = set(mapping.items())
    if len({cj for _, cj in pairs}) != len(pairs):
        return False  # not injective

    iw = table.alphabet.inverse_word(w)
    if cp.scope is Scope.ROTATION:
        ranks = _even_ranks(table)
        inverse_rank = {r: cos for cos, r in ranks.items()}
        for ci, cj in pairs:
            cos = inverse_rank[ci - 1]
            if ranks[table.apply(cos, iw)] != cj - 1:
                return False
        return True
    for ci, cj in pairs:
        if table.apply(ci - 1, iw) != cj - 1:
            return False
    return True


def colour_histogram(cp: ColouredPatch, complete_only: bool = True) -> dict[int, int]:
    """Merged tiles per colour; by default only fully present tiles."""
    out = {c: 0 for c in range(1, cp.k + 1)}
    for poly in cp.polygons:
        if complete_only and len(poly) != cp.polygon_size:
            continue
        out[cp.colours[poly[0]]] += 1
    return out


# ---------------------------------------------------------------- SVG

# fixed small tilt so no tiling vertex sits at the projection pole
_TILT = 0.37


def _tilt_matrix() -> np.ndarray:
    c, s = math.cos(_TILT), math.sin(_TILT)
    return np.array([[1.0, 0, 0], [0, c, -s], [0, s, c]])


def _project(points: np.ndarray, geometry: Geometry, projection: str) -> np.ndarray:
    if projection == "disk":
        return points[:, :2] / (1.0 + points[:, 2:3])
    if projection == "stereographic":
        tilted = points @ _tilt_matrix().T
        return tilted[:, :2] / (1.0 + tilted[:, 2:3])
    if projection == "orthographic":
        tilted = points @ _tilt_matrix().T
        return tilted[:, :2]
    if projection == "identity":
        return points[:, :2]
    raise DomainError(f"unknown projection {projection!r}")


_DEFAULT_PROJECTION = {
    Geometry.HYPERBOLIC: "disk",
    Geometry.SPHERICAL: "stereographic",
    Geometry.EUCLIDEAN: "identity",
}

_ALLOWED = {
    Geometry.HYPERBOLIC: {"disk"},
    Geometry.SPHERICAL: {"stereographic", "orthographic"},
    Geometry.EUCLIDEAN: {"identity"},
}


def _geodesic(u: np.ndarray, v: np.ndarray, geometry: Geometry, steps: int) -> np.ndarray:
    """Points along the geodesic from u to v, endpoints included."""
    ts = np.linspace(0.0, 1.0, steps + 1)
    if geometry is Geometry.EUCLIDEAN:
        return np.outer(1 - ts, u) + np.outer(ts, v)
    if geometry is Geometry.SPHERICAL:
        dot = float(np.clip(u @ v, -1.0, 1.0))
        om = math.acos(dot)
        if om < 1e-12:
            return np.outer(1 - ts, u) + np.outer(ts, v)
        return (
            np.outer(np.sin((1 - ts) * om), u) + np.outer(np.sin(ts * om), v)
        ) / math.sin(om)
    J = form_matrix(geometry)
    dot = float(u @ J @ v)
    d = math.acosh(max(1.0, -dot))
    if d < 1e-12:
        return np.outer(1 - ts, u) + np.outer(ts, v)
    return (
        np.outer(np.sinh((1 - ts) * d), u) + np.outer(np.sinh(ts * d), v)
    ) / math.sinh(d)


def palette(k: int, seed: int = 0) -> tuple[str, ...]:
    """k well-spread fill colours; the seed rotates the hue wheel."""
    offset = (seed * 0.6180339887498949) % 1.0
    out = []
    for i in range(k):
        h = (i / k + offset) % 1.0
        r, g, b = colorsys.hls_to_rgb(h, 0.57, 0.65)
        out.append(f"#{round(r*255):02x}{round(g*255):02x}{round(b*255):02x}")
    return tuple(out)


def _fmt(v: float) -> str:
    s = f"{v:.5f}"
    return "0.00000" if s == "-0.00000" else s


def emit_svg(
    cp: ColouredPatch,
    out=None,
    *,
    projection: str = "auto",
    palette_seed: int = 0,
    subdivision: int = 12,
    size: int = 700,
) -> bytes:
    """Draw the coloured patch; returns the SVG bytes, optionally writing.

    out may be a path or a binary file object.  The output is a pure
    function of the arguments: rendering twice gives identical bytes.
    """
    geometry = cp.patch.triangle.geometry
    if projection == "auto":
        projection = _DEFAULT_PROJECTION[geometry]
    if projection not in _ALLOWED[geometry]:
        raise DomainError(
            f"projection {projection!r} does not fit {geometry.value} geometry"
        )
    if subdivision < 1:
        raise DomainError("subdivision must be at least 1")

    patch = cp.patch
    fills = palette(cp.k, palette_seed)

    def normalized(pt: np.ndarray) -> np.ndarray:
        # guard drift so points sit exactly on their surface before projecting
        if geometry is Geometry.SPHERICAL:
            return pt / np.linalg.norm(pt)
        if geometry is Geometry.EUCLIDEAN:
            return pt / pt[2]
        J = form_matrix(geometry)
        return pt / math.sqrt(max(1e-300, -float(pt @ J @ pt)))

    visible: list[int] = []
    if projection == "orthographic":
        tilt = _tilt_matrix()
        for i in range(len(patch.tiles)):
            centroid = sum(patch.corners_of(i)) / 3.0
            if (tilt @ centroid)[2] > 0.0:
                visible.append(i)
    else:
        visible = list(range(len(patch.tiles)))
    shown = set(visible)

    tile_rings: list[tuple[int, np.ndarray]] = []
    for i in visible:
        corners = [normalized(c) for c in patch.corners_of(i)]
        ring: list[np.ndarray] = []
        for a_, b_ in ((0, 1), (1, 2), (2, 0)):
            seg = _geodesic(corners[a_], corners[b_], geometry, subdivision)
            ring.extend(seg[:-1])
        xy = _project(np.array(ring), geometry, projection)
        tile_rings.append((i, xy))

    # merged-tile boundaries: triangle edges used once within a group
    edge_lines: list[np.ndarray] = []
    for poly in cp.polygons:
        count: dict[tuple, int] = {}
        for i in poly:
            cs = patch.corners_of(i)
            for a_, b_ in ((0, 1), (1, 2), (2, 0)):
                ka = matrix_key(cs[a_])
                kb = matrix_key(cs[b_])
                key = (ka, kb) if ka <= kb else (kb, ka)
                count[key] = count.get(key, 0) + 1
        for i in poly:
            if i not in shown:
                continue
            raw = patch.corners_of(i)
            cs = [normalized(c) for c in raw]
            for a_, b_ in ((0, 1), (1, 2), (2, 0)):
                ka = matrix_key(raw[a_])
                kb = matrix_key(raw[b_])
                key = (ka, kb) if ka <= kb else (kb, ka)
                if count[key] != 1:
                    continue
                seg = _geodesic(cs[a_], cs[b_], geometry, subdivision)
                edge_lines.append(_project(seg, geometry, projection))

    if projection in ("disk", "orthographic"):
        x0 = y0 = -1.05
        span = 2.1
    else:
        pts = (
            np.vstack([xy for _, xy in tile_rings])
            if tile_rings
            else np.zeros((1, 2))
        )
        lo = pts.min(axis=0)
        hi = pts.max(axis=0)
        if projection == "stereographic":
            lo = np.maximum(lo, -3.0)
            hi = np.minimum(hi, 3.0)
        span = float(max(hi - lo)) * 1.07
        cx, cy = (lo + hi) / 2.0
        x0, y0 = float(cx) - span / 2, float(cy) - span / 2
    stroke = span * 0.003

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="{_fmt(x0)} {_fmt(y0)} {_fmt(span)} {_fmt(span)}">',
        f'<rect x="{_fmt(x0)}" y="{_fmt(y0)}" width="{_fmt(span)}" height="{_fmt(span)}" fill="#ffffff"/>',
    ]
    for i, xy in tile_rings:
        d = "M" + "L".join(f"{_fmt(x)} {_fmt(y)}" for x, y in xy) + "Z"
        parts.append(f'<path d="{d}" fill="{fills[cp.colours[i] - 1]}" stroke="none"/>')
    for xy in edge_lines:
        d = "M" + "L".join(f"{_fmt(x)} {_fmt(y)}" for x, y in xy)
        parts.append(
            f'<path d="{d}" fill="none" stroke="#1a1a1a" '
            f'stroke-width="{_fmt(stroke)}" stroke-linecap="round"/>'
        )
    if projection == "disk":
        parts.append(
            f'<circle cx="0" cy="0" r="1" fill="none" stroke="#1a1a1a" '
            f'stroke-width="{_fmt(stroke)}"/>'
        )
    parts.append("</svg>")
    data = "\n".join(parts).encode("ascii")

    if out is not None:
        if hasattr(out, "write"):
            out.write(data)
        else:
            with open(out, "wb") as fh:
                fh.write(data)
    return data
