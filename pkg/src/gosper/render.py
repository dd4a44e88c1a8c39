"""Deterministic SVG emission of tilings, coverings, windows and censuses.

The only place in the package where exact lattice points become floats:
each point is embedded once (a + b/2, b*sqrt(3)/2), scaled, y-flipped
for SVG's downward axis and printed with fixed 6-decimal rounding, so a
given input always produces byte-identical output.  Element order is
lexicographic in the underlying lattice geometry.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .lattice import OMEGA, Eisenstein
from .tiling import Ambient, TileRef
from .curves import Covering, Curve, seg_end
from .plane import WindowCovering

#: Fixed ordered palette: region fills, then curve strokes cycle through it.
PALETTE = (
    "#c6dbef",
    "#fdd0a2",
    "#c7e9c0",
    "#dadaeb",
    "#fee0d2",
    "#d9d9d9",
)

CURVE_COLORS = ("#08519c", "#a63603", "#006d2c", "#54278f", "#99000d", "#252525")


@dataclass(frozen=True)
class RenderSpec:
    """What to draw and how; the inputs themselves are passed to render_svg."""

    target: str  # one of: tiling, covering, window, census
    scale: float = 24.0
    palette: tuple[str, ...] = PALETTE
    show_regions: bool = True
    show_orientation: bool = False

    def __post_init__(self):
        if self.target not in ("tiling", "covering", "window", "census"):
            raise ValueError(f"unknown render target {self.target!r}")
        if not self.scale > 0:
            raise ValueError("scale must be positive")
        if not self.palette:
            raise ValueError("palette must be non-empty")


def _fmt(x: float) -> str:
    s = f"{x:.6f}"
    return "0.000000" if s == "-0.000000" else s


def _xy(z: Eisenstein, scale: float, dx: float = 0.0, dy: float = 0.0):
    ex, ey = z.embed()
    return (ex * scale + dx, -ey * scale + dy)


def _pts(points) -> str:
    return " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in points)


def _document(elements: list[str], points) -> str:
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    margin = 10.0
    x0, y0 = min(xs) - margin, min(ys) - margin
    w, h = max(xs) - min(xs) + 2 * margin, max(ys) - min(ys) + 2 * margin
    head = (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="{_fmt(x0)} {_fmt(y0)} {_fmt(w)} {_fmt(h)}">\n'
    )
    return head + "".join(e + "\n" for e in elements) + "</svg>\n"


def _hexagon_points(c: Eisenstein, lattice_scale: Eisenstein, scale: float,
                    dx: float = 0.0, dy: float = 0.0):
    return [_xy(c + lattice_scale * OMEGA[j], scale, dx, dy) for j in range(6)]


def _hexagon(c, lattice_scale, scale, fill, stroke="#999999", width=0.75,
             dx=0.0, dy=0.0) -> tuple[str, list]:
    pts = _hexagon_points(c, lattice_scale, scale, dx, dy)
    el = (
        f'<polygon points="{_pts(pts)}" fill="{fill}" '
        f'stroke="{stroke}" stroke-width="{_fmt(width)}"/>'
    )
    return el, pts


def _frontier_loop(amb: Ambient, t: TileRef, scale: float):
    fr = amb.tile_frontier(t)
    return [_xy(e[0], scale) for side in fr.sides for e in side]


def _curve_elements(c: Curve, scale: float, color: str, width: float,
                    show_orientation: bool, dx: float = 0.0, dy: float = 0.0):
    pts = [_xy(p, scale, dx, dy) for p in c.points()]
    els = [
        f'<polyline points="{_pts(pts)}" fill="none" stroke="{color}" '
        f'stroke-width="{_fmt(width)}" stroke-linejoin="round" '
        'stroke-linecap="round"/>'
    ]
    if show_orientation:
        sx, sy = pts[0]
        ex, ey = pts[-1]
        r = width * 1.8
        els.append(
            f'<circle cx="{_fmt(sx)}" cy="{_fmt(sy)}" r="{_fmt(r)}" '
            f'fill="{color}"/>'
        )
        els.append(
            f'<circle cx="{_fmt(ex)}" cy="{_fmt(ey)}" r="{_fmt(r)}" '
            f'fill="none" stroke="{color}" stroke-width="{_fmt(width)}"/>'
        )
    return els, pts


def render_tiling(amb: Ambient, t: TileRef, spec: RenderSpec) -> str:
    """Hexagon grid of the tile plus the boundary of every subtile at
    every intermediate level, with thicker strokes at coarser levels."""
    elements: list[str] = []
    all_pts: list = []
    for c in amb.tile_hexagons(t):
        el, pts = _hexagon(c, amb.scale, spec.scale, fill="none")
        elements.append(el)
        all_pts.extend(pts)
    tiles = [t]
    for level in range(t.level, 0, -1):
        width = 0.75 + 0.9 * level
        for sub in tiles:
            loop = _frontier_loop(amb, sub, spec.scale)
            elements.append(
                f'<polygon points="{_pts(loop)}" fill="none" '
                f'stroke="#000000" stroke-width="{_fmt(width)}"/>'
            )
        tiles = [c for s in tiles for c in amb.child_centers(s)]
    return _document(elements, all_pts)


def render_covering(amb: Ambient, cov: Covering, spec: RenderSpec) -> str:
    """The tile's hexagon grid with the covering curve drawn on top."""
    elements: list[str] = []
    all_pts: list = []
    fill = spec.palette[0] if spec.show_regions else "none"
    for c in amb.tile_hexagons(cov.tile):
        el, pts = _hexagon(c, cov.curve.scale, spec.scale, fill=fill)
        elements.append(el)
        all_pts.extend(pts)
    els, pts = _curve_elements(
        cov.curve, spec.scale, CURVE_COLORS[0], 2.2, spec.show_orientation
    )
    elements.extend(els)
    all_pts.extend(pts)
    return _document(elements, all_pts)


def render_window(w: WindowCovering, spec: RenderSpec) -> str:
    """Region-filled cluster with its curves; the anchor vertex, when
    present, is marked."""
    elements: list[str] = []
    all_pts: list = []
    for hk in sorted(w.region_of):
        rid = w.region_of[hk]
        fill = (
            spec.palette[(rid - 1) % len(spec.palette)]
            if spec.show_regions
            else "none"
        )
        el, pts = _hexagon(Eisenstein(*hk), w.ambient.scale, spec.scale, fill=fill)
        elements.append(el)
        all_pts.extend(pts)
    for i, c in enumerate(w.curves):
        els, pts = _curve_elements(
            c, spec.scale, CURVE_COLORS[i % len(CURVE_COLORS)], 2.2,
            spec.show_orientation,
        )
        elements.extend(els)
        all_pts.extend(pts)
    if w.anchor_vertex is not None:
        x, y = _xy(w.anchor_vertex, spec.scale)
        elements.append(
            f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="{_fmt(5.0)}" '
            'fill="none" stroke="#000000" stroke-width="1.500000"/>'
        )
    return _document(elements, all_pts)


def render_census(census: dict, spec: RenderSpec) -> str:
    """One cell per orbit representative: the 3 anchor hexagons with
    their segments and an anchor dot, laid out in reading order."""
    elements: list[str] = []
    all_pts: list = []
    cols = 4
    cell = 7.0 * spec.scale
    reps = [census["orbits"][k] for k in sorted(census["orbits"])]
    for i, p in enumerate(reps):
        dx = (i % cols) * cell
        dy = (i // cols) * cell
        js = (0, 2, 4) if p.anchor_class == 1 else (1, 3, 5)
        unit = OMEGA[0]
        for j in js:
            c = -OMEGA[j]
            el, pts = _hexagon(
                c, unit, spec.scale,
                fill=spec.palette[(p.anchor_class - 1) % len(spec.palette)],
                dx=dx, dy=dy,
            )
            elements.append(el)
            all_pts.extend(pts)
        from .curves import CHORD, Segment

        for a, b, d in p.segments:
            seg = Segment(Eisenstein(a, b), d)
            curve = Curve((seg,))
            els, pts = _curve_elements(
                curve, spec.scale, CURVE_COLORS[0], 2.2,
                spec.show_orientation, dx=dx, dy=dy,
            )
            elements.extend(els)
            all_pts.extend(pts)
        ax, ay = _xy(Eisenstein(0, 0), spec.scale, dx, dy)
        elements.append(
            f'<circle cx="{_fmt(ax)}" cy="{_fmt(ay)}" r="{_fmt(3.0)}" '
            'fill="#000000"/>'
        )
    return _document(elements, all_pts)


def render_svg(spec: RenderSpec, obj, amb: Ambient | None = None) -> str:
    """Dispatch on spec.target; `obj` is a TileRef, Covering,
    WindowCovering or census dict accordingly."""
    if spec.target == "tiling":
        return render_tiling(amb, obj, spec)
    if spec.target == "covering":
        return render_covering(amb, obj, spec)
    if spec.target == "window":
        return render_window(obj, spec)
    return render_census(obj, spec)
