"""Directed segment chains on W vertices and tile coverings.

A segment joins two vertices of one hexagon which are neither adjacent
nor opposite: from a class-1 corner, the displacement is
scale * w**dir * (w - 2) for dir in 0..5, landing on another class-1
corner of the same hexagon.  A curve chains such segments head to tail
without immediate reversal; a covering of a tile visits each hexagon
with exactly one segment, contiguously within every subtile.

Coverings produced by shrinking live on a coarser lattice; the scale is
carried on the Curve so all coordinates stay exact lattice points.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .lattice import CENTER_STEP, OMEGA, ONE, ZERO, Chirality, Eisenstein, color_class
from .tiling import Ambient, TileRef

#: Hexagon chord between next-nearest corners: w - 2 == w^2 - 1.
CHORD = Eisenstein(-2, 1)


@dataclass(frozen=True)
class Segment:
    """Directed chord; displacement is scale * w**dir * CHORD."""

    start: Eisenstein
    dir: int

    def key(self) -> tuple[int, int, int]:
        return (self.start.a, self.start.b, self.dir)


@dataclass(frozen=True)
class Curve:
    segments: tuple[Segment, ...]
    scale: Eisenstein = ONE

    def start(self) -> Eisenstein:
        return self.segments[0].start

    def end(self) -> Eisenstein:
        return seg_end(self.segments[-1], self.scale)

    def points(self) -> list[Eisenstein]:
        out = [self.start()]
        out.extend(seg_end(s, self.scale) for s in self.segments)
        return out


@dataclass(frozen=True)
class Covering:
    """A curve together with the tile it covers."""

    curve: Curve
    tile: TileRef
    oriented: bool = True


def seg_end(seg: Segment, scale: Eisenstein = ONE) -> Eisenstein:
    return seg.start + scale * OMEGA[seg.dir] * CHORD


def seg_reverse(seg: Segment, scale: Eisenstein = ONE) -> Segment:
    return Segment(seg_end(seg, scale), (seg.dir + 3) % 6)


def hexagon_of(seg: Segment, scale: Eisenstein = ONE) -> Eisenstein:
    """The unique hexagon whose corners the segment joins.

    A dir-k segment runs from corner w^k to corner w^(k+2) when k is
    even, and from corner w^(k-1) to corner w^(k+3) when k is odd.
    """
    j = seg.dir if seg.dir % 2 == 0 else (seg.dir - 1) % 6
    return seg.start - scale * OMEGA[j]


def reverse_curve(c: Curve) -> Curve:
    return Curve(
        tuple(seg_reverse(s, c.scale) for s in reversed(c.segments)), c.scale
    )


def realize(turns: tuple[int, ...], start: Segment, scale: Eisenstein = ONE) -> Curve:
    """Chain segments from `start`, turning by each entry in order."""
    segs = [start]
    d = start.dir
    p = seg_end(start, scale)
    for t in turns:
        if not -2 <= t <= 2:
            raise ValueError(f"turn {t} outside -2..2")
        d = (d + t) % 6
        seg = Segment(p, d)
        segs.append(seg)
        p = seg_end(seg, scale)
    return Curve(tuple(segs), scale)


def turns_of(c: Curve) -> tuple[int, ...]:
    """Inverse of realize; validates chaining and non-reversal."""
    out = []
    for s1, s2 in zip(c.segments, c.segments[1:]):
        if seg_end(s1, c.scale) != s2.start:
            raise ValueError("segments are not chained head to tail")
        t = (s2.dir - s1.dir) % 6
        if t == 3:
            raise ValueError("immediate reversal is not a valid curve step")
        out.append(t if t <= 2 else t - 6)
    return tuple(out)


def is_self_avoiding(c: Curve) -> bool:
    pts = c.points()
    return len(set(p.key() for p in pts)) == len(pts)


def covers_tile(ambient: Ambient, c: Curve, t: TileRef) -> bool:
    """Covering predicate: one segment per hexagon, bijectively, with the
    segments inside every subtile of every level forming a contiguous run."""
    if c.scale != ambient.scale:
        return False
    cells = {h.key() for h in ambient.tile_hexagons(t)}
    hit = [hexagon_of(s, c.scale) for s in c.segments]
    if len(hit) != len(cells) or {h.key() for h in hit} != cells:
        return False
    for m in range(1, t.level):
        seen_done = set()
        cur = None
        for h in hit:
            anc = ambient.ancestor_at(h, m).center.key()
            if anc != cur:
                if anc in seen_done:
                    return False
                if cur is not None:
                    seen_done.add(cur)
                cur = anc
    return True


def restrict(ambient: Ambient, cov: Covering, sub: TileRef) -> Covering:
    """The contiguous run of cov over the subtile `sub`."""
    target = sub.center.key()
    idx = [
        i
        for i, s in enumerate(cov.curve.segments)
        if ambient.ancestor_at(hexagon_of(s, cov.curve.scale), sub.level).center.key()
        == target
    ]
    if not idx:
        raise ValueError(f"{sub!r} is not a subtile of the covered tile")
    if idx != list(range(idx[0], idx[-1] + 1)):
        raise ValueError("restriction is not contiguous; not a covering")
    return Covering(
        Curve(cov.curve.segments[idx[0] : idx[-1] + 1], cov.curve.scale),
        sub,
        cov.oriented,
    )


def shrink_covering(ambient: Ambient, cov: Covering) -> tuple[Ambient, Covering]:
    """Replace each level-1 restriction with the segment joining its endpoints.

    Returns the covering of the same-centered tile one level down, on the
    lattice scaled by the first substitution factor.
    """
    if cov.tile.level < 1:
        raise ValueError("cannot shrink a level-0 covering")
    coarse = ambient.shrunk()
    scale = cov.curve.scale
    segs = []
    run_start = 0
    cur = None
    for i, s in enumerate(cov.curve.segments):
        anc = ambient.ancestor_at(hexagon_of(s, scale), 1).center.key()
        if anc != cur:
            if cur is not None:
                segs.append((run_start, i - 1))
            cur = anc
            run_start = i
    segs.append((run_start, len(cov.curve.segments) - 1))
    out = []
    for a, b in segs:
        if b - a != 6:
            raise ValueError("level-1 runs must contain exactly 7 segments")
        p = cov.curve.segments[a].start
        q = seg_end(cov.curve.segments[b], scale)
        disp = q - p
        d = _chord_dir(disp, coarse.scale)
        out.append(Segment(p, d))
    return coarse, Covering(
        Curve(tuple(out), coarse.scale),
        TileRef(cov.tile.center, cov.tile.level - 1),
        cov.oriented,
    )


def _chord_dir(disp: Eisenstein, scale: Eisenstein) -> int:
    unit = scale * CHORD
    for d in range(6):
        if OMEGA[d] * unit == disp:
            return d
    raise ValueError(f"{disp!r} is not a chord displacement at this scale")


def lift_covering(ambient: Ambient, coarse_cov: Covering, *, _check: bool = True):
    """Inverse of shrink_covering: replace every coarse segment with the
    unique level-1 covering of the corresponding tile that joins the same
    endpoint pair.  `ambient` is the fine ambient; coarse_cov must live in
    ambient.shrunk()."""
    coarse = ambient.shrunk()
    if coarse_cov.curve.scale != coarse.scale:
        raise ValueError("coarse covering scale does not match ambient.shrunk()")
    chi = ambient.word[0]
    base = _level1_base(chi)
    segs: list[Segment] = []
    for s in coarse_cov.curve.segments:
        center = hexagon_of(s, coarse.scale)
        p = s.start
        q = seg_end(s, coarse.scale)
        rel = ((p - center), (q - center))
        key = _rel_key(rel, ambient.scale)
        if key not in base:
            raise ValueError("endpoint is not a tile vertex; corrupt input")
        for bs in base[key]:
            segs.append(Segment(center + ambient.scale * bs.start, bs.dir))
    cov = Covering(
        Curve(tuple(segs), ambient.scale),
        TileRef(coarse_cov.tile.center, coarse_cov.tile.level + 1),
        coarse_cov.oriented,
    )
    if _check:
        turns_of(cov.curve)  # validates chaining and non-reversal
    return cov


def _rel_key(rel: tuple[Eisenstein, Eisenstein], scale: Eisenstein):
    from .lattice import div_exact

    p = div_exact(rel[0], scale)
    q = div_exact(rel[1], scale)
    return (p.key(), q.key())


@lru_cache(maxsize=None)
def _level1_base(chi: Chirality) -> dict:
    """The 6 coverings of the origin-centered level-1 tile at unit scale,
    indexed by (start, end) vertex pair.  Produced by exhaustive search."""
    from .enumeration import enumerate_coverings

    amb = Ambient(ZERO, chi)
    covs = enumerate_coverings(amb, TileRef(ZERO, 1), oriented=True)
    out = {}
    for cov in covs:
        key = (cov.curve.start().key(), cov.curve.end().key())
        out[key] = cov.curve.segments
    if len(out) != 6:
        raise AssertionError("level-1 tile must have exactly 6 oriented coverings")
    return out


def serialize_curve(c: Curve) -> tuple:
    return tuple(s.key() for s in c.segments)


def nonoriented_key(c: Curve) -> tuple:
    f = serialize_curve(c)
    r = serialize_curve(reverse_curve(c))
    return min(f, r)


def canonical_coverings(
    ambient: Ambient, t: TileRef, oriented: bool = True
) -> list[Covering]:
    """The coverings of t: 6 oriented (3 nonoriented), built by recursive
    lifting from the exhaustively enumerated level-1 base.

    Deterministic order: sorted by (start, end) vertex pair for oriented,
    by canonical serialization for nonoriented.
    """
    covs = _canonical_oriented(ambient, t)
    if oriented:
        return sorted(covs, key=lambda c: (c.curve.start().key(), c.curve.end().key()))
    by_key = {}
    for cov in covs:
        by_key.setdefault(nonoriented_key(cov.curve), cov)
    out = []
    for key in sorted(by_key):
        cov = by_key[key]
        # canonical representative: the orientation matching the key
        curve = cov.curve
        if serialize_curve(curve) != key:
            curve = reverse_curve(curve)
        out.append(Covering(curve, cov.tile, oriented=False))
    return out


def _canonical_oriented(ambient: Ambient, t: TileRef) -> list[Covering]:
    if t.level == 0:
        covs = []
        corners = [t.center + ambient.scale * OMEGA[j] for j in (0, 2, 4)]
        for p in corners:
            for q in corners:
                if p == q:
                    continue
                d = _chord_dir(q - p, ambient.scale)
                covs.append(
                    Covering(Curve((Segment(p, d),), ambient.scale), t, True)
                )
        return covs
    coarse = ambient.shrunk()
    subs = _canonical_oriented(coarse, TileRef(t.center, t.level - 1))
    return [lift_covering(ambient, c) for c in subs]
