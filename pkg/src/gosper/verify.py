"""Translation-congruence patch matching and strong local isomorphism.

A patch is the covering restricted to the union of the three level-n
tiles sharing one honeycomb vertex, stored relative to that vertex.
Patch equality is exact multiset equality of relative segments (all
coordinates are lattice points, so there is no tolerance), and an
isomorphism between patches is a translation only: rotated or reflected
copies never match.

The strong local isomorphism check: every patch class realized in a
window recurs inside every sufficiently deep subtile — three levels up
for nonoriented patches, four for oriented ones.  The census quotients
the oriented vertex-level patches by rotation about the anchor and
global orientation reversal.

The rotation/reversal group is cyclic of order 6 and acts freely on
every patch except the two "triskelion" configurations: three chords
arranged 2pi/3-symmetrically about a non-W anchor, whose orbits have
size 2 ({p, reverse(p)}) instead of 6.  The census therefore reports
both the total orbit count (11 once saturated) and the free-orbit
count (exactly 9), split by anchor class.
"""

from __future__ import annotations

from dataclasses import dataclass

from .lattice import OMEGA, Eisenstein, color_class
from .tiling import TileRef
from .curves import CHORD, Segment, hexagon_of
from .plane import WindowCovering, property_p_check


@dataclass(frozen=True)
class Patch:
    """Covering fragment over the 3 level-`level` tiles at one vertex."""

    anchor: Eisenstein
    anchor_class: int
    level: int
    oriented: bool
    #: relative segment keys (a, b, dir), sorted; nonoriented segments
    #: are normalized to the lexicographically smaller direction
    segments: tuple

    def class_key(self) -> tuple:
        return (self.anchor_class, self.level, self.oriented, self.segments)


def _segment_map(w: WindowCovering) -> dict:
    out = {}
    for c in w.curves:
        for s in c.segments:
            out[hexagon_of(s, c.scale).key()] = s
    return out


def _rel_key(s: Segment, anchor: Eisenstein, oriented: bool) -> tuple:
    p = s.start - anchor
    if oriented:
        return (p.a, p.b, s.dir)
    q = p + OMEGA[s.dir] * CHORD
    return min((p.a, p.b, s.dir), (q.a, q.b, (s.dir + 3) % 6))


def patch_tiles(w: WindowCovering, y: Eisenstein, n: int) -> list[TileRef]:
    """The 3 level-n tiles with common vertex y; error if y is not such
    a common vertex."""
    amb = w.ambient
    hexes = amb.hexagons_at_vertex(y)
    tiles = [amb.ancestor_at(h, n) for h in hexes]
    if len({t.center.key() for t in tiles}) != 3:
        raise ValueError(f"{y!r} is not a vertex of 3 distinct level-{n} tiles")
    sg = amb.scale * amb.g(n)
    for t in tiles:
        if all(y - t.center != sg * OMEGA[j] for j in range(6)):
            raise ValueError(f"{y!r} is not a vertex of the level-{n} tiling")
    return tiles


def patch_extract(w: WindowCovering, y: Eisenstein, n: int,
                  oriented: bool = True, _segmap: dict | None = None) -> Patch:
    """The translation-normalized patch of w at vertex y.

    Windows live on the unit lattice; scaled (shrunk) coverings are
    never assembled into windows.
    """
    if w.ambient.scale.key() != (1, 0):
        raise ValueError("patches are defined on unit-scale windows only")
    tiles = patch_tiles(w, y, n)
    segmap = _segment_map(w) if _segmap is None else _segmap
    rel = []
    for t in tiles:
        for h in w.ambient.tile_hexagons(t):
            s = segmap.get(h.key())
            if s is None:
                raise ValueError(f"hexagon {h!r} is not covered by the window")
            rel.append(_rel_key(s, y, oriented))
    return Patch(
        anchor=y,
        anchor_class=color_class(y - w.ambient.origin),
        level=n,
        oriented=oriented,
        segments=tuple(sorted(rel)),
    )


def _subtile_centers(w: WindowCovering, t: TileRef, level: int) -> list[TileRef]:
    tiles = [t]
    for _ in range(t.level - level):
        tiles = [c for s in tiles for c in w.ambient.child_centers(s)]
    return tiles


def anchor_candidates(w: WindowCovering, within: TileRef, n: int) -> list:
    """All vertices of level-n tiles whose 3-tile patch lies inside `within`."""
    amb = w.ambient
    sg = amb.scale * amb.g(n)
    seen = {}
    for t in _subtile_centers(w, within, n):
        for j in range(6):
            z = t.center + sg * OMEGA[j]
            if z.key() in seen:
                continue
            try:
                tiles = patch_tiles(w, z, n)
            except ValueError:
                continue
            if all(
                amb.ancestor_at(p.center, within.level) == within
                for p in tiles
            ):
                seen[z.key()] = z
    return [seen[k] for k in sorted(seen)]


def window_anchors(w: WindowCovering, n: int) -> list:
    """All vertices whose 3-tile level-n patch is fully covered by w."""
    cells = {Eisenstein(*k) for k in w.region_of}
    amb = w.ambient
    seen = {}
    region = set(w.region_of)
    for h in cells:
        for j in range(6):
            z = h + amb.scale * OMEGA[j]
            if z.key() in seen:
                continue
            try:
                tiles = patch_tiles(w, z, n)
            except ValueError:
                continue
            if all(
                c.key() in region
                for t in tiles
                for c in amb.tile_hexagons(t)
            ):
                seen[z.key()] = z
    return [seen[k] for k in sorted(seen)]


def tile_patch_index(
    w: WindowCovering, within: TileRef, n: int, oriented: bool,
    _segmap: dict | None = None,
) -> dict:
    """All patches anchored inside `within`, keyed by
    (anchor_class, relative segments) -> sorted anchor list."""
    segmap = _segment_map(w) if _segmap is None else _segmap
    idx: dict = {}
    for z in anchor_candidates(w, within, n):
        p = patch_extract(w, z, n, oriented, _segmap=segmap)
        idx.setdefault((p.anchor_class, p.segments), []).append(z)
    return idx


def patch_search(w: WindowCovering, p: Patch, within: TileRef) -> list:
    """All translations realizing p inside `within`; translations only,
    so rotated or reflected occurrences are never reported."""
    idx = tile_patch_index(w, within, p.level, p.oriented)
    return [z - p.anchor for z in idx.get((p.anchor_class, p.segments), [])]


def prop9_check(w: WindowCovering, n: int, oriented: bool) -> dict:
    """Strong local isomorphism report at patch level n.

    Every patch class realized anywhere in the window must recur inside
    every level-(n+3) (nonoriented) or level-(n+4) (oriented) subtile.
    """
    gap = 4 if oriented else 3
    big_level = n + gap
    if oriented and property_p_check(w):
        raise ValueError("oriented window violates the rhombus property")
    if all(t.level < big_level for t in w.cluster):
        raise ValueError(
            f"window depth {w.depth} has no level-{big_level} tile"
        )

    segmap = _segment_map(w)
    classes: dict = {}
    for z in window_anchors(w, n):
        p = patch_extract(w, z, n, oriented, _segmap=segmap)
        classes.setdefault(p.class_key(), p)

    big_tiles = []
    for t in w.cluster:
        if t.level >= big_level:
            big_tiles.extend(_subtile_centers(w, t, big_level))

    witnesses = []
    missing = []
    indices = [
        tile_patch_index(w, big, n, oriented, _segmap=segmap)
        for big in big_tiles
    ]
    for key, p in sorted(classes.items()):
        for big, idx in zip(big_tiles, indices):
            found = idx.get((p.anchor_class, p.segments), [])
            if found:
                witnesses.append((key, big, found[0] - p.anchor))
            else:
                missing.append((key, big))
    return {
        "n": n,
        "oriented": oriented,
        "class_count": len(classes),
        "big_level": big_level,
        "big_tile_count": len(big_tiles),
        "ok": not missing,
        "witnesses": witnesses,
        "missing": missing,
    }


def _transform_rel(segments: tuple, r: int, flip: bool) -> tuple:
    """Rotate a relative patch by r*(2*pi/3) about its anchor and
    optionally reverse every segment."""
    rot = OMEGA[(2 * r) % 6]
    out = []
    for a, b, d in segments:
        p = Eisenstein(a, b) * rot
        d2 = (d + 2 * r) % 6
        if flip:
            p = p + OMEGA[d2] * CHORD
            d2 = (d2 + 3) % 6
        out.append((p.a, p.b, d2))
    return tuple(sorted(out))


def orbit_key(p: Patch) -> tuple:
    """Canonical representative of the patch modulo rotation about the
    anchor and global orientation reversal."""
    return min(
        _transform_rel(p.segments, r, flip)
        for r in range(3)
        for flip in (False, True)
    )


def orbit_size(segments: tuple) -> int:
    """Size of the full rotation/reversal orbit of a relative patch
    (6 generically; 2 for the rotation-symmetric triskelions)."""
    return len(
        {_transform_rel(segments, r, flip) for r in range(3) for flip in (False, True)}
    )


def config_census(w: WindowCovering) -> dict:
    """Census of the oriented vertex-level patch configurations.

    Orbits are counted modulo rotation about the anchor by 2k*pi/3 and
    global orientation reversal.  `free_orbit_count` counts the orbits
    on which this order-6 group acts freely; the remainder are the
    rotation-symmetric triskelion configurations (orbit size 2).
    """
    if property_p_check(w):
        raise ValueError("window violates the rhombus property")
    orbits: dict = {}
    per_class = {1: set(), 2: set()}
    anchor_counts: dict = {}
    segmap = _segment_map(w)
    for z in window_anchors(w, 0):
        p = patch_extract(w, z, 0, oriented=True, _segmap=segmap)
        key = (p.anchor_class, orbit_key(p))
        orbits.setdefault(key, p)
        per_class[p.anchor_class].add(key)
        anchor_counts[key] = anchor_counts.get(key, 0) + 1
    sizes = {key: orbit_size(key[1]) for key in orbits}
    free = [key for key in orbits if sizes[key] == 6]
    return {
        "orbit_count": len(orbits),
        "free_orbit_count": len(free),
        "symmetric_orbit_count": len(orbits) - len(free),
        "per_anchor_class": {c: len(per_class[c]) for c in (1, 2)},
        "orbit_sizes": sizes,
        "anchor_counts": anchor_counts,
        "orbits": orbits,
    }
