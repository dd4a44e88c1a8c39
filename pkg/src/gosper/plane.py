"""Anchored center sequences and finite windows of plane coverings.

A center sequence X picks one nested tile per level: x_{n+1} is either
x_n (the level-n tile becomes the central child) or the center of an
adjacent level-n tile.  The four anchor kinds keep a chosen feature on
the frontier forever: nothing (constant), strict interior growth
(spiral), one honeycomb edge on a tile side (side), or one honeycomb
vertex as a tile vertex (vertex).

A window materializes the plane covering near the anchor at a finite
depth N: the cluster of 1-3 level-N tiles around the anchor, each
covered by the restriction of a canonical covering of its level-(N+M)
ancestor.  Only seam-compatible combinations are kept: every W point
interior to the cluster must be the endpoint of exactly two segments of
one curve.  At a W anchor vertex the two fragments ending there are
joined into a single curve, which is the finite shadow of the union of
two half curves.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace

from .lattice import CENTER_STEP, GAMMA, OMEGA, ONE, ZERO, Eisenstein, color_class
from .tiling import Ambient, TileRef
from .curves import (
    CHORD,
    Covering,
    Curve,
    Segment,
    canonical_coverings,
    hexagon_of,
    restrict,
    reverse_curve,
    serialize_curve,
)

KINDS = ("constant", "spiral", "side", "vertex")


@dataclass(frozen=True)
class XSeq:
    """A finite prefix x_0..x_n of an anchored center sequence."""

    kind: str
    word: str
    centers: tuple[Eisenstein, ...]
    #: for kind "side": the two hexagons flanking the anchored edge,
    #: the first one inside every nested tile
    anchor_edge: tuple[Eisenstein, Eisenstein] | None = None
    #: for kind "vertex": the honeycomb vertex kept on the frontier
    anchor_vertex: Eisenstein | None = None


def _dilate(cells: list[Eisenstein]) -> set[tuple[int, int]]:
    """The cells together with all their honeycomb neighbors."""
    out = set()
    for c in cells:
        out.add(c.key())
        for j in range(6):
            out.add((c + CENTER_STEP * OMEGA[j]).key())
    return out


def make_x(
    kind: str,
    word: str,
    levels: int,
    *,
    center: Eisenstein | None = None,
    edge: tuple[Eisenstein, Eisenstein] | None = None,
    vertex: Eisenstein | None = None,
) -> XSeq:
    """Greedy anchored construction of x_0..x_levels.

    At each level all valid candidates are computed and the
    lexicographically least center is chosen, so the result is
    deterministic.  Raises ValueError when no candidate maintains the
    anchor condition.
    """
    if kind not in KINDS:
        raise ValueError(f"unknown anchor kind {kind!r}")
    if levels > len(word):
        raise ValueError(f"levels {levels} exceeds word length {len(word)}")

    if kind == "side":
        h_in, h_out = edge if edge is not None else (ZERO, CENTER_STEP)
        if (h_out - h_in) not in {CENTER_STEP * OMEGA[j] for j in range(6)}:
            raise ValueError("anchor edge hexagons must be adjacent")
        x0 = h_in
    elif kind == "vertex":
        y = vertex if vertex is not None else ONE
        cls = color_class(y)
        if cls == 0:
            raise ValueError(f"{y!r} is a hexagon center, not a vertex")
        js = (0, 2, 4) if cls == 1 else (1, 3, 5)
        x0 = min((y - OMEGA[j] for j in js), key=Eisenstein.key)
    else:
        x0 = center if center is not None else ZERO
        if color_class(x0) != 0:
            raise ValueError(f"anchor center must be a hexagon center: {x0!r}")

    centers = [x0]
    probe = Ambient(ZERO, word)  # only for origin-independent hexagon sets
    g = ONE
    for k in range(levels):
        lvl = k + 1
        xk = centers[-1]
        cands = sorted(
            {xk.key()} | {(xk + CENTER_STEP * g * OMEGA[j]).key() for j in range(6)}
        )
        chosen = None
        for ck in cands:
            cand = Eisenstein(*ck)
            if _anchor_ok(kind, cand, lvl, centers, word, probe, g,
                          edge=(h_in, h_out) if kind == "side" else None,
                          vertex=y if kind == "vertex" else None):
                chosen = cand
                break
        if chosen is None:
            raise ValueError(f"no valid level-{lvl} center for anchor {kind!r}")
        centers.append(chosen)
        g = g * GAMMA[word[k]]

    return XSeq(
        kind,
        word,
        tuple(centers),
        anchor_edge=(h_in, h_out) if kind == "side" else None,
        anchor_vertex=y if kind == "vertex" else None,
    )


def _anchor_ok(kind, cand, lvl, centers, word, probe, g, *, edge, vertex) -> bool:
    if kind == "constant":
        return cand == centers[0]
    if kind == "spiral":
        if lvl < 2:
            return True
        inner = probe.tile_hexagons(TileRef(centers[lvl - 2], lvl - 2))
        outer = {h.key() for h in probe.tile_hexagons(TileRef(cand, lvl))}
        return _dilate(inner) <= outer
    amb = Ambient(cand, word)
    if kind == "side":
        h_in, h_out = edge
        return (
            amb.ancestor_at(h_in, lvl).center == cand
            and amb.ancestor_at(h_out, lvl).center != cand
        )
    # vertex
    gl = g * GAMMA[word[lvl - 1]]
    return any(vertex - cand == gl * OMEGA[j] for j in range(6))


def valid_next_centers(x: XSeq, level: int) -> list[Eisenstein]:
    """All valid choices for x_{level+1} given x_0..x_level (diagnostic)."""
    probe = Ambient(ZERO, x.word)
    g = ONE
    for k in range(level):
        g = g * GAMMA[x.word[k]]
    xk = x.centers[level]
    cands = sorted(
        {xk.key()} | {(xk + CENTER_STEP * g * OMEGA[j]).key() for j in range(6)}
    )
    out = []
    for ck in cands:
        cand = Eisenstein(*ck)
        if _anchor_ok(x.kind, cand, level + 1, x.centers, x.word, probe, g,
                      edge=x.anchor_edge, vertex=x.anchor_vertex):
            out.append(cand)
    return out


@dataclass(frozen=True)
class WindowCovering:
    """Finite shadow of a plane covering around an anchor.

    Every hexagon of the cluster carries exactly one segment of one
    curve; each curve is the restriction of a canonical covering of a
    level-(depth+lookahead) tile, except that at a W anchor vertex two
    such fragments are joined into one curve.
    """

    ambient: Ambient
    depth: int
    lookahead: int
    cluster: tuple[TileRef, ...]
    region_of: dict
    curves: tuple[Curve, ...]
    oriented: tuple[bool, ...]
    anchor_vertex: Eisenstein | None = None


def window_assemble(
    x: XSeq, depth: int, lookahead: int, choice: int = 0
) -> WindowCovering:
    """Assemble the depth-`depth` window of the covering selected by `choice`.

    `choice` indexes the seam-compatible combinations of canonical
    coverings of the level-(depth+lookahead) ancestors of the cluster
    tiles, in lexicographic order of per-ancestor covering indices.
    """
    top_level = depth + lookahead
    if top_level >= len(x.centers):
        raise ValueError("depth + lookahead exceeds the generated sequence")
    amb = Ambient(x.centers[top_level], x.word)

    if x.kind in ("constant", "spiral"):
        cluster = [TileRef(x.centers[depth], depth)]
    elif x.kind == "side":
        h_in, h_out = x.anchor_edge
        cluster = [amb.ancestor_at(h_in, depth), amb.ancestor_at(h_out, depth)]
    else:
        cluster = [
            amb.ancestor_at(h, depth)
            for h in amb.hexagons_at_vertex(x.anchor_vertex)
        ]
    cluster.sort(key=lambda t: t.center.key())
    if len({t.center.key() for t in cluster}) != len(cluster):
        raise ValueError("cluster tiles are not distinct; inconsistent anchor")

    region_of = {}
    for rid, t in enumerate(cluster, start=1):
        for h in amb.tile_hexagons(t):
            region_of[h.key()] = rid

    y_w = None
    if x.kind == "vertex" and color_class(x.anchor_vertex - amb.origin) == 1:
        y_w = x.anchor_vertex

    tops = [amb.ancestor_at(t.center, top_level) for t in cluster]
    cov_lists = [canonical_coverings(amb, top, oriented=True) for top in tops]
    fragments = [
        [restrict(amb, cov, t).curve for cov in covs]
        for t, covs in zip(cluster, cov_lists)
    ]

    valid: list[tuple[Curve, ...]] = []
    indices = [0] * len(cluster)
    while True:
        frags = [fragments[i][indices[i]] for i in range(len(cluster))]
        merged = _assemble_curves(frags, region_of, y_w)
        if merged is not None:
            valid.append(merged)
        # next index vector, lexicographic
        i = len(indices) - 1
        while i >= 0:
            indices[i] += 1
            if indices[i] < len(fragments[i]):
                break
            indices[i] = 0
            i -= 1
        if i < 0:
            break
    if not 0 <= choice < len(valid):
        raise ValueError(
            f"choice {choice} out of range: {len(valid)} compatible coverings"
        )
    curves = valid[choice]
    return WindowCovering(
        ambient=amb,
        depth=depth,
        lookahead=lookahead,
        cluster=tuple(cluster),
        region_of=region_of,
        curves=curves,
        oriented=(True,) * len(curves),
        anchor_vertex=x.anchor_vertex if x.kind == "vertex" else None,
    )


def _assemble_curves(frags, region_of, y_w):
    """Seam check; on success the curves of the window, else None.

    Every W point whose three hexagons lie in the cluster must be the
    endpoint of exactly two segments; they must belong to one fragment
    unless the point is the W anchor vertex, where two fragments end and
    are joined.
    """
    incidence: dict = {}
    for i, f in enumerate(frags):
        for s in f.segments:
            for p in (s.start, s.start + f.scale * OMEGA[s.dir] * CHORD):
                incidence.setdefault(p.key(), []).append(i)

    merge_pair = None
    for pk, owners in incidence.items():
        p = Eisenstein(*pk)
        interior = all(
            (p - OMEGA[j]).key() in region_of for j in (0, 2, 4)
        )
        if not interior:
            continue
        if len(owners) != 2:
            return None
        if owners[0] != owners[1]:
            if y_w is None or p != y_w:
                return None
            merge_pair = tuple(owners)
    if y_w is not None and merge_pair is None:
        return None

    if merge_pair is None:
        return tuple(frags)
    a, b = merge_pair
    fa, fb = frags[a], frags[b]
    if fa.start() == y_w:
        fa = reverse_curve(fa)
    if fb.end() == y_w:
        fb = reverse_curve(fb)
    if fa.end() != y_w or fb.start() != y_w:
        return None
    merged = Curve(fa.segments + fb.segments, fa.scale)
    out = []
    emitted = False
    for i, f in enumerate(frags):
        if i in (a, b):
            if not emitted:
                out.append(merged)
                emitted = True
        else:
            out.append(f)
    return tuple(out)


def property_p_check(w: WindowCovering, core_only: bool = True) -> list:
    """Violations of the rhombus orientation property.

    Two segments are opposite sides of a rhombus exactly when they have
    equal or opposite directions and their start points differ by a
    norm-3 offset not parallel to the segments.  Equal directions (same
    orientation) are violations.  The core is the cluster itself: a
    rhombus counts when both of its hexagons carry window segments, so
    no judgment is made about context outside the window.
    """
    scale = w.ambient.scale
    core = set(w.region_of)
    index = {}
    for c in w.curves:
        for s in c.segments:
            index[(s.start.key(), s.dir)] = s
    violations = []
    for (sk, d), s in sorted(index.items()):
        for j in range(6):
            if j == (d + 2) % 6 or j == (d + 5) % 6:
                continue
            other_start = s.start + scale * CENTER_STEP * OMEGA[j]
            key = (other_start.key(), d)
            if key in index and key > (sk, d):
                other = index[key]
                h1 = hexagon_of(s, scale).key()
                h2 = hexagon_of(other, scale).key()
                if h1 in core and h2 in core:
                    violations.append((s.key(), other.key()))
    return violations


def flip_curve(w: WindowCovering, curve_id: int) -> WindowCovering:
    """Reverse the orientation of one curve (an involution)."""
    if not 0 <= curve_id < len(w.curves):
        raise ValueError(f"no curve {curve_id} in window")
    curves = list(w.curves)
    curves[curve_id] = reverse_curve(curves[curve_id])
    return replace(w, curves=tuple(curves))


def enumerate_orientations(w: WindowCovering, core_only: bool = True) -> list:
    """All flip assignments (tuples of booleans) satisfying the rhombus
    property; True in position i means curve i is reversed."""
    k = len(w.curves)
    out = []
    for mask in range(2**k):
        bits = tuple(bool(mask >> i & 1) for i in range(k))
        cur = w
        for i, b in enumerate(bits):
            if b:
                cur = flip_curve(cur, i)
        if not property_p_check(cur, core_only):
            out.append(bits)
    return out


def window_to_json(w: WindowCovering) -> str:
    """The window file format; canonical key order, integers only."""
    doc = {
        "ambient": {
            "origin": [w.ambient.origin.a, w.ambient.origin.b],
            "lambda": w.ambient.word,
            "wClass": 1,
        },
        "depth": w.depth,
        "lookahead": w.lookahead,
        "cluster": [
            {"center": [t.center.a, t.center.b], "level": t.level}
            for t in w.cluster
        ],
        "regions": {
            f"{k[0]},{k[1]}": rid
            for k, rid in sorted(w.region_of.items())
        },
        "curves": [
            {
                "oriented": w.oriented[i],
                "segments": [
                    {"start": [s.start.a, s.start.b], "dir": s.dir}
                    for s in c.segments
                ],
            }
            for i, c in enumerate(w.curves)
        ],
    }
    return json.dumps(doc, indent=2) + "\n"


def window_from_json(text: str) -> WindowCovering:
    doc = json.loads(text)
    amb = Ambient(
        Eisenstein(*doc["ambient"]["origin"]), doc["ambient"]["lambda"]
    )
    cluster = tuple(
        TileRef(Eisenstein(*t["center"]), t["level"]) for t in doc["cluster"]
    )
    region_of = {
        tuple(int(x) for x in k.split(",")): rid
        for k, rid in doc["regions"].items()
    }
    curves = []
    oriented = []
    for c in doc["curves"]:
        segs = tuple(
            Segment(Eisenstein(*s["start"]), s["dir"]) for s in c["segments"]
        )
        curves.append(Curve(segs, amb.scale))
        oriented.append(bool(c["oriented"]))
    return WindowCovering(
        ambient=amb,
        depth=doc["depth"],
        lookahead=doc["lookahead"],
        cluster=cluster,
        region_of=region_of,
        curves=tuple(curves),
        oriented=tuple(oriented),
    )


def covering_window(amb: Ambient, cov: Covering) -> WindowCovering:
    """A single-tile window wrapping one covering (for property checks,
    patch extraction and rendering of plain coverings)."""
    region_of = {h.key(): 1 for h in amb.tile_hexagons(cov.tile)}
    return WindowCovering(
        ambient=amb,
        depth=cov.tile.level,
        lookahead=0,
        cluster=(cov.tile,),
        region_of=region_of,
        curves=(cov.curve,),
        oriented=(cov.oriented,),
    )


def curve_regions(w: WindowCovering, c: Curve) -> set:
    """Region ids visited by a curve."""
    return {
        w.region_of[hexagon_of(s, c.scale).key()] for s in c.segments
    }


def rotate_covering_about(cov: Covering, center: Eisenstein, r: int) -> Curve:
    """The curve of cov rotated by r*(2*pi/3) about a fixed point."""
    rot = OMEGA[(2 * r) % 6]
    segs = tuple(
        Segment(center + (s.start - center) * rot, (s.dir + 2 * r) % 6)
        for s in cov.curve.segments
    )
    return Curve(segs, cov.curve.scale)


def constant_shadow_check(word: str, max_depth: int) -> list[str]:
    """Theorem shadow for a constant sequence: at every depth the 3
    nonoriented coverings are pairwise 2*pi/3 rotations of one another
    and restrict onto the depth-(n-1) triple.  Returns failure notes."""
    from .curves import nonoriented_key

    amb = Ambient(ZERO, word)
    fails = []
    prev_keys = None
    for n in range(1, max_depth + 1):
        covs = canonical_coverings(amb, TileRef(ZERO, n), oriented=False)
        keys = {nonoriented_key(c.curve) for c in covs}
        if len(covs) != 3:
            fails.append(f"depth {n}: {len(covs)} nonoriented coverings")
        rot_keys = {
            nonoriented_key(rotate_covering_about(covs[0], ZERO, r))
            for r in range(3)
        }
        if rot_keys != keys:
            fails.append(f"depth {n}: coverings are not a rotation orbit")
        if prev_keys is not None:
            rest = {
                nonoriented_key(
                    restrict(amb, c, TileRef(ZERO, n - 1)).curve
                )
                for c in covs
            }
            if rest != prev_keys:
                fails.append(f"depth {n}: restrictions differ from depth {n-1}")
        prev_keys = keys
    return fails


def coherence_families_check(word: str, levels: int) -> list[str]:
    """Restriction coherence of the two constrained covering families at
    a persistent W vertex: endpoints avoiding the vertex stay avoiding
    under restriction, endpoint at the vertex stays at the vertex."""
    x = make_x("vertex", word, levels)
    y = x.anchor_vertex
    amb = Ambient(x.centers[levels], x.word)
    fails = []
    fam = {}
    for n in range(1, levels + 1):
        covs = canonical_coverings(
            amb, TileRef(x.centers[n], n), oriented=False
        )
        e = [c for c in covs if y not in (c.curve.start(), c.curve.end())]
        f = [c for c in covs if y in (c.curve.start(), c.curve.end())]
        if len(e) != 1 or len(f) != 2:
            fails.append(f"level {n}: family sizes {len(e)}/{len(f)}, not 1/2")
        fam[n] = (e, f)
    from .curves import nonoriented_key

    for n in range(2, levels + 1):
        for m in range(1, n):
            sub = TileRef(x.centers[m], m)
            e_keys = {nonoriented_key(c.curve) for c in fam[m][0]}
            f_keys = {nonoriented_key(c.curve) for c in fam[m][1]}
            for c in fam[n][0]:
                k = nonoriented_key(restrict(amb, c, sub).curve)
                if k not in e_keys:
                    fails.append(f"E_{n} -> E_{m} broken")
            for c in fam[n][1]:
                k = nonoriented_key(restrict(amb, c, sub).curve)
                if k not in f_keys:
                    fails.append(f"F_{n} -> F_{m} broken")
    return fails
