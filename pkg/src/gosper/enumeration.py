"""Exhaustive backtracking enumeration of tile coverings.

This is the independent oracle behind the covering counts, the extension
counts of a child covering into its parent, and the copy census of
small coverings inside bigger ones.  It never consults the canonical
(lift-based) construction.

Search order and pruning are fixed, so the output order is
deterministic: results are sorted by serialized segments.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .lattice import CENTER_STEP, OMEGA, Eisenstein
from .tiling import Ambient, TileRef
from .curves import (
    Covering,
    Curve,
    Segment,
    hexagon_of,
    nonoriented_key,
    restrict,
    reverse_curve,
    seg_end,
    serialize_curve,
)

DEFAULT_NODE_BUDGET = 100_000_000


class NodeBudgetExceeded(RuntimeError):
    """Raised when the backtracking search exceeds its node budget."""


@dataclass(frozen=True)
class CoveringConstraint:
    """Optional endpoint constraints for the enumeration."""

    fixed_start: Eisenstein | None = None
    fixed_end: Eisenstein | None = None
    forbidden_endpoint: Eisenstein | None = None


def _node_budget(explicit: int | None) -> int:
    if explicit is not None:
        return explicit
    env = os.environ.get("GOSPER_NODE_BUDGET")
    return int(env) if env else DEFAULT_NODE_BUDGET


def enumerate_coverings(
    ambient: Ambient,
    t: TileRef,
    oriented: bool = True,
    constraint: CoveringConstraint | None = None,
    node_budget: int | None = None,
) -> list[Covering]:
    """All coverings of t satisfying the constraint, by backtracking.

    Prunes on (i) contiguity of subtile runs at every level (a left
    subtile must be complete and never re-entered) and (ii) reachability
    of the unvisited hexagons from the head of the path.
    """
    constraint = constraint or CoveringConstraint()
    budget = _node_budget(node_budget)
    scale = ambient.scale
    cells = ambient.tile_hexagons(t)
    cellset = {h.key() for h in cells}
    n = len(cells)

    # curve endpoints must be W vertices of the tile (even-power corners)
    sg = scale * ambient.g(t.level)
    wverts = {(t.center + sg * OMEGA[j]).key() for j in (0, 2, 4)}

    # ancestor center per hexagon for each intermediate level
    anc: list[dict] = [None] * (t.level)  # anc[m] for m in 1..level-1
    for m in range(1, t.level):
        anc[m] = {h.key(): ambient.ancestor_at(h, m).center.key() for h in cells}
    sub_size = [7**m for m in range(t.level)]

    adjacency = {
        h.key(): [
            nb.key() for nb in ambient.hexagon_neighbors(h) if nb.key() in cellset
        ]
        for h in cells
    }

    fixed_start = constraint.fixed_start.key() if constraint.fixed_start else None
    fixed_end = constraint.fixed_end.key() if constraint.fixed_end else None
    forbidden = (
        constraint.forbidden_endpoint.key()
        if constraint.forbidden_endpoint
        else None
    )

    results: list[Curve] = []
    nodes = 0

    def reachable_ok(visited: set, head_cells: list) -> bool:
        # every unvisited hexagon must be reachable from one of the
        # hexagons the path can enter next
        todo = cellset - visited
        if not todo:
            return True
        frontier = [h for h in head_cells if h in todo]
        if not frontier:
            return False
        seen = set(frontier)
        stack = list(frontier)
        while stack:
            h = stack.pop()
            for nb in adjacency[h]:
                if nb in todo and nb not in seen:
                    seen.add(nb)
                    stack.append(nb)
        return len(seen) == len(todo)

    def go(path: list[Segment], visited: set, end, d_last, state):
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise NodeBudgetExceeded(f"node budget {budget} exceeded")
        if len(path) == n:
            results.append(Curve(tuple(path), scale))
            return
        next_opts = []
        head_cells = []
        for turn in (-2, -1, 0, 1, 2):
            nd = (d_last + turn) % 6
            seg = Segment(end, nd)
            h = hexagon_of(seg, scale).key()
            if h in cellset and h not in visited:
                next_opts.append((seg, h))
                if h not in head_cells:
                    head_cells.append(h)
        if not reachable_ok(visited, head_cells):
            return
        for seg, h in next_opts:
            new_state = []
            ok = True
            for m in range(1, t.level):
                cur, cnt, done = state[m - 1]
                a = anc[m][h]
                if a == cur:
                    cnt += 1
                else:
                    if cnt != sub_size[m] or a in done:
                        ok = False
                        break
                    done = done | {cur}
                    cur, cnt = a, 1
                new_state.append((cur, cnt, done))
            if not ok:
                continue
            visited.add(h)
            path.append(seg)
            go(path, visited, seg_end(seg, scale), seg.dir, new_state)
            path.pop()
            visited.remove(h)

    # root segments, in deterministic order
    for h in cells:
        hk = h.key()
        for d in range(6):
            j = d if d % 2 == 0 else (d - 1) % 6
            start = h + scale * OMEGA[j]
            sk = start.key()
            if sk not in wverts:
                continue
            if fixed_start is not None and sk != fixed_start:
                continue
            if forbidden is not None and sk == forbidden:
                continue
            seg = Segment(start, d)
            state = [(anc[m][hk], 1, frozenset()) for m in range(1, t.level)]
            go([seg], {hk}, seg_end(seg, scale), d, state)

    def end_ok(c: Curve) -> bool:
        ek = c.end().key()
        if ek not in wverts or ek == c.start().key():
            return False
        if fixed_end is not None and ek != fixed_end:
            return False
        if forbidden is not None and ek == forbidden:
            return False
        return True

    curves = [c for c in results if end_ok(c)]

    if not oriented:
        by_key = {}
        for c in curves:
            by_key.setdefault(nonoriented_key(c), c)
        out = []
        for key in sorted(by_key):
            c = by_key[key]
            if serialize_curve(c) != key:
                c = reverse_curve(c)
            out.append(Covering(c, t, oriented=False))
        return out
    curves.sort(key=serialize_curve)
    return [Covering(c, t, oriented=True) for c in curves]


_NONORIENTED_CACHE: dict = {}


def _cached_nonoriented(
    ambient: Ambient, t: TileRef, node_budget: int | None
) -> list[Covering]:
    key = (ambient, t)
    if key not in _NONORIENTED_CACHE:
        _NONORIENTED_CACHE[key] = enumerate_coverings(
            ambient, t, oriented=False, node_budget=node_budget
        )
    return _NONORIENTED_CACHE[key]


def extension_count(
    ambient: Ambient,
    child_cov: Covering,
    parent: TileRef,
    node_budget: int | None = None,
) -> int:
    """How many nonoriented coverings of `parent` restrict to child_cov."""
    child = child_cov.tile
    if child.level != parent.level - 1 or ambient.ancestor_at(
        child.center, parent.level
    ) != parent:
        raise ValueError("child_cov.tile is not a child of parent")
    target = nonoriented_key(child_cov.curve)
    count = 0
    for cov in _cached_nonoriented(ambient, parent, node_budget):
        sub = restrict(ambient, cov, child)
        if nonoriented_key(sub.curve) == target:
            count += 1
    return count


def copy_census(
    ambient: Ambient, cov: Covering, target_level: int, oriented: bool
) -> set:
    """Translation classes of the restrictions of cov to all subtiles of
    the target level."""
    if cov.tile.level <= target_level:
        raise ValueError("target level must be below the covered tile's level")
    tiles = [cov.tile]
    for _ in range(cov.tile.level - target_level):
        tiles = [c for t in tiles for c in ambient.child_centers(t)]
    classes = set()
    for sub in tiles:
        r = restrict(ambient, cov, sub)
        classes.add(covering_class(r, oriented))
    return classes


def covering_class(cov: Covering, oriented: bool) -> tuple:
    """Serialized form of a covering relative to its tile center."""
    c = cov.curve
    shifted = Curve(
        tuple(Segment(s.start - cov.tile.center, s.dir) for s in c.segments),
        c.scale,
    )
    return serialize_curve(shifted) if oriented else nonoriented_key(shifted)


def child_vertex_roles(
    ambient: Ambient, parent: TileRef, child: TileRef
) -> dict[tuple[int, int], int]:
    """For each W vertex of a child tile, the number of children of
    `parent` having it as a vertex (1, 2 or 3)."""
    children = ambient.child_centers(parent)
    sg = ambient.scale * ambient.g(child.level)
    corner_offsets = {(sg * OMEGA[j]).key() for j in range(6)}
    out = {}
    for j in (0, 2, 4):
        v = child.center + sg * OMEGA[j]
        count = sum(
            1 for c in children if (v - c.center).key() in corner_offsets
        )
        out[v.key()] = count
    return out


def is_tile_vertex(ambient: Ambient, v: Eisenstein, t: TileRef) -> bool:
    sg = ambient.scale * ambient.g(t.level)
    return any(v - t.center == sg * OMEGA[j] for j in range(6))
