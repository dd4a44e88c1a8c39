"""The hexagon substitution hierarchy.

An Ambient fixes an origin (a hexagon center), a chirality word and a
lattice scale, and lazily answers queries about the tiles of every level
of the hierarchy around it.  A tile is referenced by (center, level)
only; all geometry reduces to exact digit decomposition in base gamma.

word[0] is the chirality of the finest grouping (hexagons into 7-hexagon
flowers), word[k] the grouping of level-k tiles into level-(k+1) tiles.
Level-n tile centers form the lattice origin + (1+w) * g(n) * Z[w] where
g(n) is the product of the first n substitution scales.
"""

from __future__ import annotations

from dataclasses import dataclass

from .lattice import (
    CENTER_STEP,
    DIGITS,
    GAMMA,
    OMEGA,
    ONE,
    Eisenstein,
    color_class,
    div_exact,
    divides,
    split_digit,
)


@dataclass(frozen=True)
class TileRef:
    """A level-`level` tile of the hierarchy, identified by its center."""

    center: Eisenstein
    level: int


@dataclass(frozen=True)
class TileFrontier:
    """Boundary data of a tile: 6 vertices, 6 sides, 6 adjacent tiles.

    Vertices are in counterclockwise order; sides[i] is the run of
    directed unit edges (pairs of honeycomb vertices) from vertices[i]
    to vertices[i+1]; neighbors[i] is the tile across sides[i].
    """

    vertices: tuple[Eisenstein, ...]
    sides: tuple[tuple[tuple[Eisenstein, Eisenstein], ...], ...]
    neighbors: tuple[TileRef, ...]


class Ambient:
    """Immutable lazy window of one substitution hierarchy."""

    def __init__(self, origin: Eisenstein, word: str, scale: Eisenstein = ONE):
        if any(c not in "+-" for c in word):
            raise ValueError(f"chirality word must be over '+'/'-': {word!r}")
        if color_class(origin) != 0:
            raise ValueError(f"origin must be a hexagon center: {origin!r}")
        self.origin = origin
        self.word = word
        self.scale = scale
        self._g: list[Eisenstein] = [ONE]

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Ambient)
            and (self.origin, self.word, self.scale)
            == (other.origin, other.word, other.scale)
        )

    def __hash__(self) -> int:
        return hash((self.origin, self.word, self.scale))

    def __repr__(self) -> str:
        return f"Ambient({self.origin!r}, {self.word!r}, scale={self.scale!r})"

    def g(self, level: int) -> Eisenstein:
        """Product of the substitution scales of the first `level` levels."""
        if level > len(self.word):
            raise ValueError(f"level {level} exceeds word length {len(self.word)}")
        while len(self._g) <= level:
            self._g.append(self._g[-1] * GAMMA[self.word[len(self._g) - 1]])
        return self._g[level]

    def shrunk(self) -> "Ambient":
        """The ambient one substitution step coarser (drops the first letter)."""
        if not self.word:
            raise ValueError("cannot shrink: empty chirality word")
        return Ambient(self.origin, self.word[1:], self.scale * GAMMA[self.word[0]])

    def is_center(self, z: Eisenstein) -> bool:
        return divides(CENTER_STEP * self.scale, z - self.origin)

    def tile(self, center: Eisenstein, level: int) -> TileRef:
        """Validated tile reference."""
        if not 0 <= level <= len(self.word):
            raise ValueError(f"level {level} out of range for word {self.word!r}")
        if not divides(CENTER_STEP * self.scale * self.g(level), center - self.origin):
            raise ValueError(f"{center!r} is not a level-{level} tile center")
        return TileRef(center, level)

    def child_centers(self, t: TileRef) -> list[TileRef]:
        """The 7 children of t, the surrounded (central) one first."""
        if t.level < 1:
            raise ValueError("level-0 tiles have no children")
        step = self.scale * self.g(t.level - 1) * CENTER_STEP
        out = [TileRef(t.center, t.level - 1)]
        out.extend(
            TileRef(t.center + step * OMEGA[j], t.level - 1) for j in range(6)
        )
        return out

    def ancestor_at(self, h: Eisenstein, level: int) -> TileRef:
        """The unique level-`level` tile whose hexagons contain hexagon h."""
        if level > len(self.word):
            raise ValueError(f"level {level} exceeds word length {len(self.word)}")
        m = div_exact(h - self.origin, CENTER_STEP * self.scale)
        for k in range(level):
            m, _ = split_digit(m, self.word[k])
        return TileRef(
            self.origin + CENTER_STEP * self.scale * self.g(level) * m, level
        )

    def tile_hexagons(self, t: TileRef) -> list[Eisenstein]:
        """All 7**level hexagon centers of t, in canonical sorted order."""
        cells = [t.center]
        for k in range(t.level):
            step = self.scale * self.g(k) * CENTER_STEP
            offs = [step * d for d in DIGITS]
            cells = [c + o for c in cells for o in offs]
        cells.sort(key=Eisenstein.key)
        return cells

    def tile_vertices(self, t: TileRef) -> list[Eisenstein]:
        """The 6 vertices center + scale*g(level)*w^j, counterclockwise.

        Equivalent to the common-to-3-tiles criterion applied along the
        traced boundary (tested against tile_frontier).
        """
        sg = self.scale * self.g(t.level)
        return [t.center + sg * OMEGA[j] for j in range(6)]

    def neighbor_centers(self, t: TileRef) -> list[TileRef]:
        """The 6 adjacent tiles of the same level."""
        step = self.scale * self.g(t.level) * CENTER_STEP
        return [TileRef(t.center + step * OMEGA[j], t.level) for j in range(6)]

    def hexagon_neighbors(self, h: Eisenstein) -> list[Eisenstein]:
        step = self.scale * CENTER_STEP
        return [h + step * OMEGA[j] for j in range(6)]

    def hexagons_at_vertex(self, v: Eisenstein) -> list[Eisenstein]:
        """The 3 hexagon centers sharing honeycomb vertex v."""
        cls = color_class(div_exact(v - self.origin, self.scale))
        if cls == 0:
            raise ValueError(f"{v!r} is a hexagon center, not a vertex")
        js = (0, 2, 4) if cls == 1 else (1, 3, 5)
        return [v - self.scale * OMEGA[j] for j in js]

    def tile_frontier(self, t: TileRef) -> TileFrontier:
        """Trace the boundary of t; split it at the points common to 3 tiles.

        Deterministic: counterclockwise edge order, lexicographic start edge.
        """
        cells = set(c.key() for c in self.tile_hexagons(t))
        step = self.scale * CENTER_STEP
        # boundary edges, ccw around the tile: corner j -> corner j+1 of an
        # interior hexagon whose j-th neighbor is outside
        edges: dict[tuple[int, int], tuple[Eisenstein, Eisenstein, Eisenstein]] = {}
        for ck in sorted(cells):
            c = Eisenstein(*ck)
            for j in range(6):
                if (c + step * OMEGA[j]).key() not in cells:
                    v0 = c + self.scale * OMEGA[j]
                    v1 = c + self.scale * OMEGA[(j + 1) % 6]
                    edges[v0.key()] = (v0, v1, c)
        start_key = min(edges)
        loop: list[tuple[Eisenstein, Eisenstein, Eisenstein]] = []
        k = start_key
        while True:
            e = edges[k]
            loop.append(e)
            k = e[1].key()
            if k == start_key:
                break
        if len(loop) != len(edges):
            raise AssertionError("tile boundary is not a single closed curve")
        # vertices of the tile: boundary points whose 3 incident hexagons lie
        # in 3 distinct level-t tiles
        corner_idx = []
        for i, (v0, _, _) in enumerate(loop):
            around = self.hexagons_at_vertex(v0)
            owners = {self.ancestor_at(h, t.level).center.key() for h in around}
            if len(owners) == 3:
                corner_idx.append(i)
        if len(corner_idx) != 6:
            raise AssertionError(f"expected 6 tile vertices, found {len(corner_idx)}")
        vertices = tuple(loop[i][0] for i in corner_idx)
        sides = []
        neighbors = []
        for a, b in zip(corner_idx, corner_idx[1:] + [corner_idx[0] + len(loop)]):
            run = [loop[i % len(loop)] for i in range(a, b)]
            sides.append(tuple((e[0], e[1]) for e in run))
            neighbors.append(self._tile_across(run[0], t.level))
        return TileFrontier(vertices, tuple(sides), tuple(neighbors))

    def _tile_across(
        self, edge: tuple[Eisenstein, Eisenstein, Eisenstein], level: int
    ) -> TileRef:
        v0, v1, inside = edge
        # neighbor hexagon across the edge between corners j, j+1 is offset
        # by (1+w)*w^j from the inside hexagon
        j_dir = div_exact(v0 - inside, self.scale)
        outside = inside + self.scale * CENTER_STEP * j_dir
        return self.ancestor_at(outside, level)
