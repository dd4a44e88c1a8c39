"""Substitution hierarchy: partitions, ancestry, vertices, frontiers."""

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from gosper.lattice import CENTER_STEP, OMEGA, ZERO, Eisenstein, color_class
from gosper.tiling import Ambient, TileRef


def words(n):
    return ["".join(p) for p in itertools.product("+-", repeat=n)]


@pytest.mark.parametrize("word", words(2) + ["+-+", "-+-"])
def test_children_partition_parent(word):
    amb = Ambient(ZERO, word)
    level = len(word)
    t = TileRef(ZERO, level)
    cells = [h.key() for h in amb.tile_hexagons(t)]
    assert len(cells) == 7**level
    union = sorted(
        h.key() for c in amb.child_centers(t) for h in amb.tile_hexagons(c)
    )
    assert union == cells


@pytest.mark.parametrize("word", ["+-+-", "-++-"])
def test_partition_level_4(word):
    amb = Ambient(ZERO, word)
    t = TileRef(ZERO, 4)
    cells = amb.tile_hexagons(t)
    assert len({h.key() for h in cells}) == 7**4
    union = sorted(
        h.key() for c in amb.child_centers(t) for h in amb.tile_hexagons(c)
    )
    assert union == [h.key() for h in cells]


@pytest.mark.parametrize("word", words(3))
def test_rotation_symmetry(word):
    # a tile is invariant under rotation by pi/3 about its center
    amb = Ambient(ZERO, word)
    keys = {h.key() for h in amb.tile_hexagons(TileRef(ZERO, len(word)))}
    assert all((Eisenstein(*k) * OMEGA[1]).key() in keys for k in keys)


@pytest.mark.parametrize("word", words(2))
def test_ancestor_at_inverts_membership(word):
    amb = Ambient(ZERO, word)
    t = TileRef(ZERO, 2)
    for child in amb.child_centers(t):
        for h in amb.tile_hexagons(child):
            assert amb.ancestor_at(h, 1) == child
            assert amb.ancestor_at(h, 2) == t


@pytest.mark.parametrize("word", words(1) + words(2) + ["+-+", "--+"])
def test_vertex_formula_vs_frontier(word):
    amb = Ambient(ZERO, word)
    t = TileRef(ZERO, len(word))
    fr = amb.tile_frontier(t)
    assert {v.key() for v in fr.vertices} == {
        v.key() for v in amb.tile_vertices(t)
    }
    # corners alternate between the two vertex classes; none is a center
    assert all(color_class(v) != 0 for v in fr.vertices)
    assert {color_class(v) for v in amb.tile_vertices(t)[::2]} <= {1, 2}
    w_corners = [v for v in amb.tile_vertices(t) if color_class(v) == 1]
    assert len(w_corners) == 3


@pytest.mark.parametrize("word", words(2))
def test_frontier_sides(word):
    amb = Ambient(ZERO, word)
    t = TileRef(ZERO, 2)
    fr = amb.tile_frontier(t)
    assert len(fr.sides) == 6
    # each side is a run of 3^level unit edges
    assert all(len(side) == 3**2 for side in fr.sides)
    # neighbors are the 6 same-level adjacent tiles
    assert {n.center.key() for n in fr.neighbors} == {
        n.center.key() for n in amb.neighbor_centers(t)
    }


def test_level1_frontier_worked_instance():
    amb = Ambient(ZERO, "+")
    fr = amb.tile_frontier(TileRef(ZERO, 1))
    assert {v.key() for v in fr.vertices} == {
        (Eisenstein(2, 1) * OMEGA[j]).key() for j in range(6)
    }
    assert {n.center.key() for n in fr.neighbors} == {
        (Eisenstein(1, 4) * OMEGA[j]).key() for j in range(6)
    }


@given(
    st.integers(min_value=-50, max_value=50),
    st.integers(min_value=-50, max_value=50),
    st.sampled_from(["++", "+-", "-+", "--"]),
)
@settings(max_examples=50)
def test_hexagons_at_vertex(a, b, word):
    amb = Ambient(ZERO, word)
    v = Eisenstein(a, b)
    if color_class(v) == 0:
        with pytest.raises(ValueError):
            amb.hexagons_at_vertex(v)
        return
    hexes = amb.hexagons_at_vertex(v)
    assert len(hexes) == 3
    for h in hexes:
        assert color_class(h) == 0
        assert (v - h).norm() == 1


def test_child_centers_structure():
    amb = Ambient(ZERO, "+")
    kids = amb.child_centers(TileRef(ZERO, 1))
    assert kids[0].center == ZERO  # central child first
    assert [k.center.key() for k in kids[1:]] == [
        (CENTER_STEP * OMEGA[j]).key() for j in range(6)
    ]


def test_invalid_inputs():
    with pytest.raises(ValueError):
        Ambient(Eisenstein(1, 0), "+")  # origin is a vertex
    with pytest.raises(ValueError):
        Ambient(ZERO, "+x")
    amb = Ambient(ZERO, "+")
    with pytest.raises(ValueError):
        amb.tile(Eisenstein(1, 1), 1)  # not a level-1 center
    with pytest.raises(ValueError):
        amb.g(2)  # word too short
