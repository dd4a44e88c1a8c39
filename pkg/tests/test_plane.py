"""Anchored sequences, windows, seams, orientations, JSON format."""

import pytest

from gosper.lattice import CENTER_STEP, OMEGA, ONE, ZERO, Eisenstein, color_class
from gosper.tiling import Ambient
from gosper.curves import hexagon_of
from gosper.plane import (
    covering_window,
    curve_regions,
    enumerate_orientations,
    flip_curve,
    make_x,
    property_p_check,
    valid_next_centers,
    window_assemble,
    window_from_json,
    window_to_json,
)


def test_constant_sequence():
    x = make_x("constant", "+-+", 3)
    assert x.centers == (ZERO,) * 4


def test_side_sequence_keeps_edge_on_frontier():
    word = "+-+"
    x = make_x("side", word, 3)
    h_in, h_out = x.anchor_edge
    for lvl in range(1, 4):
        amb = Ambient(x.centers[lvl], word)
        assert amb.ancestor_at(h_in, lvl).center == x.centers[lvl]
        assert amb.ancestor_at(h_out, lvl).center != x.centers[lvl]


def test_side_sequence_three_choices_each_step():
    x = make_x("side", "+++", 3)
    for lvl in range(3):
        assert len(valid_next_centers(x, lvl)) == 3


def test_vertex_sequence_keeps_vertex():
    word = "-+-"
    x = make_x("vertex", word, 3)
    y = x.anchor_vertex
    assert color_class(y) == 1
    for lvl in range(1, 4):
        amb = Ambient(x.centers[lvl], word)
        assert any(y - x.centers[lvl] == amb.g(lvl) * OMEGA[j] for j in range(6))


def test_spiral_sequence_strictly_interior():
    x = make_x("spiral", "+-+-", 4)
    probe = Ambient(ZERO, "+-+-")
    from gosper.tiling import TileRef

    inner = {h.key() for h in probe.tile_hexagons(TileRef(x.centers[2], 2))}
    outer = {h.key() for h in probe.tile_hexagons(TileRef(x.centers[4], 4))}
    assert inner < outer
    # the level-2 tile with a one-hexagon margin still fits in level 4
    for hk in inner:
        for j in range(6):
            assert (Eisenstein(*hk) + CENTER_STEP * OMEGA[j]).key() in outer


def test_constant_window_single_curve():
    x = make_x("constant", "++", 2)
    w = window_assemble(x, 2, 0)
    assert len(w.cluster) == 1
    assert len(w.region_of) == 49
    assert len(w.curves) == 1
    covered = {hexagon_of(s).key() for s in w.curves[0].segments}
    assert covered == set(w.region_of)


def test_side_window_two_curves():
    x = make_x("side", "+++", 3)
    w = window_assemble(x, 1, 2)
    assert len(w.cluster) == 2
    assert len(w.curves) == 2
    assert sorted(
        tuple(sorted(curve_regions(w, c))) for c in w.curves
    ) == [(1,), (2,)]


def test_vertex_window_curve_through_anchor():
    x = make_x("vertex", "+-+", 3)
    w = window_assemble(x, 1, 2)
    assert len(w.cluster) == 3
    assert len(w.curves) == 2
    spans = sorted(len(curve_regions(w, c)) for c in w.curves)
    assert spans == [1, 2]
    big = next(c for c in w.curves if len(curve_regions(w, c)) == 2)
    assert x.anchor_vertex in big.points()


def test_window_seam_condition():
    # every interior W point is the endpoint of exactly 2 segments
    x = make_x("vertex", "+-+", 3)
    w = window_assemble(x, 1, 2)
    from gosper.curves import seg_end

    incidence = {}
    for c in w.curves:
        for s in c.segments:
            for p in (s.start, seg_end(s)):
                incidence[p.key()] = incidence.get(p.key(), 0) + 1
    region = set(w.region_of)
    for pk, n in incidence.items():
        p = Eisenstein(*pk)
        if all((p - OMEGA[j]).key() in region for j in (0, 2, 4)):
            assert n == 2


def test_choice_out_of_range():
    x = make_x("constant", "++", 2)
    with pytest.raises(ValueError):
        window_assemble(x, 2, 0, choice=10**6)


def test_property_p_on_canonical():
    from gosper.tiling import TileRef
    from gosper.curves import canonical_coverings

    amb = Ambient(ZERO, "+-")
    for cov in canonical_coverings(amb, TileRef(ZERO, 2)):
        assert property_p_check(covering_window(amb, cov)) == []


def test_side_orientations():
    x = make_x("side", "-++", 3)
    w = window_assemble(x, 1, 2)
    masks = enumerate_orientations(w)
    assert len(masks) == 2
    assert tuple(not b for b in masks[0]) == masks[1]
    # flipping one curve of a passing assignment creates violations
    cur = w
    for i, b in enumerate(masks[0]):
        if b:
            cur = flip_curve(cur, i)
    assert property_p_check(cur) == []
    assert property_p_check(flip_curve(cur, 0)) != []


def test_flip_curve_involution():
    x = make_x("constant", "++", 2)
    w = window_assemble(x, 2, 0)
    assert flip_curve(flip_curve(w, 0), 0) == w


def test_json_round_trip():
    x = make_x("vertex", "+-+", 3)
    w = window_assemble(x, 1, 2)
    text = window_to_json(w)
    w2 = window_from_json(text)
    assert window_to_json(w2) == text
    assert w2.curves == w.curves
    assert w2.region_of == w.region_of
    assert w2.cluster == w.cluster


def test_make_x_rejects_bad_inputs():
    with pytest.raises(ValueError):
        make_x("constant", "++", 3)  # levels exceed word
    with pytest.raises(ValueError):
        make_x("nope", "++", 2)
    with pytest.raises(ValueError):
        make_x("vertex", "++", 2, vertex=ZERO)  # a center, not a vertex
    with pytest.raises(ValueError):
        make_x("constant", "++", 2, center=ONE)  # a vertex, not a center
