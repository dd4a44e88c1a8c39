"""Exhaustive enumeration oracle: counts, constraints, golden files."""

import json
import os
import pathlib

import pytest

from gosper.lattice import OMEGA, ZERO
from gosper.tiling import Ambient, TileRef
from gosper.curves import canonical_coverings, nonoriented_key, serialize_curve
from gosper.enumeration import (
    CoveringConstraint,
    NodeBudgetExceeded,
    child_vertex_roles,
    copy_census,
    covering_class,
    enumerate_coverings,
    extension_count,
    is_tile_vertex,
)

DATA = pathlib.Path(__file__).parent / "data"

WORD_FILES = {
    "+": "enum_p.json",
    "-": "enum_m.json",
    "++": "enum_pp.json",
    "+-": "enum_pm.json",
    "-+": "enum_mp.json",
    "--": "enum_mm.json",
}


@pytest.mark.parametrize("word", sorted(WORD_FILES))
def test_golden_files(word):
    amb = Ambient(ZERO, word)
    covs = enumerate_coverings(amb, TileRef(ZERO, len(word)))
    got = [
        [{"start": [s.start.a, s.start.b], "dir": s.dir} for s in c.curve.segments]
        for c in covs
    ]
    doc = json.loads((DATA / WORD_FILES[word]).read_text())
    assert doc["count"] == 6
    assert [c["segments"] for c in doc["curves"]] == got


@pytest.mark.parametrize("word", sorted(WORD_FILES))
def test_enumeration_matches_canonical(word):
    amb = Ambient(ZERO, word)
    t = TileRef(ZERO, len(word))
    enum = enumerate_coverings(amb, t)
    canon = canonical_coverings(amb, t)
    assert {serialize_curve(c.curve) for c in enum} == {
        serialize_curve(c.curve) for c in canon
    }


def test_endpoint_pair_injectivity():
    # the 6 oriented coverings hit the 6 ordered W-vertex pairs exactly once
    for word in ("+", "-+"):
        amb = Ambient(ZERO, word)
        t = TileRef(ZERO, len(word))
        covs = enumerate_coverings(amb, t)
        pairs = [(c.curve.start().key(), c.curve.end().key()) for c in covs]
        assert len(set(pairs)) == 6
        wv = {(amb.g(t.level) * OMEGA[j]).key() for j in (0, 2, 4)}
        assert set(pairs) == {(p, q) for p in wv for q in wv if p != q}


def test_fixed_start_constraint():
    amb = Ambient(ZERO, "+")
    t = TileRef(ZERO, 1)
    start = amb.g(1) * OMEGA[0]  # the vertex gamma itself
    covs = enumerate_coverings(
        amb, t, constraint=CoveringConstraint(fixed_start=start)
    )
    assert len(covs) == 2
    assert all(c.curve.start() == start for c in covs)


def test_constraint_sum_law():
    # fixing the start at each W vertex partitions the 6 coverings 2+2+2
    amb = Ambient(ZERO, "+-")
    t = TileRef(ZERO, 2)
    total = 0
    for j in (0, 2, 4):
        v = amb.g(2) * OMEGA[j]
        total += len(
            enumerate_coverings(amb, t, constraint=CoveringConstraint(fixed_start=v))
        )
    assert total == 6


def test_forbidden_endpoint():
    amb = Ambient(ZERO, "+")
    t = TileRef(ZERO, 1)
    v = amb.g(1) * OMEGA[0]
    covs = enumerate_coverings(
        amb, t, oriented=False, constraint=CoveringConstraint(forbidden_endpoint=v)
    )
    # exactly one nonoriented covering avoids any given vertex
    assert len(covs) == 1
    assert v not in (covs[0].curve.start(), covs[0].curve.end())


def test_fixed_both_endpoints():
    amb = Ambient(ZERO, "-")
    t = TileRef(ZERO, 1)
    p = amb.g(1) * OMEGA[0]
    q = amb.g(1) * OMEGA[2]
    covs = enumerate_coverings(
        amb, t, constraint=CoveringConstraint(fixed_start=p, fixed_end=q)
    )
    assert len(covs) == 1


def test_extension_counts_level_1():
    # worked instance of the extension table at parent level 1
    amb = Ambient(ZERO, "+")
    parent = TileRef(ZERO, 1)
    children = amb.child_centers(parent)
    central = children[0]
    for cov in enumerate_coverings(amb, central, oriented=False):
        assert extension_count(amb, cov, parent) == 1
    child = children[1]
    roles = child_vertex_roles(amb, parent, child)
    assert sorted(roles.values()) == [1, 2, 3]
    covs = enumerate_coverings(amb, child, oriented=False)
    counts = sorted(extension_count(amb, c, parent) for c in covs)
    s1 = next(k for k, r in roles.items() if r == 1)
    from gosper.lattice import Eisenstein

    if is_tile_vertex(amb, Eisenstein(*s1), parent):
        assert counts == [0, 1, 2]
    else:
        assert counts == [0, 0, 3]


def test_copy_census_contains_all_classes():
    amb = Ambient(ZERO, "+-")
    want3 = {
        covering_class(c, False)
        for c in canonical_coverings(amb, TileRef(ZERO, 0), oriented=False)
    }
    want6 = {
        covering_class(c, True)
        for c in canonical_coverings(amb, TileRef(ZERO, 0), oriented=True)
    }
    for cov in canonical_coverings(amb, TileRef(ZERO, 1), oriented=False):
        assert copy_census(amb, cov, 0, oriented=False) >= want3
    for cov in canonical_coverings(amb, TileRef(ZERO, 2), oriented=True):
        assert copy_census(amb, cov, 0, oriented=True) >= want6


def test_node_budget(monkeypatch):
    amb = Ambient(ZERO, "++")
    with pytest.raises(NodeBudgetExceeded):
        enumerate_coverings(amb, TileRef(ZERO, 2), node_budget=10)
    monkeypatch.setenv("GOSPER_NODE_BUDGET", "10")
    with pytest.raises(NodeBudgetExceeded):
        enumerate_coverings(amb, TileRef(ZERO, 2))
    monkeypatch.delenv("GOSPER_NODE_BUDGET")
    assert len(enumerate_coverings(amb, TileRef(ZERO, 2))) == 6


def test_nonoriented_dedup():
    amb = Ambient(ZERO, "+")
    t = TileRef(ZERO, 1)
    covs = enumerate_coverings(amb, t, oriented=False)
    keys = [nonoriented_key(c.curve) for c in covs]
    assert keys == sorted(keys)
    assert all(serialize_curve(c.curve) == k for c, k in zip(covs, keys))
