"""Mechanical verification suites shared by the CLI and the tests.

Every function returns (ok, lines): a verdict plus a human-readable
report.  All quantities are exact; a check fails only on a genuine
counterexample, never on tolerance.
"""

from __future__ import annotations

import itertools

from .lattice import (
    DIGITS,
    GAMMA,
    OMEGA,
    ZERO,
    Eisenstein,
    color_class,
    split_digit,
)
from .tiling import Ambient, TileRef
from .sequences import S_PLUS, bar_seq, build_seq
from .curves import (
    canonical_coverings,
    is_self_avoiding,
    serialize_curve,
    turns_of,
)
from .enumeration import covering_class
from .enumeration import (
    CoveringConstraint,
    child_vertex_roles,
    copy_census,
    enumerate_coverings,
    extension_count,
    is_tile_vertex,
)
from .plane import (
    covering_window,
    curve_regions,
    make_x,
    window_assemble,
    constant_shadow_check,
    coherence_families_check,
    enumerate_orientations,
    property_p_check,
)
from .verify import config_census, prop9_check

PROP3_WORDS = ("+", "-", "++", "+-", "-+", "--")
LEVEL2_WORDS = ("++", "+-", "-+", "--")


def _words(length: int) -> list[str]:
    return ["".join(p) for p in itertools.product("+-", repeat=length)]


def check_prop3(words=PROP3_WORDS) -> tuple[bool, list[str]]:
    """Exactly 6 oriented / 3 nonoriented coverings per tile; endpoint
    pairs are the 6 ordered W-vertex pairs; turn sequences are the built
    sequence or its reverse-negation; enumeration agrees with the
    canonical lift construction."""
    lines = []
    ok = True
    for word in words:
        amb = Ambient(ZERO, word)
        t = TileRef(ZERO, len(word))
        oriented = enumerate_coverings(amb, t, oriented=True)
        nonor = enumerate_coverings(amb, t, oriented=False)
        wv = [(ZERO + amb.g(t.level) * OMEGA[j]).key() for j in (0, 2, 4)]
        pairs = {(c.curve.start().key(), c.curve.end().key()) for c in oriented}
        want_pairs = {(p, q) for p in wv for q in wv if p != q}
        seq = build_seq(word)
        turn_sets = {turns_of(c.curve) for c in oriented}
        canon = canonical_coverings(amb, t, oriented=True)
        agree = {serialize_curve(c.curve) for c in canon} == {
            serialize_curve(c.curve) for c in oriented
        }
        word_ok = (
            len(oriented) == 6
            and len(nonor) == 3
            and pairs == want_pairs
            and turn_sets == {seq, bar_seq(seq)}
            and agree
        )
        ok &= word_ok
        lines.append(
            f"word {word}: {len(oriented)} oriented / {len(nonor)} nonoriented, "
            f"endpoint pairs {'ok' if pairs == want_pairs else 'WRONG'}, "
            f"turns {'ok' if turn_sets == {seq, bar_seq(seq)} else 'WRONG'}, "
            f"canonical {'agrees' if agree else 'DISAGREES'}"
        )
    return ok, lines


def check_t_recursion(max_n: int = 7) -> tuple[bool, list[str]]:
    """The all-'+' sequences satisfy the 7-block recursion
    T' = (T,+1,bar,+1,bar,-1,T,-1,T,+1,T,-1,bar)."""
    lines = []
    ok = True
    t = S_PLUS
    for n in range(1, max_n + 1):
        bar = bar_seq(t)
        nxt = (
            t + (1,) + bar + (1,) + bar + (-1,)
            + t + (-1,) + t + (1,) + t + (-1,) + bar
        )
        built = build_seq("+" * (n + 1))
        good = built == nxt
        ok &= good
        lines.append(
            f"n={n}: length {len(built)} "
            f"{'matches' if good else 'DIFFERS FROM'} the block recursion"
        )
        t = nxt
    return ok, lines


def check_lemma5() -> tuple[bool, list[str]]:
    """Extension counts of child coverings into the parent: central
    child (1,1,1); otherwise (3,0,0) when the lone vertex S1 is not a
    parent vertex, (2,1,0) for (S1S2, S2S3, S1S3) when it is."""
    lines = []
    ok = True
    cases = [(1, ("+", "-")), (2, LEVEL2_WORDS)]
    for level, words in cases:
        for word in words:
            amb = Ambient(ZERO, word)
            parent = TileRef(ZERO, level)
            for pos, child in enumerate(amb.child_centers(parent)):
                covs = enumerate_coverings(amb, child, oriented=False)
                counts = [extension_count(amb, c, parent) for c in covs]
                if pos == 0:
                    good = sorted(counts) == [1, 1, 1]
                    label = "central (1,1,1)"
                else:
                    roles = child_vertex_roles(amb, parent, child)
                    by_pair = {}
                    for c, cnt in zip(covs, counts):
                        pair = frozenset(
                            (
                                roles[c.curve.start().key()],
                                roles[c.curve.end().key()],
                            )
                        )
                        by_pair[pair] = cnt
                    s1 = next(
                        Eisenstein(*vk) for vk, r in roles.items() if r == 1
                    )
                    if is_tile_vertex(amb, s1, parent):
                        want = {
                            frozenset({1, 2}): 2,
                            frozenset({2, 3}): 1,
                            frozenset({1, 3}): 0,
                        }
                        label = "S1 on parent (2,1,0)"
                    else:
                        want = {
                            frozenset({2, 3}): 3,
                            frozenset({1, 2}): 0,
                            frozenset({1, 3}): 0,
                        }
                        label = "S1 interior (3,0,0)"
                    good = by_pair == want
                ok &= good
                if not good:
                    lines.append(
                        f"word {word} level {level} child {pos}: "
                        f"counts {counts} violate {label}"
                    )
            lines.append(
                f"word {word} level {level}: all 7 child positions match the table"
            )
    return ok, lines


def check_cor4() -> tuple[bool, list[str]]:
    """Copy census: every nonoriented level-(n+1) covering contains all
    3 level-n classes (n=0,1); every oriented level-(n+2) covering
    contains all 6 level-n classes (n=0)."""
    lines = []
    ok = True
    for n, words in ((0, ("+", "-")), (1, LEVEL2_WORDS)):
        for word in words:
            amb = Ambient(ZERO, word)
            t = TileRef(ZERO, n + 1)
            want = {
                covering_class(c, False)
                for c in canonical_coverings(amb, TileRef(ZERO, n), oriented=False)
            }
            good = all(
                copy_census(amb, cov, n, oriented=False) >= want
                for cov in canonical_coverings(amb, t, oriented=False)
            )
            ok &= good
            lines.append(
                f"nonoriented n={n} word {word}: all 3 classes "
                f"{'found' if good else 'MISSING'} in every level-{n+1} covering"
            )
    for word in LEVEL2_WORDS:
        amb = Ambient(ZERO, word)
        want = {
            covering_class(c, True)
            for c in canonical_coverings(amb, TileRef(ZERO, 0), oriented=True)
        }
        good = all(
            copy_census(amb, cov, 0, oriented=True) >= want
            for cov in canonical_coverings(amb, TileRef(ZERO, 2), oriented=True)
        )
        ok &= good
        lines.append(
            f"oriented n=0 word {word}: all 6 classes "
            f"{'found' if good else 'MISSING'} in every level-2 covering"
        )
    return ok, lines


def check_prop9(
    word_nonor: str = "+++++",
    word_or: str = "++++++",
    *,
    oriented_depth: int = 5,
) -> tuple[bool, list[str]]:
    """Strong local isomorphism at patch level 0 on constant windows:
    every realized nonoriented class recurs in every level-3 tile; every
    realized oriented class (window passing the rhombus check) recurs in
    every level-4 tile."""
    lines = []
    ok = True
    x = make_x("constant", word_nonor, 5)
    w = window_assemble(x, 4, 1)
    rep = prop9_check(w, 0, oriented=False)
    ok &= rep["ok"]
    lines.append(
        f"nonoriented: {rep['class_count']} realized classes, "
        f"{len(rep['witnesses'])} witnesses over {rep['big_tile_count']} "
        f"level-{rep['big_level']} tiles, missing {len(rep['missing'])}"
    )
    x = make_x("constant", word_or, oriented_depth + 1)
    w = window_assemble(x, oriented_depth, 1)
    rep = prop9_check(w, 0, oriented=True)
    ok &= rep["ok"]
    lines.append(
        f"oriented: {rep['class_count']} realized classes, "
        f"{len(rep['witnesses'])} witnesses over {rep['big_tile_count']} "
        f"level-{rep['big_level']} tiles, missing {len(rep['missing'])}"
    )
    return ok, lines


def check_census() -> tuple[bool, list[str]]:
    """Vertex-configuration census: across all four level-2 words and at
    level 3, the same orbit classes appear; exactly 9 of them are free
    orbits of the rotation/reversal group (the figure's count), plus the
    2 exceptional rotation-symmetric triskelions (11 in total)."""
    lines = []
    ok = True
    key_sets = []
    for word in LEVEL2_WORDS:
        x = make_x("constant", word, 2)
        w = window_assemble(x, 2, 0)
        c = config_census(w)
        good = (
            c["free_orbit_count"] == 9
            and c["orbit_count"] == 11
            and c["symmetric_orbit_count"] == 2
            and c["per_anchor_class"] == {1: 4, 2: 7}
        )
        ok &= good
        key_sets.append(frozenset(c["orbits"]))
        lines.append(
            f"word {word}: {c['free_orbit_count']} free orbits + "
            f"{c['symmetric_orbit_count']} rotation-symmetric "
            f"(total {c['orbit_count']}; per anchor class {c['per_anchor_class']})"
        )
    same = len(set(key_sets)) == 1
    ok &= same
    lines.append(
        "orbit classes identical across the four words"
        if same
        else "orbit classes DIFFER across words"
    )
    x = make_x("constant", "+++", 3)
    w = window_assemble(x, 3, 0)
    c = config_census(w)
    stable = frozenset(c["orbits"]) == key_sets[0] and c["free_orbit_count"] == 9
    ok &= stable
    lines.append(
        f"level 3: {c['free_orbit_count']} free orbits, classes "
        f"{'stable' if stable else 'NOT stable'}"
    )
    return ok, lines


def check_propP(max_level: int = 4) -> tuple[bool, list[str]]:
    """Rhombus property: single-curve canonical coverings up to level 4
    have zero violations; in side-anchored windows (depth 1, lookahead
    2) exactly 2 of the 4 orientation assignments pass, and they are
    mutual reversals."""
    lines = []
    ok = True
    for level in range(1, max_level + 1):
        bad = 0
        total = 0
        for word in _words(level):
            amb = Ambient(ZERO, word)
            for cov in canonical_coverings(amb, TileRef(ZERO, level)):
                total += 1
                if property_p_check(covering_window(amb, cov)):
                    bad += 1
        ok &= bad == 0
        lines.append(
            f"level {level}: {total} canonical coverings, {bad} with violations"
        )
    for word in _words(3):
        x = make_x("side", word, 3)
        w = window_assemble(x, 1, 2)
        masks = enumerate_orientations(w)
        paired = (
            len(masks) == 2
            and tuple(not b for b in masks[0]) == masks[1]
        )
        ok &= paired
        lines.append(
            f"side word {word}: {len(masks)} of 4 orientation assignments pass"
            + ("" if paired else " (NOT mutual reversals)")
        )
    return ok, lines


def check_thm7_shadows(
    constant_word: str = "+-+-+",
    window_words=("+++", "+-+"),
) -> tuple[bool, list[str]]:
    """Finite shadows of the region classification: constant anchor has
    exactly 3 rotation-related coherent coverings per depth; a side
    anchor yields 2 regions and 2 curves neither of which crosses the
    side; a W-vertex anchor yields 3 regions and 2 curves, one passing
    through the anchor and spanning 2 regions."""
    lines = []
    ok = True
    fails = constant_shadow_check(constant_word, len(constant_word))
    ok &= not fails
    lines.append(
        f"constant word {constant_word}: 3 rotation-related coherent coverings "
        f"at each depth <= {len(constant_word)}"
        if not fails
        else f"constant word {constant_word}: " + "; ".join(fails)
    )
    fails = coherence_families_check("+-+", 3)
    ok &= not fails
    lines.append(
        "vertex families: endpoint-avoiding/endpoint-bound families have "
        "sizes 1/2 and restrict coherently"
        if not fails
        else "vertex families: " + "; ".join(fails)
    )
    for word in window_words:
        x = make_x("side", word, 3)
        w = window_assemble(x, 1, 2)
        side_ok = (
            len(w.cluster) == 2
            and len(w.curves) == 2
            and all(len(curve_regions(w, c)) == 1 for c in w.curves)
        )
        ok &= side_ok
        lines.append(
            f"side word {word}: {len(w.cluster)} regions, {len(w.curves)} curves, "
            f"side {'never crossed' if side_ok else 'CROSSED'}"
        )
        x = make_x("vertex", word, 3)
        w = window_assemble(x, 1, 2)
        spans = sorted(len(curve_regions(w, c)) for c in w.curves)
        through = any(
            x.anchor_vertex in c.points()
            for c in w.curves
            if len(curve_regions(w, c)) == 2
        )
        vert_ok = (
            len(w.cluster) == 3
            and len(w.curves) == 2
            and spans == [1, 2]
            and through
        )
        ok &= vert_ok
        lines.append(
            f"vertex word {word}: {len(w.cluster)} regions, {len(w.curves)} curves, "
            f"spans {spans}, anchor "
            f"{'on the spanning curve' if through else 'NOT on the spanning curve'}"
        )
    return ok, lines


def check_prop6(words=("+-+", "-+-")) -> tuple[bool, list[str]]:
    """Constrained covering counts at a persistent W vertex: 1 covering
    avoids the vertex as endpoint, 2 end there; fixing the start at a
    vertex leaves exactly 2 oriented coverings; oriented counts split
    2/2/2 over start vertices."""
    lines = []
    ok = True
    for word in words:
        x = make_x("vertex", word, len(word))
        y = x.anchor_vertex
        amb = Ambient(x.centers[1], word)
        t = TileRef(x.centers[1], 1)
        fixed = enumerate_coverings(
            amb, t, oriented=True, constraint=CoveringConstraint(fixed_start=y)
        )
        avoid = enumerate_coverings(
            amb, t, oriented=False,
            constraint=CoveringConstraint(forbidden_endpoint=y),
        )
        good = len(fixed) == 2 and len(avoid) == 1
        ok &= good
        lines.append(
            f"word {word}: fixed-start at the anchor -> {len(fixed)} oriented, "
            f"anchor-avoiding -> {len(avoid)} nonoriented"
        )
        fails = coherence_families_check(word, len(word))
        ok &= not fails
        lines.append(
            f"word {word}: families restrict coherently"
            if not fails
            else f"word {word}: " + "; ".join(fails)
        )
    return ok, lines


def check_arithmetic(seed: int = 0) -> tuple[bool, list[str]]:
    """Foundational suite: digit round-trips, residue/norm
    multiplicativity, tile partition and rotation symmetry, the vertex
    formula against the traced boundary, and self-avoidance of the
    canonical coverings."""
    import random

    rng = random.Random(seed)
    lines = []
    ok = True

    bad = 0
    for _ in range(10_000):
        z = Eisenstein(rng.randint(-10**6, 10**6), rng.randint(-10**6, 10**6))
        for chi in "+-":
            q, d = split_digit(z, chi)
            if GAMMA[chi] * q + d != z or d not in DIGITS:
                bad += 1
    ok &= bad == 0
    lines.append(f"digit round-trip: 10000 points x 2 chiralities, {bad} failures")

    bad = 0
    for _ in range(1_000):
        z = Eisenstein(rng.randint(-1000, 1000), rng.randint(-1000, 1000))
        u = Eisenstein(rng.randint(-1000, 1000), rng.randint(-1000, 1000))
        if color_class(z * u) != (color_class(z) * color_class(u)) % 3:
            bad += 1
        if (z * u).norm() != z.norm() * u.norm():
            bad += 1
    ok &= bad == 0
    lines.append(f"residue/norm multiplicativity: 1000 pairs, {bad} failures")

    for level, word in ((1, "+"), (2, "+-"), (3, "-+-"), (4, "+-+-")):
        amb = Ambient(ZERO, word)
        t = TileRef(ZERO, level)
        cells = amb.tile_hexagons(t)
        children = amb.child_centers(t)
        union = sorted(
            h.key() for c in children for h in amb.tile_hexagons(c)
        )
        part = union == [h.key() for h in cells]
        ok &= part
        if level <= 3:
            keys = {h.key() for h in cells}
            sym = all((h * OMEGA[1]).key() in keys for h in cells)
            ok &= sym
        lines.append(
            f"level {level} word {word}: partition "
            f"{'ok' if part else 'BROKEN'}"
            + ("" if level > 3 else f", pi/3 symmetry {'ok' if sym else 'BROKEN'}")
        )

    for level, word in ((1, "-"), (2, "++"), (3, "+-+")):
        amb = Ambient(ZERO, word)
        t = TileRef(ZERO, level)
        formula = {v.key() for v in amb.tile_vertices(t)}
        traced = {v.key() for v in amb.tile_frontier(t).vertices}
        good = formula == traced
        ok &= good
        lines.append(
            f"level {level} word {word}: vertex formula "
            f"{'matches' if good else 'DIFFERS FROM'} the 3-tile criterion"
        )

    bad = 0
    total = 0
    for level in range(1, 5):
        for word in _words(level):
            amb = Ambient(ZERO, word)
            for cov in canonical_coverings(amb, TileRef(ZERO, level)):
                total += 1
                if not is_self_avoiding(cov.curve):
                    bad += 1
    ok &= bad == 0
    lines.append(
        f"self-avoidance: {total} canonical coverings up to level 4, {bad} failures"
    )
    return ok, lines
