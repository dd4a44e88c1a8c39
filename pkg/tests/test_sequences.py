"""Turn sequences: algebraic laws, recursion, serialization."""

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from gosper.sequences import (
    S_PLUS,
    bar_seq,
    base_seq,
    build_seq,
    deserialize,
    negate,
    serialize,
)

word_st = st.text(alphabet="+-", min_size=1, max_size=5)


def flip(word):
    return "".join("-" if c == "+" else "+" for c in word)


@given(word_st)
def test_length_law(word):
    assert len(build_seq(word)) == 7 ** len(word) - 1


@given(word_st)
def test_bar_involution(word):
    s = build_seq(word)
    assert bar_seq(bar_seq(s)) == s
    assert bar_seq(s) == tuple(-x for x in reversed(s))


@given(word_st)
def test_negation_law(word):
    # flipping every chirality letter negates the whole sequence
    assert build_seq(flip(word)) == negate(build_seq(word))


@given(word_st)
def test_entries_in_range(word):
    assert all(-2 <= x <= 2 for x in build_seq(word))


def test_base_sequences():
    assert build_seq("+") == S_PLUS == (1, 2, -1, -2, 0, -1)
    assert build_seq("-") == negate(S_PLUS)
    assert base_seq("+") == S_PLUS


@pytest.mark.parametrize(
    "word", ["".join(p) for n in (2, 3, 4) for p in itertools.product("+-", repeat=n)]
)
def test_block_structure(word):
    # oracle: the sequence decomposes into 7^(n-1) blocks that are the
    # base sequence of the finest letter or its reverse-negation, joined
    # by +-1 connectors
    s = build_seq(word)
    block = base_seq(word[0])
    rev = bar_seq(block)
    n_blocks = 7 ** (len(word) - 1)
    idx = 0
    for k in range(n_blocks):
        assert s[idx : idx + 6] in (block, rev)
        idx += 6
        if k < n_blocks - 1:
            assert s[idx] in (-1, 1)
            idx += 1
    assert idx == len(s)


def test_t_recursion_small():
    # the all-plus family satisfies the 7-block recursion
    t = S_PLUS
    for n in range(1, 5):
        bar = bar_seq(t)
        t = (
            t + (1,) + bar + (1,) + bar + (-1,)
            + t + (-1,) + t + (1,) + t + (-1,) + bar
        )
        assert build_seq("+" * (n + 1)) == t


def test_geometric_oracle():
    # the built sequence is realized by the canonical coverings
    from gosper.curves import canonical_coverings, turns_of
    from gosper.tiling import Ambient, TileRef
    from gosper.lattice import ZERO

    for word in ("+-+", "-++", "+-+-"):
        amb = Ambient(ZERO, word)
        turn_sets = {
            turns_of(c.curve)
            for c in canonical_coverings(amb, TileRef(ZERO, len(word)))
        }
        s = build_seq(word)
        assert turn_sets == {s, bar_seq(s)}


@given(word_st)
@settings(max_examples=30)
def test_serialize_round_trip(word):
    s = build_seq(word)
    assert deserialize(serialize(word, s)) == (word, s)


def test_serialize_format():
    text = serialize("+-", (1, -2, 0))
    assert text == "word=+-\n1 -2 0\n"


def test_invalid_words():
    with pytest.raises(ValueError):
        build_seq("")
    with pytest.raises(ValueError):
        build_seq("+x")
    with pytest.raises(ValueError):
        deserialize("1 2 3\n")
    with pytest.raises(ValueError):
        deserialize("word=+\n1 5\n")
