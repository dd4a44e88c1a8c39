"""Turn sequences of the generalized Peano-Gosper curves.

A turn sequence is a finite sequence over {-2,-1,0,+1,+2} coding the
angles 2*pi/3 * (+-1), pi/3 * (+-1), 0 between consecutive segments of a
curve.  build_seq(word) produces the sequence of the curve covering a
tile whose substitution history is the given chirality word; its length
is 7**len(word) - 1.

Internally a sequence for a word of length >= 2 is held as 7**(n-1)
six-entry blocks, each the level-1 sequence of the first letter or its
reverse-negation, joined by connector entries in {-1,+1}.  Expanding one
substitution level rewrites every block into the seven blocks of the
appropriate two-letter pattern while keeping the old connectors, which
is exactly the block replacement rule (no pattern matching needed; the
block identities are tracked as flags).
"""

from __future__ import annotations

from .lattice import Chirality

TurnSeq = tuple[int, ...]

#: Base sequence of a single '+' substitution level.
S_PLUS: TurnSeq = (1, 2, -1, -2, 0, -1)


def negate(seq: TurnSeq) -> TurnSeq:
    return tuple(-x for x in seq)


def bar_seq(seq: TurnSeq) -> TurnSeq:
    """Reverse the order and negate every entry (an involution).

    The curves realizing bar_seq(s) are the orientation reversals of the
    curves realizing s.
    """
    return tuple(-x for x in reversed(seq))


def base_seq(chirality: Chirality) -> TurnSeq:
    return S_PLUS if chirality == "+" else negate(S_PLUS)


# Two-letter patterns: 7 block flags (True = reverse-negated copy of the
# first letter's base sequence) and 6 connectors.
_FLAGS_EQUAL = (False, True, True, False, False, False, True)
_FLAGS_MIXED = (True, False, False, True, True, True, False)
_CONNS_PLUS = (1, 1, -1, -1, 1, -1)
_CONNS_MINUS = (-1, -1, 1, 1, -1, 1)


def _pair_pattern(first: str, second: str) -> tuple[tuple[bool, ...], tuple[int, ...]]:
    flags = _FLAGS_EQUAL if first == second else _FLAGS_MIXED
    conns = _CONNS_PLUS if second == "+" else _CONNS_MINUS
    return flags, conns


def build_seq(word: str) -> TurnSeq:
    """The turn sequence of the coverings of a tile with the given history.

    word[0] is the chirality of the finest substitution level.  Length of
    the result: 7**len(word) - 1.
    """
    if not word:
        raise ValueError("chirality word must be nonempty")
    if any(c not in "+-" for c in word):
        raise ValueError(f"chirality word must be over '+'/'-': {word!r}")
    if len(word) == 1:
        return base_seq(word)

    flags, conns = _pair_pattern(word[-2], word[-1])
    flags = list(flags)
    conns = list(conns)
    for i in range(len(word) - 3, -1, -1):
        p_flags, p_conns = _pair_pattern(word[i], word[i + 1])
        bar_flags = tuple(not f for f in reversed(p_flags))
        bar_conns = tuple(-c for c in reversed(p_conns))
        new_flags: list[bool] = []
        new_conns: list[int] = []
        for k, f in enumerate(flags):
            if k:
                new_conns.append(conns[k - 1])
            if f:
                new_flags.extend(bar_flags)
                new_conns.extend(bar_conns)
            else:
                new_flags.extend(p_flags)
                new_conns.extend(p_conns)
        flags, conns = new_flags, new_conns

    block = base_seq(word[0])
    bar_block = bar_seq(block)
    out: list[int] = []
    for k, f in enumerate(flags):
        if k:
            out.append(conns[k - 1])
        out.extend(bar_block if f else block)
    return tuple(out)


def serialize(word: str, seq: TurnSeq) -> str:
    """Sequence text format: header line, then space-separated entries."""
    return f"word={word}\n" + " ".join(str(x) for x in seq) + "\n"


def deserialize(text: str) -> tuple[str, TurnSeq]:
    lines = text.splitlines()
    if not lines or not lines[0].startswith("word="):
        raise ValueError("missing 'word=' header line")
    word = lines[0][len("word="):]
    entries = tuple(int(x) for x in lines[1].split()) if len(lines) > 1 else ()
    if any(abs(x) > 2 for x in entries):
        raise ValueError("turn entries must lie in -2..2")
    return word, entries
