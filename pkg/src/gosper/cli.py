"""Command-line interface.

Subcommands: seq, enum, cover, plane, verify, render.  Exit status 0 on
success/verified, 1 on verification failure, 2 on usage error.  Every
command is deterministic: repeated runs produce byte-identical files.
"""

from __future__ import annotations

import argparse
import json
import sys

from .lattice import ZERO, Eisenstein
from .tiling import Ambient, TileRef
from .sequences import build_seq, serialize
from .curves import canonical_coverings
from .enumeration import CoveringConstraint, NodeBudgetExceeded, enumerate_coverings
from .plane import (
    KINDS,
    covering_window,
    make_x,
    window_assemble,
    window_from_json,
    window_to_json,
)
from .render import RenderSpec, render_svg
from .verify import config_census
from . import checks

VERIFY_SUBS = {
    "prop3": checks.check_prop3,
    "t-recursion": checks.check_t_recursion,
    "lemma5": checks.check_lemma5,
    "cor4": checks.check_cor4,
    "prop6": checks.check_prop6,
    "prop9": checks.check_prop9,
    "propP": checks.check_propP,
    "census": checks.check_census,
    "thm7": checks.check_thm7_shadows,
    "arithmetic": checks.check_arithmetic,
}


def _word(value) -> str:
    # 'p'/'m' are accepted aliases for '+'/'-' because a bare "--" value
    # cannot be passed through argparse
    value = str(value).replace("p", "+").replace("m", "-")
    if not value or any(c not in "+-" for c in value):
        raise argparse.ArgumentTypeError(
            f"chirality word must be a nonempty string over '+'/'-' "
            f"(or 'p'/'m'): {value!r}"
        )
    return value


def _point(value: str) -> Eisenstein:
    try:
        a, b = (int(x) for x in value.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 'a,b' integers: {value!r}")
    return Eisenstein(a, b)


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as f:
            f.write(text)


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="gosper",
        description="Exact generalized Peano-Gosper tilings, curve "
        "coverings and theorem verification.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("seq", help="write the turn sequence of a word")
    sp.add_argument("--word", type=_word, required=True)
    sp.add_argument("--out")

    ep = sub.add_parser("enum", help="exhaustively enumerate tile coverings")
    ep.add_argument("--word", type=_word, required=True)
    ep.add_argument("--level", type=int, default=None)
    ep.add_argument("--nonoriented", action="store_true")
    ep.add_argument("--fixed-start", type=_point, default=None)
    ep.add_argument("--fixed-end", type=_point, default=None)
    ep.add_argument("--forbidden-endpoint", type=_point, default=None)
    ep.add_argument("--out")

    cp = sub.add_parser("cover", help="write one canonical covering as a window file")
    cp.add_argument("--word", type=_word, required=True)
    cp.add_argument("--level", type=int, default=None)
    cp.add_argument("--index", type=int, default=0)
    cp.add_argument("--nonoriented", action="store_true")
    cp.add_argument("--out")

    pp = sub.add_parser("plane", help="assemble an anchored window covering")
    pp.add_argument("--anchor", choices=KINDS, required=True)
    pp.add_argument("--word", type=_word, required=True)
    pp.add_argument("--depth", type=int, required=True)
    pp.add_argument("--lookahead", type=int, default=2)
    pp.add_argument("--choice", type=int, default=0)
    pp.add_argument("--out")

    vp = sub.add_parser("verify", help="run a verification suite")
    vp.add_argument("property", choices=sorted(VERIFY_SUBS))

    rp = sub.add_parser("render", help="emit a deterministic SVG figure")
    rp.add_argument(
        "--target",
        choices=("tiling", "covering", "window", "census"),
        default="window",
    )
    rp.add_argument("--in", dest="infile", help="window JSON file (target=window)")
    rp.add_argument("--word", type=_word, help="inline input (other targets)")
    rp.add_argument("--level", type=int, default=None)
    rp.add_argument("--index", type=int, default=0)
    rp.add_argument("--depth", type=int, default=2, help="census window depth")
    rp.add_argument("--scale", type=float, default=24.0)
    rp.add_argument("--no-regions", action="store_true")
    rp.add_argument("--show-orientation", action="store_true")
    rp.add_argument("--out")
    return p


def _cmd_seq(args) -> int:
    _emit(serialize(args.word, build_seq(args.word)), args.out)
    return 0


def _cmd_enum(args) -> int:
    level = args.level if args.level is not None else len(args.word)
    if not 0 <= level <= len(args.word):
        print(f"level {level} out of range for word {args.word!r}", file=sys.stderr)
        return 2
    amb = Ambient(ZERO, args.word)
    constraint = CoveringConstraint(
        fixed_start=args.fixed_start,
        fixed_end=args.fixed_end,
        forbidden_endpoint=args.forbidden_endpoint,
    )
    covs = enumerate_coverings(
        amb, TileRef(ZERO, level), oriented=not args.nonoriented,
        constraint=constraint,
    )
    doc = {
        "word": args.word,
        "level": level,
        "oriented": not args.nonoriented,
        "count": len(covs),
        "curves": [
            {
                "segments": [
                    {"start": [s.start.a, s.start.b], "dir": s.dir}
                    for s in c.curve.segments
                ]
            }
            for c in covs
        ],
    }
    _emit(json.dumps(doc, indent=2) + "\n", args.out)
    return 0


def _canonical(word: str, level: int | None, index: int, nonoriented: bool):
    lvl = level if level is not None else len(word)
    amb = Ambient(ZERO, word)
    covs = canonical_coverings(amb, TileRef(ZERO, lvl), oriented=not nonoriented)
    if not 0 <= index < len(covs):
        raise IndexError(f"index {index} out of range: {len(covs)} coverings")
    return amb, covs[index]


def _cmd_cover(args) -> int:
    try:
        amb, cov = _canonical(args.word, args.level, args.index, args.nonoriented)
    except (IndexError, ValueError) as e:
        print(str(e), file=sys.stderr)
        return 2
    _emit(window_to_json(covering_window(amb, cov)), args.out)
    return 0


def _cmd_plane(args) -> int:
    levels = args.depth + args.lookahead
    if levels > len(args.word):
        print(
            f"depth+lookahead {levels} exceeds word length {len(args.word)}",
            file=sys.stderr,
        )
        return 2
    x = make_x(args.anchor, args.word, levels)
    w = window_assemble(x, args.depth, args.lookahead, args.choice)
    _emit(window_to_json(w), args.out)
    return 0


def _cmd_verify(args) -> int:
    ok, lines = VERIFY_SUBS[args.property]()
    for line in lines:
        print(line)
    print(f"{args.property}: {'VERIFIED' if ok else 'FAILED'}")
    return 0 if ok else 1


def _cmd_render(args) -> int:
    spec = RenderSpec(
        target=args.target,
        scale=args.scale,
        show_regions=not args.no_regions,
        show_orientation=args.show_orientation,
    )
    if args.target == "window":
        if not args.infile:
            print("render --target window requires --in FILE", file=sys.stderr)
            return 2
        with open(args.infile, encoding="utf-8") as f:
            w = window_from_json(f.read())
        svg = render_svg(spec, w)
    elif args.target in ("tiling", "covering"):
        if not args.word:
            print(f"render --target {args.target} requires --word", file=sys.stderr)
            return 2
        lvl = args.level if args.level is not None else len(args.word)
        amb = Ambient(ZERO, args.word)
        if args.target == "tiling":
            svg = render_svg(spec, TileRef(ZERO, lvl), amb)
        else:
            try:
                amb, cov = _canonical(args.word, args.level, args.index, False)
            except (IndexError, ValueError) as e:
                print(str(e), file=sys.stderr)
                return 2
            svg = render_svg(spec, cov, amb)
    else:  # census
        if not args.word:
            print("render --target census requires --word", file=sys.stderr)
            return 2
        if args.depth > len(args.word):
            print("census depth exceeds word length", file=sys.stderr)
            return 2
        x = make_x("constant", args.word, args.depth)
        w = window_assemble(x, args.depth, 0)
        svg = render_svg(spec, config_census(w))
    _emit(svg, args.out)
    return 0


_COMMANDS = {
    "seq": _cmd_seq,
    "enum": _cmd_enum,
    "cover": _cmd_cover,
    "plane": _cmd_plane,
    "verify": _cmd_verify,
    "render": _cmd_render,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code in (0, None) else 2
    try:
        return _COMMANDS[args.command](args)
    except NodeBudgetExceeded as e:
        print(f"search aborted: {e}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as e:
        print(str(e), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
