"""Narrative demo: plane-filling curve coverings of a tile.

Enumerates the coverings of small tiles, shows that their turn
sequences come from the substitution rewriting, shrinks and lifts a
covering, and renders one covering per chirality to demos/out/.
"""

import pathlib

from gosper.lattice import ZERO
from gosper.tiling import Ambient, TileRef
from gosper.sequences import bar_seq, build_seq
from gosper.curves import (
    canonical_coverings,
    lift_covering,
    shrink_covering,
    turns_of,
)
from gosper.enumeration import enumerate_coverings
from gosper.render import RenderSpec, render_covering

OUT = pathlib.Path(__file__).parent / "out"
OUT.mkdir(exist_ok=True)


def main() -> None:
    for word in ("++", "+-"):
        amb = Ambient(ZERO, word)
        t = TileRef(ZERO, 2)
        covs = enumerate_coverings(amb, t)
        seq = build_seq(word)
        print(f"word {word}: {len(covs)} oriented coverings of the level-2 tile")
        print(f"  every turn sequence is the built sequence or its bar:",
              {turns_of(c.curve) for c in covs} == {seq, bar_seq(seq)})
        cov = canonical_coverings(amb, t)[0]
        coarse_amb, sc = shrink_covering(amb, cov)
        print(f"  shrink: {len(cov.curve.segments)} segments ->"
              f" {len(sc.curve.segments)}, lift inverts:",
              lift_covering(amb, sc).curve == cov.curve)
        svg = render_covering(
            amb, cov, RenderSpec(target="covering", show_orientation=True)
        )
        path = OUT / f"covering_{word.replace('+', 'p').replace('-', 'm')}.svg"
        path.write_text(svg)
        print(f"  wrote {path}")


if __name__ == "__main__":
    main()
