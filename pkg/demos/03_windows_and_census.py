"""Narrative demo: anchored plane windows, the rhombus property and the
vertex-configuration census.

Assembles a 3-region window around a W vertex, checks the orientation
dichotomy on a 2-region side window, runs the configuration census, and
renders the figures to demos/out/.
"""

import pathlib

from gosper.plane import (
    curve_regions,
    enumerate_orientations,
    make_x,
    window_assemble,
)
from gosper.render import RenderSpec, render_census, render_window
from gosper.verify import config_census

OUT = pathlib.Path(__file__).parent / "out"
OUT.mkdir(exist_ok=True)


def main() -> None:
    x = make_x("vertex", "+-+", 3)
    w = window_assemble(x, 1, 2)
    print(f"vertex window: {len(w.cluster)} regions, {len(w.curves)} curves")
    for i, c in enumerate(w.curves):
        print(f"  curve {i}: {len(c.segments)} segments,"
              f" regions {sorted(curve_regions(w, c))}")
    (OUT / "window_vertex.svg").write_text(
        render_window(w, RenderSpec(target="window", show_orientation=True))
    )

    x = make_x("side", "+++", 3)
    w = window_assemble(x, 1, 2)
    masks = enumerate_orientations(w)
    print(f"side window: {len(masks)} of 4 orientation assignments satisfy"
          f" the rhombus property: {masks}")

    x = make_x("constant", "++", 2)
    w = window_assemble(x, 2, 0)
    census = config_census(w)
    print(f"census: {census['orbit_count']} orbits ="
          f" {census['free_orbit_count']} free +"
          f" {census['symmetric_orbit_count']} rotation-symmetric;"
          f" per anchor class {census['per_anchor_class']}")
    (OUT / "census.svg").write_text(
        render_census(census, RenderSpec(target="census", show_orientation=True))
    )
    print(f"wrote {OUT / 'window_vertex.svg'} and {OUT / 'census.svg'}")


if __name__ == "__main__":
    main()
