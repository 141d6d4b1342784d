"""Write SVG figures for a handful of interesting cevian points.

Covers a generic point, the centroid, a Steiner-ellipse point (P' infinite),
an infinite P, and the Gergonne point of the 6-9-13 triangle drawn in its
true shape.
"""

import argparse
from pathlib import Path

from halfturn.centers import SideLengths, center
from halfturn.constructions import build_configuration
from halfturn.embed import DEFAULT_TRIANGLE, CartesianTriangle, render_svg
from halfturn.kernel import BaryPoint

CASES = {
    "generic_1_2_3": (BaryPoint(1, 2, 3), DEFAULT_TRIANGLE),
    "centroid": (BaryPoint(1, 1, 1), DEFAULT_TRIANGLE),
    "steiner_2_2_-1": (BaryPoint(2, 2, -1), DEFAULT_TRIANGLE),
    "infinite_1_1_-2": (BaryPoint(1, 1, -2), DEFAULT_TRIANGLE),
    "gergonne_6_9_13": (center("gergonne", SideLengths(6, 9, 13)),
                        CartesianTriangle.from_side_lengths(6, 9, 13)),
}


def main():
    ap = argparse.ArgumentParser(description="write example SVG figures")
    ap.add_argument("--out", default="figures")
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for name, (p, tri) in CASES.items():
        path = out / f"{name}.svg"
        path.write_text(render_svg(build_configuration(p), tri))
        print(f"wrote {path}  (P={p})")


if __name__ == "__main__":
    main()
