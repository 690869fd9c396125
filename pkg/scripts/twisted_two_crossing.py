"""Bar placements on the two-crossing virtual knot and their polynomials.

Prints every distinct normalized arrow polynomial obtained by placing at
most two bars on distinct arcs of O1+ O2+ U1+ U2+, together with the
colorability verdict and the three necessary conditions for colorability.
With ``--published`` it also compares against a list of reference values,
both literally and with every A^4 read as A^-4.
"""

from __future__ import annotations

import argparse

from twistpoly.arrowsum import colorability_criteria
from twistpoly.cli import enumerate_bars
from twistpoly.coloring import is_checkerboard_colorable
from twistpoly.diagram import parse
from twistpoly.polyring import parse_poly

PUBLISHED = {
    "two bars, colorable": "A^-4 - A^-2 + A^-6",
    "one bar on the first arc": "-A^-10 M + A^-6 M + A^-4 M",
    "one bar on the second arc": "-A^-10 K1 M - A^-6 K1 M + A^-4 M + 2 A^-6 M",
    "two adjacent bars": "-A^-10 M^2 - A^-6 M^2 + A^-4 + A^-6 K1 + A^-6",
    "no bars": "A^-4 + A^-6 K1 - A^-2 K1",
}
# the same values with the factor A^4 inside the brackets read as A^-4
REREAD = {
    "two bars, colorable": "A^-4 - A^-10 + A^-6",
    "no bars": "A^-4 + A^-6 K1 - A^-10 K1",
}


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--code", default="O1+ O2+ U1+ U2+")
    ap.add_argument("--max-bars", type=int, default=2)
    ap.add_argument("--published", action="store_true")
    args = ap.parse_args()
    groups = enumerate_bars(parse(args.code), args.max_bars)
    values = {}
    for g in groups:
        d = parse(g["placements"][0])
        crit = colorability_criteria(d)
        colorable = bool(is_checkerboard_colorable(d))
        values[parse_poly(g["polynomial"])] = g["placements"][0]
        print(f"{g['polynomial']}")
        print(f"    e.g. {g['placements'][0]}  ({len(g['placements'])} placements)"
              f"  colorable={colorable}  criteria={'pass' if crit.passes_all else 'fail'}")
    if args.published:
        print()
        for name, text in PUBLISHED.items():
            hit = values.get(parse_poly(text))
            line = f"{name}: literal {'found at ' + hit if hit else 'not found'}"
            if name in REREAD:
                hit2 = values.get(parse_poly(REREAD[name]))
                line += f"; with A^4 -> A^-4 {'found at ' + hit2 if hit2 else 'not found'}"
            print(line)


if __name__ == "__main__":
    main()
