"""Search small barred Gauss codes for given normalized arrow polynomials.

Usage: python scripts/search_targets.py [--crossings 2] [--bars 2]

Enumerates every Gauss code with the given number of crossings (one or two
components, all signs and pass orders), places up to ``--bars`` bars on
distinct arcs, and reports codes whose normalized polynomial equals one of
the targets, exactly or after A -> A^-1.
"""

from __future__ import annotations

import argparse
from twistpoly.arrowsum import normalized
from twistpoly.corpus import bar_placements, enumerate_codes
from twistpoly.diagram import serialize
from twistpoly.polyring import parse_poly

TARGETS = {
    # (-(A^4+1) K1^2 + A^4 + A^2 + 1) / A^2
    "K1": parse_poly("-A^2 K1^2 - A^-2 K1^2 + A^2 + 1 + A^-2"),
    # (-(A^8+2A^6+2A^4+2A^2+1) K1^2 + (A^8+2A^6+3A^4+2A^2+1)) / A^4
    "K2": parse_poly("-A^4 K1^2 - 2 A^2 K1^2 - 2 K1^2 - 2 A^-2 K1^2 - A^-4 K1^2"
                     " + A^4 + 2 A^2 + 3 + 2 A^-2 + A^-4"),
}


def search(crossings: int, bars: int):
    hits = []
    checked = 0
    for base in enumerate_codes(crossings):
        for _, d in bar_placements(base, bars):
            checked += 1
            p = normalized(d)
            for name, target in TARGETS.items():
                if p == target:
                    hits.append((name, "exact", serialize(d)))
                elif p.mirror() == target:
                    hits.append((name, "mirror", serialize(d)))
    return checked, hits


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--crossings", type=int, default=2)
    ap.add_argument("--bars", type=int, default=2)
    args = ap.parse_args()
    checked, hits = search(args.crossings, args.bars)
    print(f"checked {checked} barred codes with {args.crossings} crossings and <= {args.bars} bars")
    for name in TARGETS:
        mine = [h for h in hits if h[0] == name]
        print(f"{name}: {len(mine)} hits")
        for _, how, code in mine[:10]:
            print(f"   {how}: {code}")


if __name__ == "__main__":
    main()
