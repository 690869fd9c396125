"""Compare the two candidate sign rules for the twisted move T3.

The move exchanges over and under at a crossing whose two passes both sit
next to a bar.  One rule keeps the crossing sign, the other negates it.
This script applies both to every T3 site reachable from a few seeds and
counts how often each one preserves the normalized arrow polynomial.
"""

from __future__ import annotations

from collections import Counter

from twistpoly.arrowsum import normalized
from twistpoly.diagram import parse
from twistpoly.moves import applicable_moves, random_equivalent, t3_rewrite

SEEDS = ["b O1+ O2+ b U1+ U2+", "b O1- b U1-", "O1+ b U2- O3+ b U1+ O2- U3+", "b O1+ U2+ ; b U1+ O2+"]


def main(walks: int = 40) -> None:
    tally = Counter()
    for k in range(walks):
        d = random_equivalent(parse(SEEDS[k % len(SEEDS)]), 6, k, max_crossings=5)
        p = normalized(d)
        for s in applicable_moves(d, ["T3"]):
            tally["sites"] += 1
            tally["keep sign ok"] += normalized(t3_rewrite(d, s)) == p
            tally["negate sign ok"] += normalized(t3_rewrite(d, s, negate_sign=True)) == p
    for key in ("sites", "keep sign ok", "negate sign ok"):
        print(f"{key:>15}: {tally[key]}")


if __name__ == "__main__":
    main()
