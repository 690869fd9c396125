"""Derive the oriented R3 patterns from straight-line triple points.

Three lines through (almost) one point are given random directions and
heights; sliding the lowest-index line across the triple point shows the
pattern on both sides of the move.  For every configuration we record

    tf: top strand meets the top/middle crossing first
    mf: middle strand meets the top/middle crossing first
    bf: bottom strand meets the top/bottom crossing first

and the three crossing signs, then print the distinct patterns and check
them against the predicate used by the move engine.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass

from twistpoly.moves import r3_pattern_ok


@dataclass(frozen=True)
class Config:
    trials: int = 3000
    seed: int = 1
    offset: float = 0.3
    min_angle_sine: float = 0.2


def cross(u, v):
    return u[0] * v[1] - u[1] * v[0]


def meet(p, u, q, v):
    det = -u[0] * v[1] + u[1] * v[0]
    rx, ry = q[0] - p[0], q[1] - p[1]
    return (-rx * v[1] + ry * v[0]) / det, (u[0] * ry - u[1] * rx) / det


def patterns(cfg: Config):
    rng = random.Random(cfg.seed)
    found, flips = set(), set()
    for _ in range(cfg.trials):
        us = [(math.cos(a), math.sin(a)) for a in (rng.uniform(0, 2 * math.pi) for _ in range(3))]
        if min(abs(cross(us[i], us[j])) for i, j in ((0, 1), (0, 2), (1, 2))) < cfg.min_angle_sine:
            continue
        normal = (-us[2][1], us[2][0])
        for heights in itertools.permutations(range(3)):
            top, mid, bot = sorted(range(3), key=lambda k: -heights[k])
            sides = []
            for eps in (cfg.offset, -cfg.offset):
                pts = [(0, 0), (0, 0), (normal[0] * eps, normal[1] * eps)]
                t = {}
                for i, j in ((0, 1), (0, 2), (1, 2)):
                    t[(i, j, i)], t[(i, j, j)] = meet(pts[i], us[i], pts[j], us[j])

                def par(x, y, line):
                    i, j = sorted((x, y))
                    return t[(i, j, line)]

                def sign(x, y):
                    over, under = (x, y) if heights[x] > heights[y] else (y, x)
                    return 1 if cross(us[over], us[under]) > 0 else -1

                sides.append((par(top, mid, top) < par(top, bot, top),
                              par(top, mid, mid) < par(mid, bot, mid),
                              par(top, bot, bot) < par(mid, bot, bot),
                              sign(top, mid), sign(top, bot), sign(mid, bot)))
            found.update(sides)
            before, after = sides
            flips.add(all(before[k] != after[k] for k in range(3)) and before[3:] == after[3:])
    return found, flips


def main() -> None:
    found, flips = patterns(Config())
    print(f"{len(found)} oriented patterns")
    print(" tf     mf     bf     sa sb sc")
    for p in sorted(found):
        print(" ".join(f"{str(x):6}" if isinstance(x, bool) else f"{x:+d}" for x in p))
    print("move reverses all three orders and keeps signs:", flips == {True})
    allowed = {p for p in itertools.product((True, False), repeat=3)
               for p in [p + s for s in itertools.product((1, -1), repeat=3)] if r3_pattern_ok(*p)}
    print("engine predicate agrees:", allowed == found)


if __name__ == "__main__":
    main()
