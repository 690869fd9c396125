"""Checkerboard colorings, cut points and framings.

A checkerboard coloring is encoded as an alternate orientation: every
crossing carries one bit saying whether its over-strand ends both point
in (and under-strand ends both out) or the reverse.  An arc leaves its
start crossing through an out-port and enters its end crossing through an
in-port.  Walking along the arc the alternate orientation must be
constant, except that each bar or cut point reverses it, which gives

    x_start xor x_end = 1 xor [start is under] xor [end is under] xor (bars mod 2)

for every arc, and ``0 = bars mod 2`` for a crossing-free component.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field

from .arrowsum import TooManyCrossings
from .diagram import BAR, TwistedGaussCode, arcs, bar_count
from .moves import t1_reduce

MAX_EXHAUSTIVE = 20


class HasBars(ValueError):
    pass


class UnknownCrossing(KeyError):
    pass


class TooFewCutPoints(ValueError):
    pass


class SearchBudgetExceeded(RuntimeError):
    pass


class NotAFraming(ValueError):
    pass


@dataclass(frozen=True)
class Relation:
    arc: int
    left: int | None  # crossing index, None for a crossing-free component
    right: int | None
    rhs: int


@dataclass(frozen=True)
class ColorConstraintSystem:
    crossings: tuple[int, ...]
    relations: tuple[Relation, ...]

    def violations(self, bits, cuts=None) -> int:
        bad = 0
        for rel in self.relations:
            extra = cuts[rel.arc] % 2 if cuts is not None else 0
            lhs = 0 if rel.left is None else bits[rel.left] ^ bits[rel.right]
            bad += lhs != (rel.rhs ^ extra)
        return bad

    def violated_arcs(self, bits) -> list[int]:
        return [rel.arc for rel in self.relations
                if (0 if rel.left is None else bits[rel.left] ^ bits[rel.right]) != rel.rhs]

    def groups(self) -> list[list[int]]:
        """Connected components of the crossing graph (indices into ``crossings``)."""
        parent = list(range(len(self.crossings)))

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for rel in self.relations:
            if rel.left is not None:
                parent[find(rel.left)] = find(rel.right)
        out: dict[int, list[int]] = {}
        for i in range(len(self.crossings)):
            out.setdefault(find(i), []).append(i)
        return sorted(out.values())


def constraint_system(d: TwistedGaussCode) -> ColorConstraintSystem:
    cs = d.crossings()
    index = {c: i for i, c in enumerate(cs)}
    rels = []
    for k, arc in enumerate(arcs(d)):
        if arc.degenerate:
            rels.append(Relation(k, None, None, arc.bar_count % 2))
            continue
        comp = d.components[arc.component]
        s, e = comp[arc.start], comp[arc.end]
        rhs = 1 ^ (not s.over) ^ (not e.over) ^ (arc.bar_count % 2)
        rels.append(Relation(k, index[s.crossing], index[e.crossing], int(rhs)))
    return ColorConstraintSystem(tuple(cs), tuple(rels))


def _solve(system: ColorConstraintSystem):
    """Parity union-find; returns a satisfying bit list or None."""
    n = len(system.crossings)
    parent = list(range(n))
    parity = [0] * n

    def find(i):
        if parent[i] == i:
            return i, 0
        root, p = find(parent[i])
        parent[i] = root
        parity[i] ^= p
        return root, parity[i]

    for rel in system.relations:
        if rel.left is None:
            if rel.rhs:
                return None
            continue
        (ra, pa), (rb, pb) = find(rel.left), find(rel.right)
        if ra == rb:
            if pa ^ pb != rel.rhs:
                return None
        else:
            parent[ra] = rb
            parity[ra] = pa ^ pb ^ rel.rhs
    return [find(i)[1] for i in range(n)]


@dataclass(frozen=True)
class ColorabilityResult:
    colorable: bool
    colorings: tuple[dict, ...] = ()

    def __bool__(self) -> bool:
        return self.colorable


def is_checkerboard_colorable(d: TwistedGaussCode) -> ColorabilityResult:
    system = constraint_system(d)
    bits = _solve(system)
    if bits is None:
        return ColorabilityResult(False)
    first = {c: bool(b) for c, b in zip(system.crossings, bits)}
    second = {c: not b for c, b in first.items()}
    return ColorabilityResult(True, (first, second))


# ---------------------------------------------------------------------------
# framings

@dataclass(frozen=True)
class Framing:
    """Cut-point counts per arc (in ``arcs(d)`` order) plus one bit per crossing."""

    code: TwistedGaussCode
    cut_counts: tuple[int, ...]
    coloring: tuple[int, ...]

    @property
    def system(self) -> ColorConstraintSystem:
        return constraint_system(self.code)

    @property
    def total(self) -> int:
        return sum(self.cut_counts)

    def is_valid(self) -> bool:
        return (len(self.cut_counts) == len(self.system.relations)
                and all(c >= 0 for c in self.cut_counts)
                and self.system.violations(self.coloring, self.cut_counts) == 0)

    def is_plain(self) -> bool:
        return self.is_valid() and all(c <= 1 for c in self.cut_counts)

    def coloring_map(self) -> dict[int, bool]:
        return {c: bool(b) for c, b in zip(self.code.crossings(), self.coloring)}

    def to_json_obj(self) -> dict:
        return {
            "cut_counts": list(self.cut_counts),
            "coloring": {str(c): int(b) for c, b in zip(self.code.crossings(), self.coloring)},
        }


def plain_framing(d: TwistedGaussCode, bits) -> Framing:
    """The unique plain framing with the given crossing bits."""
    system = constraint_system(d)
    cuts = [0] * len(system.relations)
    for k in system.violated_arcs(bits):
        cuts[k] = 1
    return Framing(d, tuple(cuts), tuple(int(b) for b in bits))


@dataclass(frozen=True)
class CutPointReport:
    p_d: int
    witness: Framing

    def to_json_obj(self) -> dict:
        arc_list = arcs(self.witness.code)
        return {
            "p_d": self.p_d,
            "cut_arcs": [
                {"arc": k, "component": arc_list[k].component, "start": arc_list[k].start,
                 "end": arc_list[k].end}
                for k, c in enumerate(self.witness.cut_counts) if c
            ],
            "witness": self.witness.to_json_obj(),
        }


def min_cut_points(d: TwistedGaussCode) -> CutPointReport:
    """Fewest cut points over all framings, with an optimal framing."""
    if bar_count(d):
        raise HasBars("cut points are defined for bar-free diagrams")
    system = constraint_system(d)
    n = len(system.crossings)
    if n > MAX_EXHAUSTIVE:
        raise TooManyCrossings(f"{n} crossings exceeds the exhaustive limit of {MAX_EXHAUSTIVE}")
    bits = [0] * n
    for group in system.groups():
        rels = [r for r in system.relations
                if r.left is not None and r.left in group]
        best, best_bits = None, None
        # flipping a whole group changes nothing, so pin its first crossing
        for combo in itertools.product((0, 1), repeat=len(group) - 1):
            trial = dict(zip(group[1:], combo))
            trial[group[0]] = 0
            bad = sum((trial[r.left] ^ trial[r.right]) != r.rhs for r in rels)
            if best is None or bad < best:
                best, best_bits = bad, trial
        for i, b in best_bits.items():
            bits[i] = b
    witness = plain_framing(d, bits)
    return CutPointReport(witness.total, witness)


def _ends(d: TwistedGaussCode, cid: int) -> list[int]:
    out = []
    for k, arc in enumerate(arcs(d)):
        if arc.degenerate:
            continue
        comp = d.components[arc.component]
        out += [k] * ((comp[arc.start].crossing == cid) + (comp[arc.end].crossing == cid))
    return out


def cut_move_I(f: Framing, crossing_id: int) -> Framing:
    cs = f.code.crossings()
    if crossing_id not in cs:
        raise UnknownCrossing(crossing_id)
    cuts = list(f.cut_counts)
    for k in _ends(f.code, crossing_id):
        cuts[k] += 1
    bits = list(f.coloring)
    bits[cs.index(crossing_id)] ^= 1
    return Framing(f.code, tuple(cuts), tuple(bits))


def cut_move_II(f: Framing, arc: int, inverse: bool = False) -> Framing:
    cuts = list(f.cut_counts)
    if inverse:
        cuts[arc] += 2
    else:
        if cuts[arc] < 2:
            raise TooFewCutPoints(f"arc {arc} has {cuts[arc]} cut points")
        cuts[arc] -= 2
    return Framing(f.code, tuple(cuts), f.coloring)


@dataclass(frozen=True)
class ConnectivityReport:
    connected: bool
    plain_framings: int
    reached_plain: int
    nodes_explored: int
    bound: int
    max_distance: int  # BFS distance from the start to the farthest plain framing
    distances: tuple[int, ...] = field(default=(), repr=False)

    def to_json_obj(self) -> dict:
        return {
            "connected": self.connected,
            "plain_framings": self.plain_framings,
            "reached_plain": self.reached_plain,
            "nodes_explored": self.nodes_explored,
            "bound": self.bound,
            "max_distance": self.max_distance,
        }


def framing_space_connected(d: TwistedGaussCode, bound: int = 3,
                            budget: int = 1_000_000) -> ConnectivityReport:
    """BFS over framings with at most ``bound`` cut points per arc, using moves I and II."""
    if bar_count(d):
        raise HasBars("framings are defined for bar-free diagrams")
    cs = d.crossings()
    n_arcs = len(arcs(d))
    ends = [_ends(d, c) for c in cs]
    plain = {}
    for bits in itertools.product((0, 1), repeat=len(cs)):
        f = plain_framing(d, bits)
        plain[(f.cut_counts, f.coloring)] = f
    start = next(iter(plain))
    dist = {start: 0}
    queue = deque([start])
    while queue:
        node = queue.popleft()
        cuts, bits = node
        nbrs = []
        for i, e in enumerate(ends):
            new = list(cuts)
            for k in e:
                new[k] += 1
            if max(new, default=0) <= bound:
                b = list(bits)
                b[i] ^= 1
                nbrs.append((tuple(new), tuple(b)))
            # inverse of move I: toggle and remove one cut from each end
            new = list(cuts)
            for k in e:
                new[k] -= 1
            if min(new, default=0) >= 0:
                b = list(bits)
                b[i] ^= 1
                nbrs.append((tuple(new), tuple(b)))
        for k in range(n_arcs):
            if cuts[k] >= 2:
                nbrs.append((cuts[:k] + (cuts[k] - 2,) + cuts[k + 1:], bits))
            if cuts[k] + 2 <= bound:
                nbrs.append((cuts[:k] + (cuts[k] + 2,) + cuts[k + 1:], bits))
        for nb in nbrs:
            if nb not in dist:
                dist[nb] = dist[node] + 1
                if len(dist) > budget:
                    raise SearchBudgetExceeded(f"more than {budget} framings")
                queue.append(nb)
    reached = [dist[p] for p in plain if p in dist]
    return ConnectivityReport(
        connected=len(reached) == len(plain),
        plain_framings=len(plain),
        reached_plain=len(reached),
        nodes_explored=len(dist),
        bound=bound,
        max_distance=max(reached, default=0),
        distances=tuple(sorted(reached)),
    )


def replace_cutpoints_with_bars(d: TwistedGaussCode, f: Framing) -> TwistedGaussCode:
    """Put a bar on every arc carrying a cut point; the result is colorable."""
    if bar_count(d):
        raise NotAFraming("diagram already has bars")
    if f.code != d or not f.is_plain():
        raise NotAFraming("expected a plain framing of this diagram")
    comps = [list(c) for c in d.components]
    spots = sorted(((arc.component, arc.start) for arc, c in zip(arcs(d), f.cut_counts)
                    if c and not arc.degenerate), reverse=True)
    for ci, p in spots:
        comps[ci].insert(p + 1, BAR)
    return TwistedGaussCode(tuple(tuple(c) for c in comps))


@dataclass(frozen=True)
class BarParityReport:
    colorable: bool
    bars: int
    even: bool

    @property
    def holds(self) -> bool:
        return self.even or not self.colorable

    def to_json_obj(self) -> dict:
        return {"colorable": self.colorable, "bars": self.bars, "even": self.even, "holds": self.holds}


def bar_parity_check(d: TwistedGaussCode) -> BarParityReport:
    reduced = t1_reduce(d)
    bars = bar_count(reduced)
    return BarParityReport(bool(is_checkerboard_colorable(d)), bars, bars % 2 == 0)
