"""Arrow-polynomial state sum for twisted link diagrams.

Conventions
-----------
Ports of a crossing are numbered ``4*k + 2*over + out`` so that the four
half-edges are UI=0, UO=1, OI=2, OO=3 (in/out relative to the strand
orientation).  The two smoothings pair them as

* oriented:    OI-UO and UI-OO (orientation is preserved, no cusps)
* disoriented: OI-UI and OO-UO (two cusps)

For a positive crossing the oriented smoothing carries weight A, for a
negative crossing the disoriented one does; a positive kink then expands
to ``A*d + A^-1 = -A^3``.

Cusp sides.  Draw a positive crossing with the over strand running SW->NE
and the under strand SE->NW.  The disoriented smoothing leaves a cap
SW-SE whose acute angle opens to the south and a cup NW-NE whose acute
angle opens to the north.  Walking through either cusp from the over
port to the under port puts the acute side on the right; walking from
under to over puts it on the left.  Mirroring the picture gives the
negative crossing with both answers swapped, so::

    side = R  iff  (sign > 0) == (arrived through the over port)

Left/right relative to the direction of travel survives virtual
crossings; a bar flips it, which is what the ``b`` token in a circle word
records.
"""

from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator, Mapping, NamedTuple

from .diagram import BAR, TwistedGaussCode, arcs, writhe
from .polyring import (
    ArrowPolynomial,
    _d_power_coeffs,
    k_degree_set,
    make_kvec,
    normalize_by_writhe,
)


class Smoothing(Enum):
    ORIENTED = "oriented"
    DISORIENTED = "disoriented"


class TooManyCrossings(ValueError):
    pass


class IncompleteState(ValueError):
    pass


class OddCuspCount(ValueError):
    pass


CircleWord = tuple  # of 'L' / 'R' / 'b'

_FLIP = {"L": "R", "R": "L"}


class ReducedCircle(NamedTuple):
    kind: str  # "plain", "K" or "bar"
    n: int = 0

    def __str__(self) -> str:
        if self.kind == "K":
            return f"K{self.n}"
        return "M" if self.kind == "bar" else "1"


PLAIN = ReducedCircle("plain")
BAR_LOOP = ReducedCircle("bar")


def K(n: int) -> ReducedCircle:
    return ReducedCircle("K", n) if n else PLAIN


def default_crossing_limit() -> int:
    return int(os.environ.get("TWISTPOLY_MAX_CROSSINGS", "24"))


# ---------------------------------------------------------------------------
# circle words

def _reduce(word) -> int:
    """0 for a plain circle, n for K_n, -1 for a loop with one bar."""
    flip = False
    stack: list[str] = []
    for t in word:
        if t == "b":
            flip = not flip
            continue
        if flip:
            t = _FLIP[t]
        if stack and stack[-1] == t:
            stack.pop()
        else:
            stack.append(t)
    if len(stack) % 2:
        raise OddCuspCount(f"odd number of cusps in {''.join(word)!r}")
    if flip:
        return -1
    # a linearly reduced word of even length already alternates cyclically
    return len(stack) // 2


def reduce_word(word) -> ReducedCircle:
    """Reduce a cyclic cusp/bar word to its normal form.

    Bars are pushed to the right, flipping every cusp they cross, and
    cancelled in pairs; adjacent cusps with the same side then cancel.
    """
    r = _reduce(tuple(word))
    return BAR_LOOP if r < 0 else K(r)


def parse_word(text: str) -> CircleWord:
    """``"L R b"`` or ``"LRb"`` -> ``('L', 'R', 'b')``."""
    out = tuple(ch for ch in text if ch in "LRb")
    if len(out) != len(text.replace(" ", "")):
        raise ValueError(f"circle words use only L, R, b: {text!r}")
    return out


# ---------------------------------------------------------------------------
# strand tracing

class _Skeleton:
    """Port/arc incidence of a code, prepared once for many states."""

    def __init__(self, d: TwistedGaussCode):
        self.code = d
        self.crossings = d.crossings()
        index = {c: k for k, c in enumerate(self.crossings)}
        self.sign = [0] * len(self.crossings)
        self.arc_start: list[int] = []
        self.arc_end: list[int] = []
        self.arc_bars: list[int] = []
        self.free_loops: list[int] = []
        port_arc = [0] * (4 * len(self.crossings))
        for arc in arcs(d):
            if arc.degenerate:
                self.free_loops.append(arc.bar_count)
                continue
            comp = d.components[arc.component]
            s, e = comp[arc.start], comp[arc.end]
            ks, ke = index[s.crossing], index[e.crossing]
            self.sign[ks] = s.sign
            sp = 4 * ks + 2 * s.over + 1
            ep = 4 * ke + 2 * e.over
            port_arc[sp] = port_arc[ep] = len(self.arc_start)
            self.arc_start.append(sp)
            self.arc_end.append(ep)
            self.arc_bars.append(arc.bar_count)
        self.port_arc = port_arc

    def trace(self, disoriented: list[bool]) -> list[CircleWord]:
        n_arcs = len(self.arc_start)
        seen = [False] * n_arcs
        words: list[CircleWord] = []
        port_arc, sign = self.port_arc, self.sign
        for e0 in range(n_arcs):
            if seen[e0]:
                continue
            word: list[str] = []
            e, fwd = e0, True
            while True:
                seen[e] = True
                if self.arc_bars[e]:
                    word.extend("b" * self.arc_bars[e])
                p = self.arc_end[e] if fwd else self.arc_start[e]
                k, loc = divmod(p, 4)
                if disoriented[k]:
                    q = 4 * k + (loc ^ 2)
                    over = loc >= 2
                    word.append("R" if (sign[k] > 0) == over else "L")
                else:
                    q = 4 * k + 3 - loc
                e, fwd = port_arc[q], bool(q & 1)
                if e == e0 and fwd:
                    break
            words.append(tuple(word))
        for bars in self.free_loops:
            words.append(("b",) * bars)
        return words


def resolve(d: TwistedGaussCode, state: Mapping[int, Smoothing]) -> list[CircleWord]:
    """Circle words of the state that smooths crossing ``c`` as ``state[c]``."""
    sk = _Skeleton(d)
    missing = [c for c in sk.crossings if c not in state]
    if missing:
        raise IncompleteState(f"no smoothing given for crossings {missing}")
    return sk.trace([Smoothing(state[c]) is Smoothing.DISORIENTED for c in sk.crossings])


@dataclass(frozen=True)
class StateEvaluation:
    alpha: int
    beta: int
    circle_count: int
    contents: tuple[ReducedCircle, ...]

    @property
    def m_power(self) -> int:
        return sum(1 for c in self.contents if c.kind == "bar")

    @property
    def k_factors(self) -> tuple[int, ...]:
        return tuple(sorted(c.n for c in self.contents if c.kind == "K"))


def _weights(sk: _Skeleton, disoriented: list[bool]) -> tuple[int, int]:
    alpha = sum(1 for k, dis in enumerate(disoriented) if dis != (sk.sign[k] > 0))
    return alpha, len(disoriented) - alpha


def evaluate_state(d: TwistedGaussCode, state: Mapping[int, Smoothing]) -> StateEvaluation:
    sk = _Skeleton(d)
    dis = [Smoothing(state[c]) is Smoothing.DISORIENTED for c in sk.crossings]
    alpha, beta = _weights(sk, dis)
    words = sk.trace(dis)
    return StateEvaluation(alpha, beta, len(words), tuple(reduce_word(w) for w in words))


def states(d: TwistedGaussCode) -> Iterator[dict[int, Smoothing]]:
    """All states; bit k of the counter is crossing ``crossings()[k]``, 1 = disoriented."""
    cs = d.crossings()
    for mask in range(1 << len(cs)):
        yield {c: Smoothing.DISORIENTED if mask >> k & 1 else Smoothing.ORIENTED
               for k, c in enumerate(cs)}


def _check_size(d: TwistedGaussCode, limit: int | None) -> None:
    limit = default_crossing_limit() if limit is None else limit
    if d.n_crossings > limit:
        raise TooManyCrossings(f"{d.n_crossings} crossings exceeds the limit of {limit}")


def state_counts(d: TwistedGaussCode, limit: int | None = None) -> Counter:
    """Tally ``(alpha - beta, |S|, K indices, #bar loops)`` over all states."""
    _check_size(d, limit)
    sk = _Skeleton(d)
    n = len(sk.crossings)
    tally: Counter = Counter()
    for mask in range(1 << n):
        dis = [bool(mask >> k & 1) for k in range(n)]
        alpha, beta = _weights(sk, dis)
        ks = []
        bars = 0
        words = sk.trace(dis)
        for w in words:
            r = _reduce(w)
            if r > 0:
                ks.append(r)
            elif r < 0:
                bars += 1
        tally[(alpha - beta, len(words), tuple(sorted(ks)), bars)] += 1
    return tally


def bracket(d: TwistedGaussCode, limit: int | None = None) -> ArrowPolynomial:
    """Unnormalized arrow polynomial: sum of A^(alpha-beta) d^(|S|-1) <S>."""
    acc: dict = {}
    for (a, circles, ks, bars), count in state_counts(d, limit).items():
        kv = make_kvec(Counter(ks))
        for e, c in _d_power_coeffs(circles - 1):
            key = (a + e, kv, bars)
            acc[key] = acc.get(key, 0) + count * c
    return ArrowPolynomial(acc)


def normalized(d: TwistedGaussCode, limit: int | None = None) -> ArrowPolynomial:
    return normalize_by_writhe(bracket(d, limit), writhe(d))


def as_set(d: TwistedGaussCode, limit: int | None = None) -> set[int]:
    return k_degree_set(bracket(d, limit))


def m_degree_lower_bound(d: TwistedGaussCode, limit: int | None = None) -> int:
    """Largest power of M in the normalized polynomial; never exceeds the bar count."""
    return normalized(d, limit).max_m_degree()


# ---------------------------------------------------------------------------
# colorability criteria

@dataclass(frozen=True)
class CriteriaReport:
    no_m: bool
    as_even: bool
    k_balance: bool
    as_values: tuple[int, ...] = ()
    offending: tuple[str, ...] = field(default=())

    @property
    def passes_all(self) -> bool:
        return self.no_m and self.as_even and self.k_balance

    @property
    def verdict(self) -> str:
        return "inconclusive" if self.passes_all else "necessarily-not-colorable"

    def to_json_obj(self) -> dict:
        return {
            "no_m": self.no_m,
            "as_even": self.as_even,
            "k_balance": self.k_balance,
            "as_set": list(self.as_values),
            "verdict": self.verdict,
        }


def criteria_for(p: ArrowPolynomial) -> CriteriaReport:
    """Evaluate the three necessary conditions for checkerboard colorability."""
    no_m = not p.contains_m()
    degrees = k_degree_set(p)
    as_even = all(v % 2 == 0 for v in degrees)
    offending = []
    for mono in p.terms:
        if not mono.k_vec:
            continue
        total = mono.k_degree
        top = max(i for i, _ in mono.k_vec)
        if total % 2 or top > total - top:
            offending.append(str(ArrowPolynomial({mono.key: mono.coeff})))
    return CriteriaReport(no_m, as_even, not offending, tuple(sorted(degrees)), tuple(offending))


def colorability_criteria(d: TwistedGaussCode, limit: int | None = None) -> CriteriaReport:
    return criteria_for(normalized(d, limit))


# ---------------------------------------------------------------------------
# exhaustive confluence search for the circle-word rewrite system

def _canon(word: tuple) -> tuple:
    if not word:
        return word
    return min(word[i:] + word[:i] for i in range(len(word)))


def _all_words(length: int) -> set[tuple]:
    import itertools

    out = set()
    for w in itertools.product("LRb", repeat=length):
        if sum(1 for t in w if t != "b") % 2 == 0:
            out.add(_canon(w))
    return out


@dataclass
class ConfluenceResult:
    words_checked: int
    classes: int
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def exhaustive_confluence(max_len: int = 10) -> ConfluenceResult:
    """Explore every rewrite sequence of every even-cusp word up to ``max_len``.

    Bar/cusp commutation (``b c <-> c' b``) is length preserving and
    reversible, so words are grouped into its equivalence classes with a
    union-find.  Cancellations (``c c -> .``, ``b b -> .``) go to shorter
    classes, processed first.  A class with no cancellation available is
    terminal.  Confluence means every class reaches exactly one terminal
    value, and that value agrees with :func:`reduce_word`.
    """
    result_of: dict[tuple, frozenset] = {}
    failures = []
    checked = 0
    n_classes = 0
    for length in range(max_len + 1):
        words = sorted(_all_words(length))
        parent = {w: w for w in words}

        def find(w):
            while parent[w] != w:
                parent[w] = parent[parent[w]]
                w = parent[w]
            return w

        for w in words:
            for i in range(length):
                j = (i + 1) % length
                if i == j:
                    continue
                a, b = w[i], w[j]
                if a == "b" and b != "b":
                    v = list(w)
                    v[i], v[j] = _FLIP[b], "b"
                    ra, rb = find(w), find(_canon(tuple(v)))
                    if ra != rb:
                        parent[ra] = rb
        members: dict[tuple, list] = {}
        for w in words:
            members.setdefault(find(w), []).append(w)
        n_classes += len(members)
        for root, group in members.items():
            reached: set = set()
            cancellable = False
            for w in group:
                for i in range(length):
                    j = (i + 1) % length
                    if i == j:
                        continue
                    if w[i] == w[j]:
                        cancellable = True
                        rest = tuple(t for k, t in enumerate(w) if k not in (i, j))
                        reached |= result_of[_canon(rest)]
            if not cancellable:
                w = group[0]
                if "b" not in w:
                    reached = {K(length // 2)}
                elif w == ("b",):
                    reached = {BAR_LOOP}
                else:
                    reached = {("stuck", w)}
            frozen = frozenset(reached)
            for w in group:
                result_of[w] = frozen
                checked += 1
                fast = reduce_word(w)
                if len(frozen) != 1 or fast not in frozen:
                    failures.append((w, sorted(map(str, frozen)), str(fast)))
    return ConfluenceResult(checked, n_classes, failures)
