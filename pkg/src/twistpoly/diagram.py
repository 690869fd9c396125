"""Oriented Gauss codes with bars.

A twisted link diagram is stored as a tuple of components, each a cyclic
tuple of tokens.  A token is either a :class:`Pass` through a classical
crossing or the :data:`BAR` marker.  Virtual crossings are not recorded:
detour moves and T2 never change the code.

Text grammar (one diagram per file)::

    O1+ O2+ b U1+ U2+ b    # comment
    U3- O3-                # newline or ';' starts a new component
    ()                     # explicit crossing-free component
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence, Union


class CodeSyntaxError(ValueError):
    """Malformed token in a diagram text."""

    def __init__(self, message: str, line: int, column: int, token: str = ""):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
        self.token = token


class ValidationError(ValueError):
    """Token sequence does not describe a diagram."""


@dataclass(frozen=True)
class Pass:
    crossing: int
    over: bool
    sign: int

    def __str__(self) -> str:
        return f"{'O' if self.over else 'U'}{self.crossing}{'+' if self.sign > 0 else '-'}"

    @property
    def role(self) -> str:
        return "O" if self.over else "U"

    def swapped(self, sign: int | None = None) -> "Pass":
        return Pass(self.crossing, not self.over, self.sign if sign is None else sign)


class Bar:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "BAR"

    def __str__(self) -> str:
        return "b"

    def __reduce__(self):
        return (Bar, ())


BAR = Bar()
Token = Union[Pass, Bar]


def is_bar(tok) -> bool:
    return tok is BAR


class Arc(NamedTuple):
    """Edge between two consecutive passes of one component.

    ``start``/``end`` are token positions of the bounding passes (``None``
    for the single arc of a crossing-free component); ``bars`` holds the
    positions of the bar tokens strictly between them.
    """

    component: int
    start: int | None
    end: int | None
    bars: tuple[int, ...]

    @property
    def degenerate(self) -> bool:
        return self.start is None

    @property
    def bar_count(self) -> int:
        return len(self.bars)


@dataclass(frozen=True)
class TwistedGaussCode:
    components: tuple[tuple[Token, ...], ...]

    def __post_init__(self):
        comps = tuple(tuple(c) for c in self.components)
        if not comps:
            comps = ((),)
        object.__setattr__(self, "components", comps)
        validate(comps)

    # -- basic queries -------------------------------------------------
    def passes(self) -> Iterable[tuple[int, int, Pass]]:
        for ci, comp in enumerate(self.components):
            for pos, tok in enumerate(comp):
                if tok is not BAR:
                    yield ci, pos, tok

    def crossings(self) -> list[int]:
        return sorted({p.crossing for _, _, p in self.passes()})

    @property
    def n_crossings(self) -> int:
        return sum(1 for _, _, p in self.passes() if p.over)

    def signs(self) -> dict[int, int]:
        return {p.crossing: p.sign for _, _, p in self.passes()}

    def locate(self, crossing: int) -> dict[bool, tuple[int, int]]:
        """``{over: (component, position)}`` for both passes of a crossing."""
        out = {}
        for ci, pos, p in self.passes():
            if p.crossing == crossing:
                out[p.over] = (ci, pos)
        if len(out) != 2:
            raise KeyError(crossing)
        return out

    def max_id(self) -> int:
        return max(self.crossings(), default=0)

    def is_classical_free(self) -> bool:
        return self.n_crossings == 0

    def __str__(self) -> str:
        return serialize(self)


def validate(components: Sequence[Sequence[Token]]) -> None:
    seen: dict[int, list[Pass]] = {}
    for comp in components:
        for tok in comp:
            if tok is BAR:
                continue
            if not isinstance(tok, Pass):
                raise ValidationError(f"unknown token {tok!r}")
            if tok.crossing < 1:
                raise ValidationError(f"crossing id must be positive, got {tok.crossing}")
            if tok.sign not in (1, -1):
                raise ValidationError(f"crossing {tok.crossing}: sign must be +1 or -1")
            seen.setdefault(tok.crossing, []).append(tok)
    for cid, toks in seen.items():
        if len(toks) != 2:
            raise ValidationError(f"crossing {cid} appears {len(toks)} times (expected 2)")
        if toks[0].over == toks[1].over:
            raise ValidationError(f"crossing {cid} has two {toks[0].role} passes")
        if toks[0].sign != toks[1].sign:
            raise ValidationError(f"crossing {cid} has mismatched signs")


# ---------------------------------------------------------------------------
# parsing

_PASS = re.compile(r"^([OU])(\d+)([+-])$")


def _tokenize_component(chunk: str, line: int, col0: int) -> list[Token]:
    toks: list[Token] = []
    for hit in re.finditer(r"\S+", chunk):
        word = hit.group(0)
        col = col0 + hit.start()
        if word == "b":
            toks.append(BAR)
        elif word == "()":
            continue
        else:
            m = _PASS.match(word)
            if not m:
                raise CodeSyntaxError(f"malformed token {word!r}", line, col, word)
            toks.append(Pass(int(m.group(2)), m.group(1) == "O", 1 if m.group(3) == "+" else -1))
    return toks


def parse(text: str) -> TwistedGaussCode:
    comps: list[list[Token]] = []
    for lineno, raw in enumerate(text.splitlines() or [""], start=1):
        line = raw.split("#", 1)[0]
        col = 1
        for chunk in line.split(";"):
            stripped = chunk.strip()
            if stripped:
                toks = _tokenize_component(chunk, lineno, col)
                if toks or "()" in stripped:
                    comps.append(toks)
            col += len(chunk) + 1
    return TwistedGaussCode(tuple(tuple(c) for c in comps))


def serialize(d: TwistedGaussCode) -> str:
    return "; ".join(" ".join(str(t) for t in comp) if comp else "()" for comp in d.components)


def code(text: str) -> TwistedGaussCode:
    """Shorthand for :func:`parse`."""
    return parse(text)


# ---------------------------------------------------------------------------
# derived data

def writhe(d: TwistedGaussCode) -> int:
    return sum(p.sign for _, _, p in d.passes() if p.over)


def bar_count(d: TwistedGaussCode) -> int:
    return sum(1 for comp in d.components for t in comp if t is BAR)


def arcs(d: TwistedGaussCode) -> list[Arc]:
    out: list[Arc] = []
    for ci, comp in enumerate(d.components):
        pass_pos = [i for i, t in enumerate(comp) if t is not BAR]
        if not pass_pos:
            out.append(Arc(ci, None, None, tuple(range(len(comp)))))
            continue
        n = len(comp)
        for k, start in enumerate(pass_pos):
            end = pass_pos[(k + 1) % len(pass_pos)]
            bars = []
            j = (start + 1) % n
            while j != end:
                bars.append(j)
                j = (j + 1) % n
            out.append(Arc(ci, start, end, tuple(bars)))
    return out


def renumber(d: TwistedGaussCode) -> TwistedGaussCode:
    """Relabel crossings 1..n in order of first appearance."""
    mapping: dict[int, int] = {}
    for _, _, p in d.passes():
        mapping.setdefault(p.crossing, len(mapping) + 1)
    return relabel(d, mapping)


def relabel(d: TwistedGaussCode, mapping: dict[int, int]) -> TwistedGaussCode:
    return TwistedGaussCode(tuple(
        tuple(t if t is BAR else Pass(mapping[t.crossing], t.over, t.sign) for t in comp)
        for comp in d.components
    ))


def mirror(d: TwistedGaussCode) -> TwistedGaussCode:
    """Switch every crossing (over <-> under, sign negated)."""
    return TwistedGaussCode(tuple(
        tuple(t if t is BAR else Pass(t.crossing, not t.over, -t.sign) for t in comp)
        for comp in d.components
    ))


def _min_rotation(seq: tuple) -> tuple:
    if not seq:
        return seq
    return min(seq[i:] + seq[:i] for i in range(len(seq)))


def canonical(d: TwistedGaussCode) -> tuple:
    """Key equal for codes that differ by rotation, renumbering or component order.

    Renumbering is resolved by trying every rotation/order combination, so
    this is only meant for small diagrams (tests, deduplication).
    """
    best = None
    comps = d.components
    for order in itertools.permutations(range(len(comps))):
        rots = [range(max(len(comps[i]), 1)) for i in order]
        for shifts in itertools.product(*rots):
            seq = [comps[i][s:] + comps[i][:s] for i, s in zip(order, shifts)]
            mapping: dict[int, int] = {}
            key = []
            for comp in seq:
                row = []
                for t in comp:
                    if t is BAR:
                        row.append((0, 0, 0))
                    else:
                        idx = mapping.setdefault(t.crossing, len(mapping) + 1)
                        row.append((idx, 1 if t.over else 2, t.sign))
                key.append(tuple(row))
            key = tuple(key)
            if best is None or key < best:
                best = key
    return best


def cyclic_key(d: TwistedGaussCode) -> tuple:
    """Cheap equality key: each component up to rotation, ids kept."""
    def enc(t):
        return (0, 0, 0) if t is BAR else (t.crossing, 1 if t.over else 2, t.sign)

    return tuple(_min_rotation(tuple(enc(t) for t in comp)) for comp in d.components)
