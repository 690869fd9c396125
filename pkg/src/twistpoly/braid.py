"""Twisted braid words, their defining relations, and closure to Gauss codes.

Letters are written ``s1`` (sigma_1), ``S1`` (its inverse), ``v1`` (virtual
crossing) and ``b1`` (bar on the strand at position 1).  Strands run
downwards.  For ``s_i`` the strand entering at position i+1 crosses over
the one entering at position i, which makes the crossing positive; for
``S_i`` the strand at position i goes over and the crossing is negative.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Iterator

from .diagram import BAR, Pass, TwistedGaussCode


class IndexOutOfRange(ValueError):
    pass


class NoMatch(ValueError):
    pass


class BraidSyntaxError(ValueError):
    pass


Letter = tuple[str, int]  # ("s" | "S" | "v" | "b", index)

_LETTER = re.compile(r"^([sSvb])(\d+)$")


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[Letter, ...]

    def __post_init__(self):
        if self.strands < 1:
            raise IndexOutOfRange("a braid needs at least one strand")
        for kind, i in self.letters:
            top = self.strands if kind == "b" else self.strands - 1
            if not 1 <= i <= top:
                raise IndexOutOfRange(f"{kind}{i} is out of range for {self.strands} strands")

    def __str__(self) -> str:
        return " ".join(f"{k}{i}" for k, i in self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def with_letters(self, letters) -> "BraidWord":
        return BraidWord(self.strands, tuple(letters))


def parse_braid(text: str, strands: int | None = None) -> BraidWord:
    letters = []
    for tok in text.replace(",", " ").split():
        m = _LETTER.match(tok)
        if not m:
            raise BraidSyntaxError(f"bad braid letter {tok!r}")
        letters.append((m.group(1), int(m.group(2))))
    if strands is None:
        need = [i + 1 if k != "b" else i for k, i in letters]
        strands = max(need, default=1)
    return BraidWord(strands, tuple(letters))


def closure(w: BraidWord) -> TwistedGaussCode:
    n = w.strands
    trace: list[list] = [[] for _ in range(n)]  # per starting strand
    at = list(range(n))  # at[pos] = starting strand now at pos
    cid = 0
    for kind, i in w.letters:
        p = i - 1
        if kind == "b":
            trace[at[p]].append(BAR)
            continue
        if kind in "sS":
            cid += 1
            sign = 1 if kind == "s" else -1
            over_pos = p + 1 if kind == "s" else p
            under_pos = p if kind == "s" else p + 1
            trace[at[over_pos]].append(Pass(cid, True, sign))
            trace[at[under_pos]].append(Pass(cid, False, sign))
        at[p], at[p + 1] = at[p + 1], at[p]
    end_pos = {s: pos for pos, s in enumerate(at)}
    seen = [False] * n
    comps = []
    for s0 in range(n):
        if seen[s0]:
            continue
        comp = []
        s = s0
        while not seen[s]:
            seen[s] = True
            comp.extend(trace[s])
            s = end_pos[s]  # bottom position k feeds the strand starting at k
        comps.append(tuple(comp))
    return TwistedGaussCode(tuple(comps))


# ---------------------------------------------------------------------------
# relations

@dataclass(frozen=True)
class Relation:
    rule: str
    i: int
    j: int
    lhs: tuple[Letter, ...]
    rhs: tuple[Letter, ...]

    def __str__(self) -> str:
        def side(x):
            return " ".join(f"{k}{n}" for k, n in x) or "1"
        return f"{self.rule}: {side(self.lhs)} = {side(self.rhs)}"


def _rules(i: int, j: int) -> dict[str, tuple[tuple, tuple]]:
    s, S, v, b = (lambda k: ("s", k)), (lambda k: ("S", k)), (lambda k: ("v", k)), (lambda k: ("b", k))
    return {
        "s_inverse": ((s(i), S(i)), ()),
        "inverse_s": ((S(i), s(i)), ()),
        "s_braid": ((s(i), s(i + 1), S(i)), (S(i + 1), s(i), s(i + 1))),
        "s_far": ((s(i), s(j)), (s(j), s(i))),
        "bb": ((b(i), b(i)), ()),
        "b_commute": ((b(i), b(i + 1)), (b(i + 1), b(i))),
        "bv": ((b(i), v(i)), (v(i), b(i + 1))),
        "twist": ((b(i), b(i + 1), s(i), b(i), b(i + 1)), (v(i), s(i), v(i))),
        "vv": ((v(i), v(i)), ()),
        "v_far": ((v(i), v(j)), (v(j), v(i))),
        "v_braid": ((v(i), v(i + 1), v(i)), (v(i + 1), v(i), v(i + 1))),
        "sv_far": ((s(i), v(j)), (v(j), s(i))),
        "mixed": ((v(i), s(i + 1), v(i)), (v(i + 1), s(i), v(i + 1))),
    }


RULES = tuple(_rules(1, 3))


def relation_instances(strands: int) -> list[Relation]:
    """Every relation whose letters all fit on ``strands`` strands."""
    out = []
    n = strands
    for rule in RULES:
        far = rule.endswith("_far")
        for i in range(1, n + 1):
            for j in (range(1, n + 1) if far else (0,)):
                if far and abs(i - j) < 2:
                    continue
                lhs, rhs = _rules(i, j)[rule]
                try:
                    BraidWord(n, lhs + rhs)
                except IndexOutOfRange:
                    continue
                out.append(Relation(rule, i, j if far else 0, lhs, rhs))
    return out


def _matches(letters, pos, side) -> bool:
    return tuple(letters[pos:pos + len(side)]) == side


def applicable_relations(w: BraidWord, max_letters: int | None = None) -> Iterator[tuple[Relation, int, bool]]:
    """``(relation, position, inverse)`` triples; ``inverse`` rewrites rhs -> lhs."""
    L = w.letters
    for rel in relation_instances(w.strands):
        for inverse, (src, dst) in ((False, (rel.lhs, rel.rhs)), (True, (rel.rhs, rel.lhs))):
            grow = len(dst) - len(src)
            if max_letters is not None and len(L) + grow > max_letters:
                continue
            if not src:
                for pos in range(len(L) + 1):
                    yield rel, pos, inverse
                continue
            for pos in range(len(L) - len(src) + 1):
                if _matches(L, pos, src):
                    yield rel, pos, inverse


def apply_relation(w: BraidWord, rule, position: int, inverse: bool | None = None) -> BraidWord:
    """Rewrite one side of a relation into the other at ``position``.

    ``rule`` is a :class:`Relation` or a rule name; with a name the
    instance is inferred from the letters at ``position``.  When
    ``inverse`` is None the direction is whichever side matches (lhs
    first).  Empty sides can only be inserted with an explicit instance.
    """
    if isinstance(rule, Relation):
        cands = [rule]
    else:
        if rule not in RULES:
            raise NoMatch(f"unknown rule {rule!r}")
        cands = [r for r in relation_instances(w.strands) if r.rule == rule]
    L = w.letters
    for rel in cands:
        for inv in ((False, True) if inverse is None else (inverse,)):
            src, dst = (rel.rhs, rel.lhs) if inv else (rel.lhs, rel.rhs)
            if not src and not isinstance(rule, Relation):
                continue
            if 0 <= position <= len(L) and _matches(L, position, src):
                return w.with_letters(L[:position] + dst + L[position + len(src):])
    raise NoMatch(f"{rule} does not match at position {position} of {str(w)!r}")


def random_relation_walk(w: BraidWord, steps: int, seed: int, max_letters: int | None = None) -> BraidWord:
    """Apply ``steps`` random relation rewrites in either direction."""
    if steps < 0:
        raise ValueError("steps must be >= 0")
    rng = random.Random(seed)
    cap = len(w) + 8 if max_letters is None else max_letters
    for _ in range(steps):
        options = list(applicable_relations(w, cap))
        if not options:
            break
        rel, pos, inv = rng.choice(options)
        w = apply_relation(w, rel, pos, inv)
    return w


def random_word(strands: int, length: int, rng: random.Random, alphabet: str = "sSvb") -> BraidWord:
    letters = []
    for _ in range(length):
        kind = rng.choice(alphabet)
        top = strands if kind == "b" else strands - 1
        if top < 1:
            kind, top = "b", strands
        letters.append((kind, rng.randint(1, top)))
    return BraidWord(strands, tuple(letters))
