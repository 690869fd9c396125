"""Reidemeister and twisted moves acting on Gauss codes with bars.

Virtual moves, detours and T2 do not change a Gauss code, so they are not
represented.  Each rewrite is described by a :class:`MoveSite`; positions
are token indices inside a component, and "adjacent" always means
cyclically consecutive tokens of one component (a bar in between blocks
every classical move).

R3 legality.  Call the strand that is over at both of its crossings T,
the one that is under at both B and the remaining one M, and label the
crossings a = T/M, b = T/B, c = M/B.  Record, for each strand, which of
its two crossings it meets first: ``tf`` (T meets a first), ``mf`` (M
meets a first) and ``bf`` (B meets b first).  Enumerating straight-line
triple points on both sides of the move gives exactly the 16 oriented
patterns with

    sign(a)*sign(b) = +1  iff  mf == bf
    sign(b)*sign(c) = +1  iff  tf == mf

and the move reverses the order on all three strands with signs kept.

T3 exchanges over and under at a crossing and moves the bar sitting in
front of each pass to behind it.  Turning the crossing over inside the
twisted band keeps its sign.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterator

from .diagram import BAR, Pass, TwistedGaussCode, cyclic_key

KINDS = ("R1_delete", "R1_insert", "R2_delete", "R2_insert", "R3",
         "T1_delete", "T1_insert", "T3")
_KIND_ORDER = {k: i for i, k in enumerate(KINDS)}


class InvalidSite(ValueError):
    pass


@dataclass(frozen=True)
class MoveSite:
    """One rewrite on one code.

    ``where`` holds ``(component, position)`` pairs and ``params`` the
    discrete choices of the move (signs, orders, new crossing ids).
    """

    kind: str
    where: tuple[tuple[int, int], ...]
    params: tuple = field(default=())

    def sort_key(self):
        return (_KIND_ORDER[self.kind], self.where, self.params)

    def __str__(self) -> str:
        loc = " ".join(f"{c}:{p}" for c, p in self.where)
        extra = " ".join(str(x) for x in self.params)
        return f"{self.kind}[{loc}]{(' ' + extra) if extra else ''}"

    @property
    def crossing_delta(self) -> int:
        return {"R1_insert": 1, "R1_delete": -1, "R2_insert": 2, "R2_delete": -2}.get(self.kind, 0)


# ---------------------------------------------------------------------------
# helpers

def _nxt(comp, i):
    return (i + 1) % len(comp)


def _adjacent_pairs(d: TwistedGaussCode) -> Iterator[tuple[int, int, Pass, Pass]]:
    """(component, i, tok[i], tok[i+1]) for consecutive passes; each pair once."""
    for ci, comp in enumerate(d.components):
        n = len(comp)
        if n < 2:
            continue
        for i in range(n if n > 2 else 1):
            a, b = comp[i], comp[_nxt(comp, i)]
            if a is not BAR and b is not BAR:
                yield ci, i, a, b


def _gaps(d: TwistedGaussCode) -> list[tuple[int, int]]:
    return [(ci, g) for ci, comp in enumerate(d.components) for g in range(max(len(comp), 1))]


def _rebuild(d: TwistedGaussCode, comps) -> TwistedGaussCode:
    return TwistedGaussCode(tuple(tuple(c) for c in comps))


def _insert(comps: list[list], edits: list[tuple[int, int, list]]) -> None:
    # apply insertions right-to-left so earlier indices stay put
    for ci, g, toks in sorted(edits, key=lambda e: (e[0], e[1]), reverse=True):
        comps[ci][g:g] = toks


def _delete(comps: list[list], where: list[tuple[int, int]]) -> None:
    for ci, p in sorted(where, reverse=True):
        del comps[ci][p]


def _tok(d, ci, p):
    try:
        return d.components[ci][p]
    except IndexError:
        raise InvalidSite(f"no token at {ci}:{p}") from None


# ---------------------------------------------------------------------------
# R1

def _r1_delete_sites(d):
    seen = set()
    for ci, i, a, b in _adjacent_pairs(d):
        if a.crossing == b.crossing and a.crossing not in seen:
            seen.add(a.crossing)
            yield MoveSite("R1_delete", ((ci, i),))


def _r1_insert_sites(d, new_id):
    for ci, g in _gaps(d):
        for over_first in (True, False):
            for sign in (1, -1):
                yield MoveSite("R1_insert", ((ci, g),), (over_first, sign, new_id))


def _apply_r1(d, s):
    comps = [list(c) for c in d.components]
    (ci, p), = s.where
    if s.kind == "R1_delete":
        comp = d.components[ci]
        a, b = _tok(d, ci, p), comp[_nxt(comp, p)] if comp else None
        if a is BAR or b is None or b is BAR or a.crossing != b.crossing or len(comp) < 2:
            raise InvalidSite(f"no kink at {s}")
        _delete(comps, [(ci, p), (ci, _nxt(comp, p))])
        return _rebuild(d, comps)
    over_first, sign, cid = s.params
    if cid in d.crossings() or not 0 <= p <= len(d.components[ci]):
        raise InvalidSite(str(s))
    o, u = Pass(cid, True, sign), Pass(cid, False, sign)
    _insert(comps, [(ci, p, [o, u] if over_first else [u, o])])
    return _rebuild(d, comps)


# ---------------------------------------------------------------------------
# R2

def _r2_delete_sites(d):
    over_pairs, under_pairs = {}, {}
    for ci, i, a, b in _adjacent_pairs(d):
        if a.crossing == b.crossing or a.sign == b.sign:
            continue
        key = frozenset((a.crossing, b.crossing))
        if a.over and b.over:
            over_pairs.setdefault(key, (ci, i))
        elif not a.over and not b.over:
            under_pairs.setdefault(key, (ci, i))
    for key in sorted(over_pairs, key=sorted):
        if key in under_pairs:
            yield MoveSite("R2_delete", (over_pairs[key], under_pairs[key]))


def _r2_insert_sites(d, new_id, second_id=None):
    ids = (new_id, new_id + 1 if second_id is None else second_id)
    gaps = _gaps(d)
    for go in gaps:
        for gu in gaps:
            for same_dir in (True, False):
                for sign in (1, -1):
                    if go == gu:
                        for o_first in (True, False):
                            yield MoveSite("R2_insert", (go, gu), (same_dir, sign) + ids + (o_first,))
                    else:
                        yield MoveSite("R2_insert", (go, gu), (same_dir, sign) + ids + (True,))


def _apply_r2(d, s):
    comps = [list(c) for c in d.components]
    if s.kind == "R2_delete":
        where = []
        roles = []
        for ci, p in s.where:
            comp = d.components[ci]
            x, y = _tok(d, ci, p), comp[_nxt(comp, p)]
            if x is BAR or y is BAR or x.over != y.over or x.sign == y.sign:
                raise InvalidSite(str(s))
            roles.append((x.over, frozenset((x.crossing, y.crossing))))
            where += [(ci, p), (ci, _nxt(comp, p))]
        if [r[0] for r in roles] != [True, False] or roles[0][1] != roles[1][1]:
            raise InvalidSite(str(s))
        _delete(comps, where)
        return _rebuild(d, comps)
    (co, go), (cu, gu) = s.where
    same_dir, sign, a, b, o_first = s.params
    if a == b or a in d.crossings() or b in d.crossings():
        raise InvalidSite(str(s))
    over = [Pass(a, True, sign), Pass(b, True, -sign)]
    under = [Pass(a, False, sign), Pass(b, False, -sign)]
    if not same_dir:
        under.reverse()
    if (co, go) == (cu, gu):
        _insert(comps, [(co, go, over + under if o_first else under + over)])
    else:
        _insert(comps, [(co, go, over), (cu, gu, under)])
    return _rebuild(d, comps)


# ---------------------------------------------------------------------------
# R3

def r3_pattern_ok(tf: bool, mf: bool, bf: bool, sa: int, sb: int, sc: int) -> bool:
    """Whether an oriented triple-point pattern is realizable (see module doc)."""
    return ((sa * sb > 0) == (mf == bf)) and ((sb * sc > 0) == (tf == mf))


def _r3_sites(d):
    pos = {}
    for ci, p, t in d.passes():
        pos[(t.crossing, t.over)] = (ci, p)
    pairs = {}
    for ci, i, x, y in _adjacent_pairs(d):
        pairs.setdefault((x.crossing, x.over, y.crossing, y.over), []).append((ci, i))
    signs = d.signs()

    def pair_at(x, y):
        """Location of the adjacent pair of passes x, y (either order) and whether x comes first."""
        out = []
        for first, key in ((True, (x[0], x[1], y[0], y[1])), (False, (y[0], y[1], x[0], x[1]))):
            for loc in pairs.get(key, ()):
                out.append((loc, first))
        return out

    found = set()
    for ci, i, x, y in _adjacent_pairs(d):
        if x.over == y.over:
            continue
        u, o = (x, y) if not x.over else (y, x)
        a, c = u.crossing, o.crossing
        # T holds O_a next to some O_b
        ca, pa = pos[(a, True)]
        comp = d.components[ca]
        nbrs = {comp[(pa - 1) % len(comp)], comp[_nxt(comp, pa)]}
        for nb in nbrs:
            if nb is BAR or not nb.over or nb.crossing in (a, c):
                continue
            b = nb.crossing
            for tloc, tf in pair_at((a, True), (b, True)):
                for bloc, bf in pair_at((b, False), (c, False)):
                    for mloc, mf in pair_at((a, False), (c, True)):
                        if len({tloc, mloc, bloc}) < 3:
                            continue
                        if r3_pattern_ok(tf, mf, bf, signs[a], signs[b], signs[c]):
                            found.add((tloc, mloc, bloc))
    for where in sorted(found):
        yield MoveSite("R3", where)


def _apply_r3(d, s):
    if len(s.where) != 3 or s not in set(_r3_sites(d)):
        raise InvalidSite(str(s))
    comps = [list(c) for c in d.components]
    for ci, p in s.where:
        q = _nxt(comps[ci], p)
        comps[ci][p], comps[ci][q] = comps[ci][q], comps[ci][p]
    return _rebuild(d, comps)


# ---------------------------------------------------------------------------
# T1 / T3

def _t1_delete_sites(d):
    for ci, comp in enumerate(d.components):
        n = len(comp)
        if n < 2:
            continue
        for i in range(n if n > 2 else 1):
            if comp[i] is BAR and comp[_nxt(comp, i)] is BAR:
                yield MoveSite("T1_delete", ((ci, i),))


def _t1_insert_sites(d):
    for g in _gaps(d):
        yield MoveSite("T1_insert", (g,))


def _apply_t1(d, s):
    comps = [list(c) for c in d.components]
    (ci, p), = s.where
    if s.kind == "T1_delete":
        comp = d.components[ci]
        if len(comp) < 2 or _tok(d, ci, p) is not BAR or comp[_nxt(comp, p)] is not BAR:
            raise InvalidSite(str(s))
        _delete(comps, [(ci, p), (ci, _nxt(comp, p))])
    else:
        if not 0 <= p <= len(d.components[ci]):
            raise InvalidSite(str(s))
        _insert(comps, [(ci, p, [BAR, BAR])])
    return _rebuild(d, comps)


def _t3_sites(d):
    for cid in d.crossings():
        loc = d.locate(cid)
        for bars_before in (True, False):
            ok = True
            for ci, p in loc.values():
                comp = d.components[ci]
                q = (p - 1) % len(comp) if bars_before else _nxt(comp, p)
                ok &= comp[q] is BAR
            if ok:
                yield MoveSite("T3", (loc[True], loc[False]), (bars_before,))


def t3_rewrite(d: TwistedGaussCode, s: MoveSite, negate_sign: bool = False) -> TwistedGaussCode:
    """Move bars across the crossing and exchange over/under.

    ``negate_sign=True`` is the variant that also flips the sign; it is
    kept only so the two conventions can be compared.
    """
    (bars_before,) = s.params
    (co, po), (cu, pu) = s.where
    drop = set()
    for ci, p in s.where:
        comp = d.components[ci]
        q = (p - 1) % len(comp) if bars_before else _nxt(comp, p)
        if comp[q] is not BAR:
            raise InvalidSite(str(s))
        drop.add((ci, q))
    comps = []
    for ci, comp in enumerate(d.components):
        row = []
        for p, t in enumerate(comp):
            if (ci, p) in drop:
                continue
            if (ci, p) in ((co, po), (cu, pu)):
                new = t.swapped(-t.sign if negate_sign else t.sign)
                row += [new, BAR] if bars_before else [BAR, new]
            else:
                row.append(t)
        comps.append(row)
    return _rebuild(d, comps)


# ---------------------------------------------------------------------------
# public API

def applicable_moves(d: TwistedGaussCode, kinds=None) -> list[MoveSite]:
    """Every rewrite that applies to ``d``, in a deterministic order."""
    want = set(KINDS if kinds is None else kinds)
    new_id = d.max_id() + 1
    sites: list[MoveSite] = []
    gens = {
        "R1_delete": lambda: _r1_delete_sites(d),
        "R1_insert": lambda: _r1_insert_sites(d, new_id),
        "R2_delete": lambda: _r2_delete_sites(d),
        "R2_insert": lambda: _r2_insert_sites(d, new_id),
        "R3": lambda: _r3_sites(d),
        "T1_delete": lambda: _t1_delete_sites(d),
        "T1_insert": lambda: _t1_insert_sites(d),
        "T3": lambda: _t3_sites(d),
    }
    for kind in KINDS:
        if kind in want:
            sites.extend(gens[kind]())
    sites.sort(key=MoveSite.sort_key)
    return sites


def apply_move(d: TwistedGaussCode, s: MoveSite) -> TwistedGaussCode:
    try:
        if s.kind.startswith("R1"):
            return _apply_r1(d, s)
        if s.kind.startswith("R2"):
            return _apply_r2(d, s)
        if s.kind == "R3":
            return _apply_r3(d, s)
        if s.kind.startswith("T1"):
            return _apply_t1(d, s)
        if s.kind == "T3":
            if s not in set(_t3_sites(d)):
                raise InvalidSite(str(s))
            return t3_rewrite(d, s)
    except (IndexError, KeyError, ValueError) as exc:
        if isinstance(exc, InvalidSite):
            raise
        raise InvalidSite(f"{s}: {exc}") from exc
    raise InvalidSite(f"unknown move kind {s.kind!r}")


def _insert_sites_with_ids(d, kind, ids):
    if kind == "R1_insert":
        return _r1_insert_sites(d, ids[0])
    if kind == "R2_insert":
        return _r2_insert_sites(d, ids[0], ids[1])
    return _t1_insert_sites(d)


def inverse_site(d: TwistedGaussCode, s: MoveSite) -> MoveSite:
    """A site on ``apply_move(d, s)`` that undoes ``s``.

    Undoing a deletion restores ``d`` up to rotating its components (a
    pair straddling the end of a cyclic component comes back at one end).
    """
    after = apply_move(d, s)
    if s.kind == "R1_insert":
        return MoveSite("R1_delete", s.where)
    if s.kind == "T1_insert":
        return MoveSite("T1_delete", s.where)
    if s.kind == "R3":
        return s
    if s.kind == "R2_insert":
        target = d
        cands = _r2_delete_sites(after)
    elif s.kind == "T3":
        target = d
        cands = _t3_sites(after)
    else:
        target = d
        gone = sorted(set(d.crossings()) - set(after.crossings()))
        cands = _insert_sites_with_ids(after, s.kind.replace("delete", "insert"), gone)
    key = cyclic_key(target)
    for cand in cands:
        if cyclic_key(apply_move(after, cand)) == key:
            return cand
    raise InvalidSite(f"no inverse for {s}")


def t1_reduce(d: TwistedGaussCode) -> TwistedGaussCode:
    """Cancel bar pairs until each arc carries at most one bar."""
    comps = []
    for ci, comp in enumerate(d.components):
        out = []
        bars = 0
        for t in comp:
            if t is BAR:
                bars += 1
                continue
            if bars % 2:
                out.append(BAR)
            bars = 0
            out.append(t)
        # bars trailing the last pass share an arc with bars before the first
        lead = 0
        for t in out:
            if t is BAR:
                lead += 1
            else:
                break
        if any(t is not BAR for t in comp):
            total = (bars + lead) % 2
            out = out[lead:]
            if total:
                out.append(BAR)
        else:
            out = [BAR] * (bars % 2)
        comps.append(out)
    return _rebuild(d, comps)


_COUNTED = ("R1_insert", "R2_insert", "T1_insert")


def _pick_insertion(d, kind, idx, new_id):
    gaps = _gaps(d)
    if kind == "T1_insert":
        return MoveSite(kind, (gaps[idx],))
    if kind == "R1_insert":
        g, r = divmod(idx, 4)
        return MoveSite(kind, (gaps[g],), (r < 2, (1, -1)[r % 2], new_id))
    G = len(gaps)
    a, rem = divmod(idx, 4 * G + 4)
    for b in range(G):
        size = 8 if a == b else 4
        if rem < size:
            break
        rem -= size
    ids = (new_id, new_id + 1)
    if a == b:
        return MoveSite(kind, (gaps[a], gaps[b]), (rem < 4, (1, -1)[(rem // 2) % 2]) + ids + (rem % 2 == 0,))
    return MoveSite(kind, (gaps[a], gaps[b]), (rem < 2, (1, -1)[rem % 2]) + ids + (True,))


def _count_insertions(d, kind) -> int:
    G = len(_gaps(d))
    return {"T1_insert": G, "R1_insert": 4 * G, "R2_insert": 4 * G * G + 4 * G}[kind]


def random_site(d: TwistedGaussCode, rng: random.Random, max_crossings: int | None = None,
                kinds=None) -> MoveSite | None:
    """Uniform choice among applicable sites, without listing every insertion."""
    want = KINDS if kinds is None else kinds
    listed = applicable_moves(d, [k for k in want if k not in _COUNTED])
    blocks: list = [("list", listed, len(listed))] if listed else []
    for kind in _COUNTED:
        if kind not in want:
            continue
        delta = MoveSite(kind, ()).crossing_delta
        if max_crossings is not None and d.n_crossings + delta > max_crossings:
            continue
        blocks.append(("count", kind, _count_insertions(d, kind)))
    total = sum(b[2] for b in blocks)
    if not total:
        return None
    idx = rng.randrange(total)
    for tag, payload, size in blocks:
        if idx < size:
            if tag == "list":
                return payload[idx]
            return _pick_insertion(d, payload, idx, d.max_id() + 1)
        idx -= size
    raise AssertionError("unreachable")


def random_equivalent(d: TwistedGaussCode, steps: int, seed: int,
                      max_crossings: int = 8, kinds=None) -> TwistedGaussCode:
    """Apply ``steps`` uniformly chosen moves; insertions past the cap are never chosen."""
    if steps < 0:
        raise ValueError("steps must be >= 0")
    for _, d in walk(d, steps, seed, max_crossings, kinds):
        pass
    return d


def walk(d: TwistedGaussCode, steps: int, seed: int, max_crossings: int = 8, kinds=None):
    """Like :func:`random_equivalent` but yields ``(site, code)`` after each step."""
    rng = random.Random(seed)
    for _ in range(steps):
        s = random_site(d, rng, max_crossings, kinds)
        if s is None:
            return
        d = apply_move(d, s)
        yield s, d
