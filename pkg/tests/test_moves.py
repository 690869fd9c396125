import itertools
import math

import pytest
from hypothesis import given, settings, strategies as st

from strategies import codes
from twistpoly.arrowsum import bracket, normalized
from twistpoly.corpus import default_corpus
from twistpoly.diagram import BAR, Pass, TwistedGaussCode, cyclic_key, parse, serialize
from twistpoly.moves import (InvalidSite, MoveSite, applicable_moves, apply_move, inverse_site,
                             r3_pattern_ok, random_equivalent, t1_reduce, t3_rewrite)
from twistpoly.polyring import parse_poly


def kinds(d):
    return {s.kind for s in applicable_moves(d)}


def test_site_examples():
    assert "R1_delete" in kinds(parse("O1+ U1+"))
    assert "T1_delete" in kinds(parse("b b"))
    assert kinds(parse("")) == {"R1_insert", "R2_insert", "T1_insert"}


def test_apply_examples():
    (s,) = applicable_moves(parse("O1+ U1+"), ["R1_delete"])
    assert apply_move(parse("O1+ U1+"), s) == parse("")
    (s,) = applicable_moves(parse("b b"), ["T1_delete"])
    assert apply_move(parse("b b"), s) == parse("")


def test_t3_form():
    d = parse("b O1+ O2- b U1+ U2-")
    (s,) = [t for t in applicable_moves(d, ["T3"]) if t.params == (True,)]
    assert serialize(apply_move(d, s)) == "U1+ b O2- O1+ b U2-"


def test_t3_keeps_sign():
    # flipping the sign as well would break invariance
    d = parse("b O1+ O2+ b U1+ U2+")
    sites = applicable_moves(d, ["T3"])
    assert sites
    for s in sites:
        assert normalized(apply_move(d, s)) == normalized(d)
        assert normalized(t3_rewrite(d, s, negate_sign=True)) != normalized(d)


def test_invalid_site():
    with pytest.raises(InvalidSite):
        apply_move(parse("O1+ O2+ U1+ U2+"), MoveSite("R1_delete", ((0, 0),)))
    with pytest.raises(InvalidSite):
        apply_move(parse("b"), MoveSite("T1_delete", ((0, 0),)))


def test_sites_are_sorted_and_unique():
    d = default_corpus()["twisted_braid_c"]
    sites = applicable_moves(d)
    assert sites == sorted(sites, key=MoveSite.sort_key)
    assert len(set(sites)) == len(sites)


@pytest.mark.parametrize("name", sorted(default_corpus()))
def test_every_site_preserves_normalized(name):
    d = default_corpus()[name]
    p = normalized(d)
    for s in applicable_moves(d):
        assert normalized(apply_move(d, s)) == p, s


@pytest.mark.parametrize("name", ["virtual_trefoil", "twisted_2_4", "twisted_kink", "hopf"])
def test_bracket_changes_only_under_r1(name):
    d = default_corpus()[name]
    br = bracket(d)
    for s in applicable_moves(d):
        e = apply_move(d, s)
        if s.kind == "R1_insert":
            assert bracket(e) == br * parse_poly(f"-A^{3 * s.params[1]}")
        elif not s.kind.startswith("R1"):
            assert bracket(e) == br


@pytest.mark.parametrize("name", sorted(default_corpus()))
def test_inverse_sites(name):
    d = default_corpus()[name]
    for s in applicable_moves(d):
        e = apply_move(d, s)
        back = apply_move(e, inverse_site(d, s))
        if s.kind.endswith("insert"):
            assert back == d, s
        else:
            assert cyclic_key(back) == cyclic_key(d), s


def test_t1_reduce():
    assert t1_reduce(parse("b b b")) == parse("b")
    assert t1_reduce(parse("b O1+ b b U1+ b")) == parse("O1+ U1+")
    assert t1_reduce(parse("O1+ b b b U1+")) == parse("O1+ b U1+")


@given(codes(max_bars=6))
def test_t1_normal_form_keeps_arc_parity(d):
    from twistpoly.diagram import arcs

    r = t1_reduce(d)
    assert t1_reduce(r) == r
    assert [a.bar_count % 2 for a in arcs(d)] == [a.bar_count for a in arcs(r)]


def test_random_equivalent_basics():
    d = parse("O1+ O2+ U1+ U2+")
    assert random_equivalent(d, 0, 7) == d
    a = random_equivalent(d, 20, 42, max_crossings=8)
    assert a == random_equivalent(d, 20, 42, max_crossings=8)
    assert a.n_crossings <= 8
    assert normalized(a) == normalized(d)


def test_insert_then_delete():
    e = apply_move(parse(""), MoveSite("R1_insert", ((0, 0),), (True, 1, 1)))
    (s,) = applicable_moves(e, ["R1_delete"])
    assert apply_move(e, s) == parse("")


@given(codes(max_crossings=3, max_bars=2), st.integers(0, 10**6))
@settings(max_examples=40, deadline=None)
def test_walks_preserve_normalized(d, seed):
    assert normalized(random_equivalent(d, 8, seed, max_crossings=6)) == normalized(d)


# -- R3 legality against straight-line triple points -----------------------------

def _line_patterns():
    """Oriented R3 patterns seen by three straight lines near a triple point."""

    def cross(u, v):
        return u[0] * v[1] - u[1] * v[0]

    def meet(p, u, q, v):
        det = -u[0] * v[1] + u[1] * v[0]
        rx, ry = q[0] - p[0], q[1] - p[1]
        return (-rx * v[1] + ry * v[0]) / det, (u[0] * ry - u[1] * rx) / det

    found = set()
    angles = [2 * math.pi * k / 24 + 0.05 for k in range(24)]
    for a0, a1, a2 in itertools.permutations(angles, 3):
        us = [(math.cos(a), math.sin(a)) for a in (a0, a1, a2)]
        if min(abs(cross(us[i], us[j])) for i, j in ((0, 1), (0, 2), (1, 2))) < 0.2:
            continue
        normal = (-us[2][1], us[2][0])
        for heights in itertools.permutations(range(3)):
            top, mid, bot = sorted(range(3), key=lambda k: -heights[k])
            for eps in (0.3, -0.3):
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

                tf = par(top, mid, top) < par(top, bot, top)
                mf = par(top, mid, mid) < par(mid, bot, mid)
                bf = par(top, bot, bot) < par(mid, bot, bot)
                found.add((tf, mf, bf, sign(top, mid), sign(top, bot), sign(mid, bot)))
    return found


def test_r3_predicate_matches_geometry():
    geometric = _line_patterns()
    allowed = {p for p in itertools.product((True, False), (True, False), (True, False),
                                            (1, -1), (1, -1), (1, -1)) if r3_pattern_ok(*p)}
    assert geometric == allowed
    assert len(allowed) == 16


def _triangle(tf, mf, bf, sa, sb, sc, tails=((1, -1))):
    P = Pass
    T = [P(1, True, sa), P(2, True, sb)] if tf else [P(2, True, sb), P(1, True, sa)]
    M = [P(1, False, sa), P(3, True, sc)] if mf else [P(3, True, sc), P(1, False, sa)]
    B = [P(2, False, sb), P(3, False, sc)] if bf else [P(3, False, sc), P(2, False, sb)]
    # join the three strands through two more crossings so no swap is a rotation
    s4, s5 = tails
    comp = T + [P(4, True, s4)] + M + [P(5, False, s5)] + B + [P(4, False, s4), P(5, True, s5)]
    return TwistedGaussCode((tuple(comp),))


def test_r3_patterns_against_invariant():
    for pattern in itertools.product((True, False), (True, False), (True, False), (1, -1), (1, -1), (1, -1)):
        legal = r3_pattern_ok(*pattern)
        preserved = []
        for tails in ((1, -1), (-1, 1), (1, 1)):
            d = _triangle(*pattern, tails=tails)
            comp = list(d.components[0])
            for i in (0, 3, 6):
                comp[i], comp[i + 1] = comp[i + 1], comp[i]
            swapped = TwistedGaussCode((tuple(comp),))
            found = any(s.where == ((0, 0), (0, 3), (0, 6)) for s in applicable_moves(d, ["R3"]))
            assert found == legal
            preserved.append(normalized(swapped) == normalized(d))
        # legal swaps always preserve the polynomial; every illegal one is caught somewhere
        assert all(preserved) if legal else not all(preserved), pattern
