import pytest
from hypothesis import given, settings, strategies as st

from oracles import brute_colorable
from strategies import codes
from twistpoly.arrowsum import colorability_criteria
from twistpoly.braid import closure, parse_braid
from twistpoly.coloring import (Framing, HasBars, NotAFraming, TooFewCutPoints, UnknownCrossing,
                                bar_parity_check, constraint_system, cut_move_I, cut_move_II,
                                framing_space_connected, is_checkerboard_colorable,
                                min_cut_points, plain_framing, replace_cutpoints_with_bars)
from twistpoly.diagram import arcs, bar_count, parse

TREFOIL = parse("O1+ U2+ O3+ U1+ O2+ U3+")
VT = parse("O1+ O2+ U1+ U2+")
KINK = parse("O1+ U1+")


def test_constraint_examples():
    assert is_checkerboard_colorable(TREFOIL)
    assert not is_checkerboard_colorable(VT)
    assert not is_checkerboard_colorable(parse("b"))
    assert is_checkerboard_colorable(parse(""))
    sys = constraint_system(parse("b"))
    assert len(sys.relations) == 1 and sys.relations[0].rhs == 1


def test_two_complementary_colorings():
    res = is_checkerboard_colorable(TREFOIL)
    a, b = res.colorings
    assert all(a[c] != b[c] for c in a)
    system = constraint_system(TREFOIL)
    for col in res.colorings:
        bits = [int(col[c]) for c in system.crossings]
        assert system.violations(bits) == 0


def test_classical_closures_are_colorable():
    for word, n in [("s1 S2 s1 S2", 3), ("s1 s1", 2), ("s1 s2 s1 s2 S1", 3)]:
        assert is_checkerboard_colorable(closure(parse_braid(word, n)))


@given(codes(max_crossings=4, max_bars=3))
@settings(max_examples=80)
def test_matches_brute_force(d):
    assert bool(is_checkerboard_colorable(d)) == brute_colorable(d)


def test_min_cut_point_examples():
    assert min_cut_points(TREFOIL).p_d == 0
    assert min_cut_points(VT).p_d == 2
    assert min_cut_points(parse("")).p_d == 0
    with pytest.raises(HasBars):
        min_cut_points(parse("b"))


@given(codes(max_crossings=4, bars=False))
@settings(max_examples=60)
def test_cut_points_even_and_bounded(d):
    rep = min_cut_points(d)
    assert rep.p_d % 2 == 0
    assert 0 <= rep.p_d <= 2 * d.n_crossings
    assert rep.witness.is_plain()


def test_move_I_on_kink():
    f = plain_framing(KINK, [0])
    assert f.cut_counts == (0, 0)
    g = cut_move_I(f, 1)
    assert g.cut_counts == (2, 2) and g.is_valid()
    h = cut_move_II(cut_move_II(g, 0), 1)
    assert h.cut_counts == f.cut_counts and h.coloring != f.coloring
    assert cut_move_I(cut_move_I(f, 1), 1).cut_counts == (4, 4)


def test_move_I_on_trefoil():
    f = plain_framing(TREFOIL, [0, 0, 0])
    assert f.total == 0
    g = cut_move_I(f, 2)
    assert sorted(g.cut_counts) == [0, 0, 1, 1, 1, 1]
    with pytest.raises(UnknownCrossing):
        cut_move_I(f, 9)


def test_move_II():
    f = Framing(KINK, (2, 0), (0,))
    assert cut_move_II(f, 0).cut_counts == (0, 0)
    assert cut_move_II(Framing(KINK, (3, 1), (1,)), 0).cut_counts == (1, 1)
    with pytest.raises(TooFewCutPoints):
        cut_move_II(Framing(KINK, (1, 1), (1,)), 0)
    assert cut_move_II(f, 1, inverse=True).cut_counts == (2, 2)


@given(codes(max_crossings=3, bars=False), st.data())
@settings(max_examples=40)
def test_moves_keep_framings_valid(d, data):
    bits = [data.draw(st.integers(0, 1)) for _ in d.crossings()]
    f = plain_framing(d, bits)
    for c in d.crossings():
        f = cut_move_I(f, c)
        assert f.is_valid()
    for k, n in enumerate(f.cut_counts):
        if n >= 2:
            g = cut_move_II(f, k)
            assert g.is_valid() and g.cut_counts[k] % 2 == n % 2


@pytest.mark.parametrize("text", ["O1+ U1+", "O1+ O2+ U1+ U2+", "O1+ U2+ O3+ U1+ O2+ U3+"])
def test_framing_space_connected(text):
    rep = framing_space_connected(parse(text), 3)
    assert rep.connected
    assert rep.plain_framings == 2 ** parse(text).n_crossings


def test_replace_cutpoints():
    assert replace_cutpoints_with_bars(TREFOIL, plain_framing(TREFOIL, [0, 0, 0])) == TREFOIL
    rep = min_cut_points(VT)
    e = replace_cutpoints_with_bars(VT, rep.witness)
    assert bar_count(e) == 2 and is_checkerboard_colorable(e)
    assert replace_cutpoints_with_bars(parse(""), plain_framing(parse(""), [])) == parse("")
    with pytest.raises(NotAFraming):
        replace_cutpoints_with_bars(VT, Framing(VT, (0, 0, 0, 0), (0, 0)))


@given(codes(max_crossings=4, bars=False), st.data())
@settings(max_examples=40)
def test_barred_framings_are_colorable(d, data):
    bits = [data.draw(st.integers(0, 1)) for _ in d.crossings()]
    e = replace_cutpoints_with_bars(d, plain_framing(d, bits))
    assert is_checkerboard_colorable(e)
    assert colorability_criteria(e).passes_all
    assert bar_count(e) % 2 == 0


def test_bar_parity_examples():
    r = bar_parity_check(parse("b b"))
    assert (r.colorable, r.bars, r.even) == (True, 0, True)
    r = bar_parity_check(parse("b"))
    assert (r.colorable, r.bars, r.even) == (False, 1, False)
    e = replace_cutpoints_with_bars(VT, min_cut_points(VT).witness)
    assert bar_parity_check(e).even


@given(codes(max_crossings=4, max_bars=5))
@settings(max_examples=80)
def test_colorable_implies_even_bars(d):
    assert bar_parity_check(d).holds
