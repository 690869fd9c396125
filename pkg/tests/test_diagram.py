import pytest
from hypothesis import given

from strategies import codes
from twistpoly.diagram import (BAR, CodeSyntaxError, Pass, TwistedGaussCode, ValidationError, arcs,
                               bar_count, canonical, mirror, parse, renumber, serialize, writhe)


def test_empty_input_is_the_unknot():
    assert parse("") == parse("()") == TwistedGaussCode(())
    assert serialize(parse("")) == "()"


def test_components_and_comments():
    d = parse("O1+ U2+  # first\nU1+ O2+")
    assert len(d.components) == 2
    assert parse("O1+ U2+; U1+ O2+") == d


def test_tokens():
    d = parse("b O1- U1-")
    assert d.components[0][0] is BAR
    assert d.components[0][1] == Pass(1, True, -1)
    assert str(d.components[0][2]) == "U1-"


def test_syntax_error_position():
    with pytest.raises(CodeSyntaxError) as err:
        parse("O1+ U1+\nO2+ Q2+ U2+")
    assert (err.value.line, err.value.column, err.value.token) == (2, 5, "Q2+")


@pytest.mark.parametrize("text", ["O1+", "O1+ O1+", "O1+ U1-", "O0+ U0+", "O1+ U1+ U1+"])
def test_validation(text):
    with pytest.raises(ValidationError):
        parse(text)


def test_arcs_and_bars():
    d = parse("O1+ b O2+ U1+ b b U2+")
    got = [(a.start, a.end, a.bar_count) for a in arcs(d)]
    assert got == [(0, 2, 1), (2, 3, 0), (3, 6, 2), (6, 0, 0)]
    assert bar_count(d) == 3
    free = arcs(parse("b b"))
    assert free[0].degenerate and free[0].bar_count == 2


def test_writhe_ignores_bars():
    assert writhe(parse("O1+ b U1+")) == 1
    assert writhe(parse("O1- U2+ O2+ U1-")) == 0


def test_renumber_and_canonical():
    d = parse("U7+ O3- O7+ U3-")
    assert serialize(renumber(d)) == "U1+ O2- O1+ U2-"
    assert canonical(d) == canonical(parse("O3+ U5- U3+ O5-"))


@given(codes())
def test_serialize_roundtrip(d):
    assert parse(serialize(d)) == d


@given(codes())
def test_mirror_is_involution(d):
    assert mirror(mirror(d)) == d
    assert writhe(mirror(d)) == -writhe(d)


@given(codes())
def test_arc_count(d):
    comps_without_passes = sum(1 for c in d.components if all(t is BAR for t in c))
    assert len(arcs(d)) == 2 * d.n_crossings + comps_without_passes
    assert sum(a.bar_count for a in arcs(d)) == bar_count(d)
