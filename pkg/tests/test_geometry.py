"""Exact curves: realization, tightening, crossings, windings."""

from __future__ import annotations

from fractions import Fraction

import pytest

from cable_curves.plane import (
    PegCollision,
    PLCurve,
    enclosed_pegs,
    is_tight,
    pull_tight,
    realize,
    wall_crossings,
    winding_number,
    word_from_curve,
)
from cable_curves.words import WordError, parse_word


def test_realize_unknot_horizontal_at_half():
    c = realize(parse_word("e"))
    assert all(y == Fraction(1, 2) for _, y in c.points)
    assert abs(c.period[0]) == 1 and c.period[1] == 0


def test_realize_trefoil_shape():
    c = realize(parse_word("a1 c2' b1"))
    assert c.period == (1, 0)
    vs = [x for x in wall_crossings(c) if x[0] == "V"]
    assert len(vs) == 3  # three axis crossings per period


def test_realize_avoids_pegs_everywhere():
    for text in ["e", "a1 c2' b1", "a1 b1 a1' b1'", "a2 b2'", "c10 a1' b2' a1' b1' a1' b1' a2' b1'"]:
        realize(parse_word(text))  # PegCollision would raise


def test_single_hook_pair_encloses_one_peg():
    # a1 b1' closes up into an embedded loop around exactly one peg
    c = realize(parse_word("a1 b1'"))
    assert c.closed_in_plane
    pegs = enclosed_pegs(c)
    assert len(pegs) == 1


def test_tall_hook_pair_encloses_two_stacked_pegs():
    c = realize(parse_word("a2 b2'"))
    pegs = enclosed_pegs(c)
    assert len(pegs) == 2
    (x1, y1), (x2, y2) = sorted(pegs)
    assert x1 == x2 and abs(y1 - y2) == 1


def test_figure_eight_box_windings():
    c = realize(parse_word("a1 b1 a1' b1'"))
    pegs = sorted(enclosed_pegs(c))
    assert len(pegs) == 2
    (x1, y1), (x2, y2) = pegs
    assert x1 == x2 and y2 == y1 + 1
    # opposite lobes wind oppositely
    assert winding_number(c, pegs[0]) == -winding_number(c, pegs[1]) != 0


def test_pull_tight_idempotent():
    c = pull_tight(realize(parse_word("a1 c2' b1")))
    assert pull_tight(c).points == c.points
    assert is_tight(c)


def test_pull_tight_removes_detour():
    c = realize(parse_word("e"))
    spiked = PLCurve(
        (
            (Fraction(0), Fraction(1, 2)),
            (Fraction(1, 3), Fraction(1, 2)),
            (Fraction(1, 3), Fraction(8, 5)),  # poke across y = 1 and back
            (Fraction(2, 5), Fraction(8, 5)),
            (Fraction(2, 5), Fraction(1, 2)),
        ),
        c.period,
    )
    assert word_from_curve(pull_tight(spiked)) == parse_word("e")


def test_word_from_curve_rejects_unreduced():
    c = realize(parse_word("e"))
    spiked = PLCurve(
        (
            (Fraction(0), Fraction(1, 2)),
            (Fraction(1, 3), Fraction(1, 2)),
            (Fraction(1, 3), Fraction(8, 5)),
            (Fraction(2, 5), Fraction(8, 5)),
            (Fraction(2, 5), Fraction(1, 2)),
        ),
        c.period,
    )
    with pytest.raises(WordError, match="tight"):
        word_from_curve(spiked)


def test_round_trip_small_words():
    for text in ["e", "a1 c2' b1", "a1 b1 a1' b1'", "a1' d2 b1'", "a2 b2'", "c10 a1' b2' a1' b1' a1' b1' a2' b1'"]:
        w = parse_word(text)
        assert word_from_curve(pull_tight(realize(w))) == w


def test_nullhomotopic_component_rejected():
    square = PLCurve(
        (
            (Fraction(1, 3), Fraction(1, 3)),
            (Fraction(2, 3), Fraction(1, 3)),
            (Fraction(2, 3), Fraction(2, 3)),
            (Fraction(1, 3), Fraction(2, 3)),
        ),
        (0, 0),
    )
    with pytest.raises(WordError):
        pull_tight(square)


def test_peg_collision_detected():
    bad = PLCurve(((Fraction(-1, 2), Fraction(0)), (Fraction(1, 2), Fraction(0))), (0, 0))
    with pytest.raises(PegCollision):
        wall_crossings(PLCurve(((Fraction(-1, 2), Fraction(-1, 2)), (Fraction(1, 2), Fraction(1, 2))), (0, 0)))
    with pytest.raises(PegCollision):
        wall_crossings(bad)


def test_bar_reversal_same_image():
    w = parse_word("a1 c2' b1")
    a = pull_tight(realize(w))
    b = pull_tight(realize(w.reversed()))
    # same normalized word, mirror traversal
    assert word_from_curve(a) == word_from_curve(b)
