"""Both cabling routes, torus knots, tiles, framings."""

from __future__ import annotations

from fractions import Fraction

import pytest

from cable_curves.cabling import (
    CableParamError,
    CableParams,
    cable_geometric,
    cable_merge,
    meridian_word,
    tile,
    torus_knot_curve,
)
from cable_curves.corpus import figure_eight_like, right_trefoil, unknot
from cable_curves.invariants import tau
from cable_curves.multicurve import word_sets_equal
from cable_curves.plane import enclosed_pegs
from cable_curves.words import parse_word


def test_default_framing():
    params = CableParams.default(3, 2)
    assert (params.r, params.s) == (2, 1)
    assert params.p * params.s - params.q * params.r == -1
    assert CableParams.default(2, -1).r == 1
    assert CableParams.default(1, 5) == CableParams(1, 5, 0, -1)


def test_invalid_params_rejected():
    with pytest.raises(CableParamError):
        CableParams.default(2, 4)
    with pytest.raises(CableParamError):
        CableParams.default(0, 1)
    with pytest.raises(CableParamError):
        CableParams.default(-2, 1)
    with pytest.raises(CableParamError):
        CableParams(2, 1, 0, 0)


def test_meridian_word_is_floor_staircase():
    w = meridian_word(CableParams.default(2, 1))
    assert [l.index for l in w.letters] == [0, 1]
    w = meridian_word(CableParams.default(5, 2))
    assert sum(l.index for l in w.letters) == CableParams.default(5, 2).r


def test_torus_knots():
    assert torus_knot_curve(2, 3).gamma0_component.word == parse_word("a1 c2' b1")
    assert torus_knot_curve(3, 2).gamma0_component.word == parse_word("a1 c2' b1")
    for q in (1, -1):
        for p in (2, 3, 5):
            assert torus_knot_curve(p, q).gamma0_component.word == parse_word("e")
    assert tau(torus_knot_curve(3, 4)) == 3


def test_unknot_cables_unknotted_for_unit_q():
    out = cable_geometric(unknot(), 5, 1)
    assert out.gamma0_component.word == parse_word("e")
    out = cable_merge(unknot(), 2, 1)
    assert out.gamma0_component.word == parse_word("e")


def test_route_equivalence_spot_checks():
    tref = right_trefoil()
    for (p, q) in [(2, 1), (2, -1), (3, 2)]:
        assert word_sets_equal(cable_geometric(tref, p, q), cable_merge(tref, p, q))
    fig8 = figure_eight_like()
    assert word_sets_equal(cable_geometric(fig8, 2, 3), cable_merge(fig8, 2, 3))


def test_trefoil_21_cable_word():
    out = cable_geometric(right_trefoil(), 2, 1)
    assert len(out.components) == 1
    assert out.gamma0_component.word == parse_word("a2' b1' c4 a1' b2' a1 b1")
    assert tau(out) == 2


def test_p_equals_one_is_identity():
    tref = right_trefoil()
    out = cable_geometric(tref, 1, 5)
    assert word_sets_equal(out, tref)
    assert word_sets_equal(cable_merge(tref, 1, 5), tref)


def test_iterated_cable_composition():
    k2_direct = cable_geometric(cable_geometric(right_trefoil(), 2, 1), 2, 1)
    from cable_curves.corpus import iterated_cable

    assert word_sets_equal(k2_direct, iterated_cable(2))


def test_closed_components_enclose_single_height_class():
    for p, q in [(2, 1), (3, 2)]:
        out = cable_geometric(figure_eight_like(), p, q)
        for comp in out.closed_components():
            heights = {b % p for _, b in enclosed_pegs(comp.curve)}
            assert len(heights) == 1


def test_framing_choice_does_not_change_words():
    for (p, q) in [(2, 1), (3, 2), (3, -2)]:
        base = CableParams.default(p, q)
        alt = CableParams(p, q, base.r + p, base.s + q)
        a = cable_merge(right_trefoil(), p, q, base)
        b = cable_merge(right_trefoil(), p, q, alt)
        assert word_sets_equal(a, b)


def test_tile_unit_for_p1():
    t = tile(1, 3)
    assert set(t.polygon) == {
        (Fraction(0), Fraction(0)),
        (Fraction(1), Fraction(0)),
        (Fraction(1), Fraction(1)),
        (Fraction(0), Fraction(1)),
    }
    assert t.translations == ((1, 0), (0, 1))


def test_tile_32_lattice_and_area():
    t = tile(3, 2)
    assert t.translations == ((1, 0), (0, 3))
    # shoelace area of the fundamental tile equals p
    pts = list(t.polygon)
    area = Fraction(0)
    for (x1, y1), (x2, y2) in zip(pts, pts[1:] + pts[:1]):
        area += x1 * y2 - x2 * y1
    assert abs(area) / 2 == 3


def test_tile_longitude_image_is_torus_knot():
    # the longitude across p tiles maps to the torus-knot curve
    from cable_curves.plane import pull_tight, word_from_curve
    from cable_curves.transforms import f_pq, lift_to_cover

    (lifted,) = lift_to_cover(unknot().gamma0_component.curve, 3)
    image = pull_tight(f_pq(lifted, 3, 2))
    assert word_from_curve(image) == parse_word("a1 c2' b1")
