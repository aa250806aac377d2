"""Key curves, shears, covers, and the cabling plane map."""

from __future__ import annotations

from fractions import Fraction

import pytest

from cable_curves.plane import PLCurve, pull_tight, realize, word_from_curve
from cable_curves.transforms import (
    FractionalShear,
    apply_basis_change,
    ceil_key,
    f_pq,
    floor_key,
    g_pq,
    key_from_curve,
    key_from_slope,
    lift_to_cover,
    shift_amount,
    vertical_sum,
)
from cable_curves.words import parse_word


def horizontal():
    return pull_tight(realize(parse_word("e")))


def trefoil():
    return pull_tight(realize(parse_word("a1 c2' b1")))


def test_floor_key_slope_half():
    key = key_from_slope(1, 2)
    assert key.column_word() == [0, 1]
    assert key.height_at_column(1) == 0 and key.height_at_column(2) == 1


def test_floor_key_zero_slope_is_flat():
    key = key_from_slope(0, 1)
    assert key.column_word() == [0]


def test_ceil_key_of_slope():
    key = key_from_slope(1, 2, ceil=True)
    assert [key.height_at_column(i) for i in (0, 1, 2)] == [0, 1, 1]


def test_key_from_curve_matches_slope_key():
    gamma = realize(parse_word("e' c1"))  # staircase of slope 1/2
    key = key_from_curve(gamma)
    assert key.column_word() in ([0, 1], [1, 0])
    assert key.rise == 1


def test_floor_ceil_dispatch():
    assert floor_key(1, 2).column_word() == [0, 1]
    assert ceil_key(1, 2).heights != floor_key(1, 2).heights
    gamma = realize(parse_word("e' c1"))
    assert floor_key(gamma).rise == 1


def test_vertical_sum_flat_key_is_identity():
    tref = trefoil()
    out = vertical_sum(tref, key_from_slope(0, 1))
    assert word_from_curve(pull_tight(out)) == word_from_curve(tref)


def test_vertical_sum_slope_one_is_a_plane_shear():
    line = horizontal()
    summed = pull_tight(vertical_sum(line, key_from_slope(1, 1)))
    sheared = pull_tight(apply_basis_change(line, ((1, 0), (1, 1))))
    assert word_from_curve(summed) == word_from_curve(sheared)
    tref = trefoil()
    summed = pull_tight(vertical_sum(tref, key_from_slope(1, 1)))
    sheared = pull_tight(apply_basis_change(tref, ((1, 0), (1, 1))))
    assert word_from_curve(summed) == word_from_curve(sheared)


def test_lift_periodic_and_closed():
    line = horizontal()
    (lifted,) = lift_to_cover(line, 3)
    assert lifted.period == (3 * line.period[0], 0)
    box = pull_tight(realize(parse_word("a1 b1 a1' b1'")))
    copies = lift_to_cover(box, 2)
    assert len(copies) == 2
    assert copies[1].points[0][0] - copies[0].points[0][0] == 1


def test_g11_is_identity_map():
    sh = FractionalShear(1, 5)
    pt = (Fraction(3, 7), Fraction(5, 3))
    assert sh.apply_point(pt) == pt


def test_g21_peg_behavior():
    sh = FractionalShear(2, 1)
    # even columns fixed
    assert sh.apply_point((Fraction(0), Fraction(3))) == (Fraction(0), Fraction(3))
    # odd columns slide leftward along slope 1/2
    assert sh.apply_point((Fraction(1), Fraction(0))) == (Fraction(0), Fraction(-1, 2))
    assert sh.apply_point((Fraction(3), Fraction(2))) == (Fraction(2), Fraction(3, 2))


def test_g_pq_lattice_image():
    sh = FractionalShear(3, 2)
    for m in range(-3, 4):
        for n in range(-2, 3):
            x, y = sh.apply_point((Fraction(m), Fraction(n)))
            assert x.denominator == 1 and int(x) % 3 == 0
            assert (3 * y).denominator == 1


def test_f_pq_takes_lattice_to_lattice():
    for (p, q) in [(2, 1), (3, 2), (5, 2), (3, -2)]:
        sh = FractionalShear(p, q)
        seen = set()
        for m in range(0, p):
            for n in range(-2, 3):
                x, y = sh.apply_point((Fraction(m), Fraction(n)))
                fx, fy = x / p, y * p + shift_amount(p, q)
                assert fx.denominator == 1 and fy.denominator == 1
                seen.add((int(fx), int(fy)))
        assert len(seen) == 5 * p  # injective on the sample


def test_f_identity_for_p1():
    tref = trefoil()
    out = pull_tight(f_pq(tref, 1, 7))
    assert word_from_curve(out) == word_from_curve(tref)


def test_f21_of_unknot_cover_is_horizontal():
    (lifted,) = lift_to_cover(horizontal(), 2)
    out = pull_tight(f_pq(lifted, 2, 1))
    assert word_from_curve(out) == parse_word("e")


def test_f32_of_trefoil_cover_needs_p_dividing_period():
    with pytest.raises(ValueError):
        f_pq(trefoil(), 3, 2)


def test_f_periodicity_in_the_cover():
    (lifted,) = lift_to_cover(trefoil(), 3)
    image = f_pq(lifted, 3, 2)
    shifted = f_pq(PLCurve(tuple((x + 3, y) for x, y in lifted.points), lifted.period), 3, 2)
    expect = [(x + 1, y) for x, y in image.points]
    assert list(shifted.points) == expect


def test_basis_change_determinant_checked():
    with pytest.raises(ValueError):
        apply_basis_change(horizontal(), ((2, 0), (0, 1)))


def test_shear_composition_matches_direct_matrix():
    tref = trefoil()
    # [[1,1],[1,2]] = [[1,0],[1,1]] * [[1,1],[0,1]]
    direct = pull_tight(apply_basis_change(tref, ((1, 1), (1, 2))))
    step = pull_tight(apply_basis_change(apply_basis_change(tref, ((1, 1), (0, 1))), ((1, 0), (1, 1))))
    assert word_from_curve(direct) == word_from_curve(step)
