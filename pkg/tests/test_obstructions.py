"""Non-cabling obstructions: closed components, decabling, arc bound."""

from __future__ import annotations

from cable_curves.cabling import cable_geometric
from cable_curves.corpus import (
    figure_eight_like,
    left_trefoil,
    right_trefoil,
    synthetic_noncable,
    unknot,
)
from cable_curves.obstructions import (
    arc_length_bound,
    closed_component_check,
    decable_gamma0,
    gamma0_passing_check,
    obstruction_report,
)


def test_closed_component_check_figure_eight():
    fig8 = figure_eight_like()
    for p in range(2, 6):
        findings = closed_component_check(fig8, p)
        assert any(not f.ok for f in findings)
    # p = 1: every height class collapses
    assert all(f.ok for f in closed_component_check(fig8, 1))


def test_closed_component_check_no_closed_components():
    for p in range(2, 5):
        assert closed_component_check(right_trefoil(), p) == []


def test_gamma0_check_trefoil_is_a_torus_cable():
    assert gamma0_passing_check(right_trefoil(), 2).slope == 3
    assert gamma0_passing_check(right_trefoil(), 3).slope == 2
    assert not gamma0_passing_check(right_trefoil(), 4).ok
    assert gamma0_passing_check(left_trefoil(), 2).slope == -3
    assert gamma0_passing_check(left_trefoil(), 3).slope == -2


def test_gamma0_check_unknot_always_possible():
    for p in (1, 2, 3, 7):
        assert gamma0_passing_check(unknot(), p).ok


def test_synthetic_curve_obstructed():
    synth = synthetic_noncable()
    rep = obstruction_report(synth, 3)
    assert not rep.verdict(2).possible
    assert not rep.verdict(3).possible
    assert rep.arc_bound == 3


def test_arc_length_bounds():
    assert arc_length_bound(right_trefoil()) == 2
    assert arc_length_bound(synthetic_noncable()) == 3
    assert arc_length_bound(unknot()) is None
    assert arc_length_bound(figure_eight_like()) is None  # horizontal gamma0


def test_decabling_recovers_companion():
    cable = cable_geometric(right_trefoil(), 2, 1)
    sub = decable_gamma0(cable, 2, 1)
    assert sub is not None
    from cable_curves.words import normalize, parse_word

    assert normalize(sub) == parse_word("a1 c2' b1")


def test_soundness_on_cabled_outputs():
    for mc in (right_trefoil(), figure_eight_like()):
        for p, q in [(2, 1), (3, -2)]:
            cable = cable_geometric(mc, p, q)
            assert gamma0_passing_check(cable, p).ok
            assert all(f.ok for f in closed_component_check(cable, p))


def test_report_json_shape():
    rep = obstruction_report(synthetic_noncable(), 3)
    doc = rep.to_json_dict()
    assert doc["first_left_arc_p_max"] == 3
    assert [v["p"] for v in doc["verdicts"]] == [2, 3]
    assert all(not v["possible"] for v in doc["verdicts"])
