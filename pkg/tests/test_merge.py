"""The grid merge and its geometric reading."""

from __future__ import annotations

import pytest

from cable_curves.gf2 import BitMatrix
from cable_curves.letters import KIND_A, KIND_B, KIND_C, Letter
from cable_curves.merge import column_indices, merge
from cable_curves.plane import pull_tight, realize, word_from_curve
from cable_curves.transforms import key_from_curve, vertical_sum
from cable_curves.words import LocalSystem, LoopWord, WordError, normalize, parse_word


def cword(*indices):
    return LoopWord(tuple(Letter(KIND_C, k, False) for k in indices))


def test_single_flat_column_is_identity():
    for theta in [parse_word("a1 c2' b1"), parse_word("a1 b1 a1' b1'"), parse_word("e")]:
        out = merge(cword(0), theta)
        assert len(out) == 1
        assert out[0] == normalize(theta)


def test_single_letter_rule_shifts_crossing_indices():
    out = merge(cword(2), parse_word("e'"))
    assert out == [normalize(cword(2))]  # m(c_0, c_2-column) = c_2


def test_hooks_keep_their_letters():
    theta = parse_word("a1 b1 a1' b1'")
    for out in merge(cword(1, -1), theta):
        assert out == normalize(theta)  # no crossing letters to shift


def test_component_count_closed_input():
    theta = parse_word("a1 b1 a1' b1'")
    assert len(merge(cword(1, 2, -1), theta)) == 3


def test_component_count_wrapping_input():
    theta = parse_word("a1 c2' b1")  # net column displacement 1
    outs = merge(cword(0, 1), theta)
    assert len(outs) == 1
    assert len(outs[0].letters) == 2 * len(theta.letters)


def test_letter_count_conservation():
    theta = parse_word("a1 c2' b1")
    gamma = cword(1, 2, -1)
    (out,) = merge(gamma, theta)
    a_in = sum(1 for l in theta.letters if l.kind == KIND_A)
    b_in = sum(1 for l in theta.letters if l.kind == KIND_B)
    passes = len(out.letters) // len(theta.letters)
    assert passes == 3
    assert sum(1 for l in out.letters if l.kind == KIND_A) == passes * a_in
    assert sum(1 for l in out.letters if l.kind == KIND_B) == passes * b_in


def test_merge_rejects_hooks_in_gamma():
    with pytest.raises(WordError):
        merge(parse_word("a1 b1'"), parse_word("e"))
    with pytest.raises(WordError):
        column_indices(parse_word("e"))  # barred crossing letter


def test_local_system_dimension_preserved():
    base = parse_word("a3 c1' b1' d1'")
    m = BitMatrix.from_strings(["01", "11"])
    theta = normalize(LoopWord(base.letters, LocalSystem(m, _first_a(base))))
    for out in merge(cword(1, -1, 0), theta):
        assert out.dim == 2


def _first_a(word):
    for i, l in enumerate(word.letters):
        if l.kind == KIND_A:
            return i
    raise AssertionError


def test_grid_matches_vertical_sum_on_fixed_case():
    gamma = cword(1, 2, -1)
    theta = parse_word("a1 c2' b1")
    grid = sorted(w.text() for w in merge(gamma, theta))
    key = key_from_curve(realize(gamma))
    image = word_from_curve(pull_tight(vertical_sum(pull_tight(realize(theta)), key)))
    assert [image.text()] == grid


def test_grid_matches_vertical_sum_closed_case():
    gamma = cword(2, -1)
    theta = parse_word("a1 b1 a1' b1'")
    grid = sorted(w.text() for w in merge(gamma, theta))
    key = key_from_curve(realize(gamma))
    curve = pull_tight(realize(theta))
    images = sorted(
        word_from_curve(pull_tight(vertical_sum(curve.translated(j, 0), key))).text() for j in range(2)
    )
    assert images == grid
