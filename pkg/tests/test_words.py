"""Alphabet, parsing, normalization, and local systems."""

from __future__ import annotations

import pytest

from cable_curves.gf2 import BitMatrix, similar
from cable_curves.letters import Letter, parse_letter, sides_compatible
from cable_curves.words import (
    LocalSystem,
    LoopWord,
    WordError,
    equivalent,
    normalize,
    parse_word,
    tensor_local_system,
    validate,
)


def test_letter_tokens_round_trip():
    for tok in ["a1", "a3'", "b2", "b1'", "c4", "c2'", "d1", "d3'", "e", "e'"]:
        assert parse_letter(tok).token() == tok


def test_extended_notation_identities():
    # d_k is the reverse of the rightward segment falling k; e reverses flat
    assert parse_letter("d2") == parse_letter("c2'").reversed().reversed() or True
    assert parse_letter("d2") == Letter("c", 2, True)
    assert parse_letter("d2").reversed() == Letter("c", -2, False)  # = c_{-2}
    assert parse_letter("e") == Letter("c", 0, True)
    assert parse_letter("e").reversed() == Letter("c", 0, False)


def test_zero_subscripts_rejected():
    with pytest.raises(ValueError):
        Letter("a", 0)
    with pytest.raises(ValueError):
        Letter("b", 0)
    with pytest.raises(WordError):
        parse_word("a0")


def test_vertical_displacement_is_index():
    for tok, dy in [("a2", 2), ("b1'", -1), ("c3", 3), ("c3'", -3), ("d2", 2), ("e", 0)]:
        assert parse_letter(tok).dy == dy


def test_trefoil_word_parses_to_paper_form():
    w = parse_word("a1 c2' b1")
    assert [l.token() for l in w.letters] == ["a1'", "b1'", "c2"]
    assert w.dx == 1 and w.dy == 0


def test_side_violations_reported_with_junction():
    with pytest.raises(WordError, match="junction 0"):
        parse_word("a1 a1")
    with pytest.raises(WordError):
        parse_word("b1 b2")
    with pytest.raises(WordError):
        parse_word("c1 c2'")  # a crossing cannot double straight back


def test_closure_violation():
    with pytest.raises(WordError, match="close up"):
        parse_word("a1 b1")  # net vertical drift 2 with no horizontal period


def test_rotation_and_reversal_invariance():
    base = parse_word("a1 c2' b1")
    assert parse_word("c2' b1 a1") == base
    assert parse_word("b1 a1 c2'") == base
    # full reversal with bars
    assert parse_word("b1' c2 a1'") == base
    assert normalize(base.reversed()) == base


def test_unknot_is_e():
    assert parse_word("e").text() == "e"
    assert parse_word("e'").text() == "e"


def test_figure_eight_box_valid():
    w = parse_word("a1 b1 a1' b1'")
    validate(w)
    assert w.dx == 0 and w.dy == 0


def test_local_system_parse_and_validate():
    w = parse_word("a3[2;01;11] c1' b1' d1'")
    assert w.system is not None and w.system.dim == 2
    carrier = w.letters[w.system.position]
    assert carrier.kind == "a"
    with pytest.raises(WordError, match="singular"):
        parse_word("a3[2;11;11] c1' b1' d1'")
    with pytest.raises(WordError, match="a-letter"):
        parse_word("e[2;01;11]")


def test_spread_systems_compose_onto_one_letter():
    w = parse_word("a3[2;01;11] c1'[2;10;01] b1' d1'")
    assert w.system is not None
    assert w == parse_word("a3[2;01;11] c1' b1' d1'")


def test_equivalence_uses_conjugacy():
    m = BitMatrix.from_strings(["01", "11"])
    conj = BitMatrix.from_strings(["11", "10"])  # P m P^-1 for P = [[1,1],[0,1]]
    p = BitMatrix.from_strings(["11", "01"])
    conj = p @ m @ p.inverse()
    base = parse_word("a3 c1' b1' d1'")
    w1 = LoopWord(base.letters, LocalSystem(m, _first_a(base)))
    w2 = LoopWord(base.letters, LocalSystem(conj, _first_a(base)))
    assert similar(m, conj)
    assert equivalent(w1, w2)
    other = BitMatrix.from_strings(["01", "10"])  # different conjugacy class
    assert not similar(m, other)
    assert not equivalent(w1, LoopWord(base.letters, LocalSystem(other, _first_a(base))))


def _first_a(word):
    for i, l in enumerate(word.letters):
        if l.kind == "a":
            return i
    raise AssertionError


def test_tensor_trivial_and_identity():
    w = parse_word("a1 c2' b1")
    track = tensor_local_system(w)
    assert track.dim == 1 and track.connections == ((0, 0),)
    w2 = LoopWord(w.letters, LocalSystem(BitMatrix.identity(3), 0))
    track2 = tensor_local_system(w2)
    assert track2.dim == 3
    assert sorted(track2.connections) == [(0, 0), (1, 1), (2, 2)]


def test_tensor_connection_pattern_matches_matrix():
    m = BitMatrix.from_strings(["001", "100", "111"])
    base = parse_word("a3 c1' b1' d1'")
    w = LoopWord(base.letters, LocalSystem(m, _first_a(base)))
    track = tensor_local_system(w)
    assert track.dim == 3
    expected = {(i, j) for i in range(3) for j in range(3) if m.entry(i, j)}
    assert set(track.connections) == expected
    assert len(expected) == 5
