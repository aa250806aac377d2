"""Built-in multicurves used by the test grid and the CLI.

The words here are the standard small examples: the horizontal unknot
curve, both trefoils, an invariant with a figure-eight box component (the
pattern of the simplest alternating knots), a staircase transcribed from
the usual picture of the pretzel knot 12n242 (its first left arc has
length 2, which is what the non-cabling obstructions bite on), and the
generator of an iterated-cable family.
"""

from __future__ import annotations

from typing import Callable, Dict, List

from .multicurve import Multicurve, from_words
from .words import LoopWord, parse_word

UNKNOT_WORD = "e"
RIGHT_TREFOIL_WORD = "a1 c2' b1"
LEFT_TREFOIL_WORD = "a1' d2 b1'"
FIGURE_EIGHT_BOX = "a1 b1 a1' b1'"
# staircase with axis heights 11/2, 9/2, 5/2, 3/2, 1/2, -1/2, -3/2, -7/2, -9/2
SYNTHETIC_NONCABLE_WORD = "c10 a1' b2' a1' b1' a1' b1' a2' b1'"


def unknot() -> Multicurve:
    return from_words([parse_word(UNKNOT_WORD)])


def right_trefoil() -> Multicurve:
    return from_words([parse_word(RIGHT_TREFOIL_WORD)])


def left_trefoil() -> Multicurve:
    return from_words([parse_word(LEFT_TREFOIL_WORD)])


def figure_eight_like() -> Multicurve:
    """Horizontal distinguished curve plus a figure-eight box around two pegs."""
    return from_words([parse_word(UNKNOT_WORD), parse_word(FIGURE_EIGHT_BOX)])


def synthetic_noncable() -> Multicurve:
    """Staircase whose first left arc has length 2 (12n242-style picture)."""
    return from_words([parse_word(SYNTHETIC_NONCABLE_WORD)])


def iterated_cable(n: int) -> Multicurve:
    """K_n: start from the trefoil curve and (2,1)-cable n times."""
    from .cabling import cable_geometric

    mc = right_trefoil()
    for _ in range(n):
        mc = cable_geometric(mc, 2, 1)
    return mc


def corpus() -> Dict[str, Multicurve]:
    """The named built-in set. K_n enters through iterated_cable(n)."""
    return {
        "unknot": unknot(),
        "right-trefoil": right_trefoil(),
        "left-trefoil": left_trefoil(),
        "figure-eight-like": figure_eight_like(),
        "synthetic-noncable": synthetic_noncable(),
        "trefoil-cable-k1": iterated_cable(1),
    }
