"""Multicurves: the full curve invariant of a knot complement.

A multicurve is an ordered list of components, each a word paired with an
exact tight curve at a definite vertical position, plus the index of the
distinguished component gamma0 (the one wrapping the cylinder).  In the
standard framing gamma0 has horizontal period one and meets the line
x = 1/2 once; the whole picture is normalized so that crossing sits at
height 1/2.  Plane-closed components keep their absolute height, which is
what the Alexander polynomial and the cabling obstructions read.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

from .letters import KIND_A, KIND_C
from .plane import PLCurve, pull_tight, realize, word_from_curve
from .words import LocalSystem, LoopWord, WordError, equivalent, normalize, validate


@dataclass(frozen=True)
class Component:
    word: LoopWord
    curve: PLCurve

    @property
    def closed(self) -> bool:
        return self.curve.closed_in_plane


@dataclass(frozen=True)
class Multicurve:
    components: Tuple[Component, ...]
    gamma0: int
    shift: Fraction = Fraction(0)  # tracked vertical shift from the last transformation

    def __post_init__(self) -> None:
        if not (0 <= self.gamma0 < len(self.components)):
            raise ValueError("gamma0 index out of range")

    @property
    def gamma0_component(self) -> Component:
        return self.components[self.gamma0]

    def closed_components(self) -> List[Component]:
        return [c for i, c in enumerate(self.components) if i != self.gamma0]

    def words(self) -> List[LoopWord]:
        return [c.word for c in self.components]


def _reattach_system(word: LoopWord, system: Optional[LocalSystem]) -> LoopWord:
    """Attach a component's local system to the re-extracted word."""
    if system is None or (system.dim == 1 and system.matrix.is_identity()):
        return word
    for i, letter in enumerate(word.letters):
        if letter.kind == KIND_A:
            return normalize(LoopWord(word.letters, LocalSystem(system.matrix, i)))
    raise WordError("cannot carry a nontrivial local system: no a-letter survived")


def component_from_curve(curve: PLCurve, system: Optional[LocalSystem] = None) -> Component:
    tight = pull_tight(curve)
    word = _reattach_system(word_from_curve(tight), system)
    return Component(word, tight)


def axis_heights(component: Component) -> List[Fraction]:
    """Axis-crossing heights of a standard gamma0, wrap first.

    The canonical height of a crossing through the edge {m} x (n, n+1) is
    n + 1/2.  The list starts at the first crossing after the segment that
    wraps the cylinder and follows the traversal.
    """
    from .plane import wall_crossings  # local import to avoid cycles at load

    curve = component.curve
    if abs(curve.period[0]) != 1 or curve.period[1] != 0:
        raise ValueError("only defined for standard distinguished components")
    vs = [c for c in wall_crossings(curve) if c[0] == "V"]
    if not vs:
        raise ValueError("distinguished component never crosses the axis")
    n = len(vs)
    lines = [c[1] for c in vs] + [vs[0][1] + curve.period[0]]
    wrap = None
    for i in range(n):
        if lines[i + 1] != lines[i]:
            if wrap is not None:
                raise ValueError("gamma0 must wrap the cylinder exactly once")
            wrap = i
    if wrap is None:
        raise ValueError("gamma0 never wraps the cylinder")
    ordered = vs[wrap + 1 :] + vs[: wrap + 1]
    return [c[2] + Fraction(1, 2) for c in ordered]


def standardize(mc: Multicurve) -> Multicurve:
    """Translate the whole picture so gamma0 is centered at height 1/2.

    The center is the average of the first and last axis-crossing heights;
    only integer translations preserve the pegboard, so it is brought into
    (0, 1] - for honest knot invariants it lands exactly at 1/2.
    """
    heights = axis_heights(mc.gamma0_component)
    center = (heights[0] + heights[-1]) / 2
    shift = Fraction(1, 2) - center
    k = int((shift + Fraction(1, 2)).__floor__())
    if k == 0:
        return mc
    comps = tuple(Component(c.word, c.curve.translated(0, k)) for c in mc.components)
    return Multicurve(comps, mc.gamma0, mc.shift)


def validate_standard(mc: Multicurve) -> None:
    """Check the knot-complement conventions."""
    g0 = mc.gamma0_component
    if abs(g0.curve.period[0]) != 1 or g0.curve.period[1] != 0:
        raise ValueError("gamma0 must wrap the cylinder once")
    if sum(1 for l in g0.word.letters if l.kind == KIND_C) != 1:
        raise ValueError("gamma0 must cross the vertical line x = 1/2 exactly once")
    if g0.word.system is not None and not g0.word.system.matrix.is_identity():
        raise ValueError("gamma0 always carries the trivial local system")
    for c in mc.closed_components():
        if not c.closed:
            raise ValueError("non-distinguished components must be plane-closed")
        validate(c.word)
    validate(g0.word)


def from_words(
    words: Sequence[LoopWord],
    gamma0: int = 0,
    offsets: Optional[Sequence[int]] = None,
) -> Multicurve:
    """Build a standardized multicurve from component words.

    The distinguished word is drawn with its wrap crossing at height 1/2;
    plane-closed components are vertically centered (their junction span
    centered on 1/2), then moved by their optional integer offset.
    """
    comps: List[Component] = []
    offsets = list(offsets) if offsets is not None else [0] * len(words)
    if len(offsets) != len(words):
        raise ValueError("offsets must match components")
    for i, word in enumerate(words):
        word = normalize(word)
        validate(word)
        curve = pull_tight(realize(word))
        if i == gamma0:
            heights = axis_heights(Component(word, curve))
            center = (heights[0] + heights[-1]) / 2
            shift = Fraction(1, 2) - center
            k = int((shift + Fraction(1, 2)).__floor__())
            comps.append(Component(word, curve.translated(0, k)))
        else:
            if not curve.closed_in_plane:
                raise ValueError("non-distinguished components must be plane-closed")
            ys = [y for _, y in curve.points]
            center = (min(ys) + max(ys)) / 2
            shift = Fraction(1, 2) - center
            k = int((shift + Fraction(1, 2)).__floor__()) + offsets[i]
            comps.append(Component(word, curve.translated(0, k)))
    return Multicurve(tuple(comps), gamma0)


def map_components(mc: Multicurve, fn, shift: Fraction = Fraction(0)) -> Multicurve:
    """Apply a curve map componentwise, re-extracting tight words.

    ``fn`` maps one PLCurve to one PLCurve or to a list of them (covers).
    """
    comps: List[Component] = []
    gamma0 = 0
    for i, c in enumerate(mc.components):
        image = fn(c.curve)
        curves = image if isinstance(image, list) else [image]
        if i == mc.gamma0:
            gamma0 = len(comps)
        for cur in curves:
            comps.append(component_from_curve(cur, c.word.system))
    return Multicurve(tuple(comps), gamma0, shift)


def word_sets_equal(a: Multicurve, b: Multicurve) -> bool:
    """Same normalized words with multiplicity, gamma0 matching gamma0."""
    if len(a.components) != len(b.components):
        return False
    if not equivalent(a.gamma0_component.word, b.gamma0_component.word):
        return False
    rest_a = [c.word for i, c in enumerate(a.components) if i != a.gamma0]
    rest_b = [c.word for i, c in enumerate(b.components) if i != b.gamma0]
    used = [False] * len(rest_b)
    for wa in rest_a:
        for j, wb in enumerate(rest_b):
            if not used[j] and equivalent(wa, wb):
                used[j] = True
                break
        else:
            return False
    return True
