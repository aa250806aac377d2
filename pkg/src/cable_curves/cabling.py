"""The two cabling routes and torus-knot generation.

Geometric route: lift the invariant to the p-fold horizontal cover and
apply the cabling plane transformation (fractional shear, rescale by p,
standard vertical shift), then pull tight and recenter.

Word route: redraw the invariant in the framing adapted to the cabling
annulus, merge with the solid-torus meridian word (a staircase of slope
r/p), and change basis back.  The framing matrices come from gluing a
solid torus and the knot complement to a circle bundle over a pair of
pants: with ps - qr = -1 the adapted frame is f = p*longitude +
q*meridian, b = -r*longitude - s*meridian, the solid-torus curve is a line
of slope r/p in that frame, and the output is returned to the cable's own
meridian/longitude frame (the cabling annulus has slope pq there).

Both routes produce the same normalized words; the cross-check is part of
the acceptance suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import List, Optional, Tuple

from .merge import merge
from .multicurve import Component, Multicurve, component_from_curve, standardize
from .plane import PLCurve, pull_tight, word_from_curve
from .transforms import (
    FractionalShear,
    KeyCurve,
    apply_basis_change,
    f_pq,
    key_from_slope,
    lift_to_cover,
    shift_amount,
    vertical_sum,
)
from .words import LoopWord, WordError, normalize
from .letters import KIND_C, Letter


class CableParamError(ValueError):
    pass


@dataclass(frozen=True)
class CableParams:
    """Winding numbers (p, q) plus a framing choice (r, s) with ps - qr = -1."""

    p: int
    q: int
    r: int
    s: int

    def __post_init__(self) -> None:
        if self.p < 1:
            raise CableParamError("longitudinal winding p must be >= 1")
        if gcd(self.p, self.q) != 1:
            raise CableParamError(f"p = {self.p} and q = {self.q} are not coprime")
        if self.p * self.s - self.q * self.r != -1:
            raise CableParamError("framing must satisfy ps - qr = -1")

    @classmethod
    def default(cls, p: int, q: int) -> "CableParams":
        """Smallest 0 <= r < p with ps - qr = -1."""
        if p < 1:
            raise CableParamError("longitudinal winding p must be >= 1")
        if gcd(p, q) != 1:
            raise CableParamError(f"p = {p} and q = {q} are not coprime")
        if p == 1:
            return cls(1, q, 0, -1)
        r = pow(q % p, -1, p)
        s = (q * r - 1) // p
        return cls(p, q, r, s)


def cable_geometric(knot: Multicurve, p: int, q: int) -> Multicurve:
    """Cable by transforming the plane: lift to the p-cover, shear, rescale."""
    CableParams.default(p, q)
    comps: List[Component] = []
    gamma0 = 0
    for i, comp in enumerate(knot.components):
        if i == knot.gamma0:
            gamma0 = len(comps)
        for lifted in lift_to_cover(comp.curve, p):
            image = f_pq(lifted, p, q)
            comps.append(component_from_curve(image, comp.word.system))
    out = Multicurve(tuple(comps), gamma0, shift=shift_amount(p, q))
    return standardize(out)


def meridian_word(params: CableParams) -> LoopWord:
    """Staircase word of the solid-torus curve: slope r/p read column by column."""
    key = key_from_slope(params.r, params.p)
    return LoopWord(tuple(Letter(KIND_C, k, False) for k in key.column_word()))


def _frame_in(params: CableParams) -> Tuple[Tuple[int, int], Tuple[int, int]]:
    return ((-params.q, params.p), (params.s, -params.r))


def _frame_out(params: CableParams) -> Tuple[Tuple[int, int], Tuple[int, int]]:
    return ((0, 1), (-1, params.p * params.q))


def cable_merge(knot: Multicurve, p: int, q: int, params: Optional[CableParams] = None) -> Multicurve:
    """Cable by the word route: reframe, merge with the meridian, reframe back.

    The output words are produced by the grid merge; the vertical-sum
    reading of the same operation supplies exact positions, and the two are
    checked against each other on every component.
    """
    params = params or CableParams.default(p, q)
    if (params.p, params.q) != (p, q):
        raise CableParamError("params disagree with (p, q)")
    key = key_from_slope(params.r, params.p)
    gamma = meridian_word(params)
    frame_in = _frame_in(params)
    frame_out = _frame_out(params)

    comps: List[Component] = []
    gamma0 = 0
    for i, comp in enumerate(knot.components):
        reframed = pull_tight(apply_basis_change(comp.curve, frame_in))
        word_in = word_from_curve(reframed)
        grid_texts = sorted(_strip_system(w).text() for w in merge(gamma, word_in))
        if i == knot.gamma0:
            gamma0 = len(comps)
            images = [vertical_sum(reframed, key)]
        else:
            images = [vertical_sum(reframed.translated(j, 0), key) for j in range(p)]
        geo_texts = sorted(word_from_curve(pull_tight(image)).text() for image in images)
        if grid_texts != geo_texts:
            raise WordError("grid merge and vertical sum disagree; framing conventions corrupted")
        for image in images:
            back = pull_tight(apply_basis_change(image, frame_out))
            comps.append(component_from_curve(back, comp.word.system))
    out = Multicurve(tuple(comps), gamma0, shift=shift_amount(p, q))
    return standardize(out)


def _strip_system(word: LoopWord) -> LoopWord:
    return normalize(LoopWord(word.letters, None))


def torus_knot_curve(p: int, q: int) -> Multicurve:
    """The invariant of the (p, q) torus knot, as a cable of the unknot."""
    from .corpus import unknot

    return cable_geometric(unknot(), p, q)


@dataclass(frozen=True)
class Tiling:
    """Fundamental tile of the cabling tiling plus its translation lattice."""

    polygon: Tuple[Tuple[Fraction, Fraction], ...]
    translations: Tuple[Tuple[int, int], Tuple[int, int]]
    p: int
    q: int


def _drop_collinear(pts):
    out = []
    n = len(pts)
    for i, b in enumerate(pts):
        a, c = out[-1] if out else pts[i - 1], pts[(i + 1) % n]
        cross = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
        if cross != 0 or not out:
            out.append(b)
    # first point may itself be collinear with its final neighbors
    if len(out) > 2:
        a, b, c = out[-1], out[0], out[1]
        cross = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
        if cross == 0:
            out = out[1:]
    return tuple(out)


def tile(p: int, q: int) -> Tiling:
    """Image of p horizontally aligned unit tiles under the cabling map."""
    CableParams.default(p, q)
    corners = [
        (Fraction(0), Fraction(0)),
        (Fraction(p), Fraction(0)),
        (Fraction(p), Fraction(1)),
        (Fraction(0), Fraction(1)),
    ]
    boundary = PLCurve(tuple(corners), (0, 0))
    image = f_pq(boundary, p, q)
    return Tiling(_drop_collinear(image.points), ((1, 0), (0, p)), p, q)
