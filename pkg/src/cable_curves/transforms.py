"""Plane transformations acting on pegboard curves.

Three families of exact maps cover everything needed for cabling:

* integral basis changes (compositions of plane shears),
* vertical sums against a key curve: translate each vertical line so the
  horizontal axis lands on a piecewise-linear staircase through pegs,
* fractional plane shears along lines of rational slope q/p, which slide
  every peg column leftward onto the nearest vertical line x = np.

The fractional shear is realized as an honest homeomorphism: every line of
slope q/p translates rigidly along itself by an amount that interpolates,
between consecutive peg-bearing lines, the displacement sending the column
x = m to x = p*floor(m/p).  Columns never collide because p and q are
coprime, and the map is affine on each strip between peg-bearing lines, so
mapping subdivided waypoints is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import List, Sequence, Tuple

from .plane import PLCurve, Point, _frac, _is_int


@dataclass(frozen=True)
class KeyCurve:
    """PL staircase through pegs: height over each integer column.

    ``heights[i]`` is the peg height over column ``x = i`` for
    0 <= i < len(heights); the staircase continues periodically, rising by
    ``rise`` every ``len(heights)`` columns.
    """

    heights: Tuple[int, ...]
    rise: int

    @property
    def width(self) -> int:
        return len(self.heights)

    def height_at_column(self, i: int) -> int:
        k, r = divmod(i, self.width)
        return self.heights[r] + k * self.rise

    def value(self, x: Fraction) -> Fraction:
        x = _frac(x)
        i = x.__floor__()
        lo = self.height_at_column(i)
        hi = self.height_at_column(i + 1)
        return lo + (x - i) * (hi - lo)

    def column_word(self) -> List[int]:
        """Per-column height increments (the c-letter indices of the key)."""
        return [self.height_at_column(i + 1) - self.height_at_column(i) for i in range(self.width)]


def key_from_slope(num: int, den: int, ceil: bool = False) -> KeyCurve:
    """Floor (or ceiling) staircase of the line y = (num/den) x.

    >>> key_from_slope(1, 2).column_word()
    [0, 1]
    >>> key_from_slope(1, 2).heights
    (0, 0)
    """
    if den < 1:
        raise ValueError("slope denominator must be positive")
    heights = []
    for i in range(den):
        val = Fraction(num * i, den)
        heights.append(int(-((-val).__floor__()) if ceil else val.__floor__()))
    return KeyCurve(tuple(heights), num)


def key_from_curve(curve: PLCurve, ceil: bool = False) -> KeyCurve:
    """Staircase of pegs immediately below (above) a graph-like curve."""
    h, v = curve.period
    if h == 0:
        raise ValueError("key curves need a horizontally periodic graph")
    if h < 0:
        return key_from_curve(
            PLCurve(tuple(reversed(curve.points)), (-h, -v)), ceil=ceil
        )
    heights = {}
    for p, q in curve.segments():
        x0, y0 = p
        x1, y1 = q
        if x1 == x0:
            continue
        if x1 < x0:
            raise ValueError("curve is not a graph over the horizontal direction")
        m = x0.__ceil__()
        while m <= x1:
            y = y0 + (m - x0) * (y1 - y0) / (x1 - x0)
            col = m % h
            val = int(-((-y).__floor__())) if ceil else int(y.__floor__())
            prev = heights.get(col)
            adjusted = val - (m - col) // h * v
            if prev is not None and prev != adjusted:
                raise ValueError("curve is not single-valued over some column")
            heights[col] = adjusted
            m += 1
    if len(heights) != h:
        raise ValueError("curve does not cross every column")
    return KeyCurve(tuple(heights[i] for i in range(h)), v)


def floor_key(source, den: int = None) -> KeyCurve:
    """Floor staircase of a slope (num, den) or of a graph-like curve."""
    if isinstance(source, PLCurve):
        return key_from_curve(source, ceil=False)
    return key_from_slope(source, den, ceil=False)


def ceil_key(source, den: int = None) -> KeyCurve:
    """Ceiling staircase of a slope (num, den) or of a graph-like curve."""
    if isinstance(source, PLCurve):
        return key_from_curve(source, ceil=True)
    return key_from_slope(source, den, ceil=True)


def vertical_sum(curve: PLCurve, key: KeyCurve) -> PLCurve:
    """Translate along vertical lines, carrying the axis onto the key.

    The input's horizontal period is extended to a multiple of the key's
    width first, so the image is again deck-periodic.
    """
    h, _ = curve.period
    if h != 0:
        factor = key.width // gcd(abs(h), key.width)
        curve = curve.repeated(factor)
    h, v = curve.period
    pts: List[Point] = []
    for p, q in curve.segments():
        seg = _split_at_integer_x(p, q)
        pts.extend(seg[:-1])
    pts = [(x, y + key.value(x)) for x, y in _dedupe(pts)]
    rise = key.height_at_column(h) - key.height_at_column(0) if h else 0
    return PLCurve(tuple(pts), (h, v + rise))


def _split_at_integer_x(p: Point, q: Point) -> List[Point]:
    out = [p]
    dx, dy = q[0] - p[0], q[1] - p[1]
    if dx != 0:
        lo, hi = sorted((p[0], q[0]))
        m = lo.__ceil__()
        cuts = []
        while m < hi:
            if m != lo:
                cuts.append(Fraction(m - p[0], dx))
            m += 1
        for t in sorted(cuts):
            out.append((p[0] + t * dx, p[1] + t * dy))
    out.append(q)
    return out


def _dedupe(pts: Sequence[Point]) -> List[Point]:
    out: List[Point] = []
    for p in pts:
        if not out or out[-1] != p:
            out.append(p)
    return out


def lift_to_cover(curve: PLCurve, p: int) -> List[PLCurve]:
    """Lift to the p-fold horizontal cover.

    A horizontally periodic component lifts to one curve running through p
    consecutive translates; a plane-closed component lifts to p disjoint
    translates.
    """
    if p < 1:
        raise ValueError("cover degree must be >= 1")
    if curve.closed_in_plane:
        return [curve.translated(i, 0) for i in range(p)]
    return [curve.repeated(p)]


# --- fractional plane shear ---------------------------------------------------


@dataclass(frozen=True)
class FractionalShear:
    """Slide pegs leftward along slope q/p onto the lines x = np."""

    p: int
    q: int
    inverse: bool = False

    def __post_init__(self) -> None:
        if self.p < 1:
            raise ValueError("p must be >= 1")
        if gcd(self.p, self.q) != 1:
            raise ValueError("p and q must be coprime")

    def _qinv(self) -> int:
        return pow(self.q % self.p, -1, self.p) if self.p > 1 else 0

    def _k(self, w: int) -> Fraction:
        """Displacement (in units of the vector (p, q)) on the peg line w."""
        if self.p == 1:
            return Fraction(0)
        j = (self._qinv() * w) % self.p
        return Fraction(-j, self.p)

    def apply_point(self, pt: Point) -> Point:
        x, y = pt
        w = self.q * x - self.p * y
        i = w.__floor__()
        k0, k1 = self._k(i), self._k(i + 1)
        k = k0 + (w - i) * (k1 - k0)
        if self.inverse:
            k = -k
        return (x + k * self.p, y + k * self.q)

    def apply(self, curve: PLCurve) -> PLCurve:
        h, v = curve.period
        if (self.q * h - self.p * v) % self.p != 0:
            raise ValueError("deck period is incompatible with the shear strips")
        pts: List[Point] = []
        for a, b in curve.segments():
            seg = self._split(a, b)
            pts.extend(seg[:-1])
        out = [self.apply_point(pt) for pt in _dedupe(pts)]
        return PLCurve(tuple(out), (h, v))

    def _split(self, a: Point, b: Point) -> List[Point]:
        wa = self.q * a[0] - self.p * a[1]
        wb = self.q * b[0] - self.p * b[1]
        out = [a]
        if wa != wb:
            lo, hi = sorted((wa, wb))
            m = lo.__ceil__()
            cuts = []
            while m < hi:
                if m != lo:
                    cuts.append(Fraction(m - wa, wb - wa))
                m += 1
            dx, dy = b[0] - a[0], b[1] - a[1]
            for t in sorted(cuts):
                out.append((a[0] + t * dx, a[1] + t * dy))
        out.append(b)
        return out


def g_pq(curve: PLCurve, p: int, q: int) -> PLCurve:
    """The peg-sliding shear; takes the lattice onto pZ x (1/p)Z."""
    return FractionalShear(p, q).apply(curve)


def shift_amount(p: int, q: int) -> Fraction:
    return Fraction((p - 1) * (q - 1), 2)


def f_pq(curve: PLCurve, p: int, q: int) -> PLCurve:
    """Full cabling transformation on a curve drawn in the p-fold cover.

    Composition of the fractional shear with vertical stretch / horizontal
    compression by p and the standard vertical shift; maps pegs to pegs.
    """
    h, _ = curve.period
    if h % p != 0:
        raise ValueError("curve must be given in the p-fold cover")
    sheared = g_pq(curve, p, q)
    pts = tuple((x / p, y * p) for x, y in sheared.points)
    ph, pv = sheared.period
    scaled = PLCurve(pts, (ph // p, pv * p))
    return scaled.translated(0, shift_amount(p, q))


def f_pq_inverse(curve: PLCurve, p: int, q: int) -> PLCurve:
    """Exact inverse of f_pq (the preimage lives in the p-fold cover)."""
    h, v = curve.period
    if v % p != 0:
        raise ValueError("vertical period is incompatible with the cover")
    shifted = curve.translated(0, -shift_amount(p, q))
    pts = tuple((x * p, y / p) for x, y in shifted.points)
    unscaled = PLCurve(pts, (h * p, v // p))
    return FractionalShear(p, q, inverse=True).apply(unscaled)


def apply_basis_change(curve: PLCurve, matrix: Sequence[Sequence[int]]) -> PLCurve:
    """Image under an integral matrix of determinant +-1."""
    (a, b), (c, d) = matrix
    if abs(a * d - b * c) != 1:
        raise ValueError("basis change must have determinant +-1")
    return curve.transformed(a, b, c, d)
