"""Exact piecewise-linear curves in the lattice-punctured plane.

The ambient space is the plane with a peg removed at every integer lattice
point.  A PLCurve is a cyclic waypoint list with exact rational
coordinates together with an integer deck period (h, v): the waypoint list
closes up after translation by (h, v).  Components that are closed in the
plane have period (0, 0); a knot's distinguished component has period
(1, 0) in the standard framing.

Homotopy is handled combinatorially.  The open unit edges of the integer
grid (vertical edges {m} x (n, n+1) and horizontal edges (m, m+1) x {n})
meet only at pegs, and every cell of the grid is a peg-free open square, so
the cyclic sequence of wall crossings determines the homotopy class of a
curve, and two crossings cancel exactly when they are consecutive
crossings of the same edge.  Pulling tight therefore means: extract the
crossing sequence, cancel adjacent inverse pairs (cyclically, respecting
the deck translation), and rebuild a canonical representative.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .letters import KIND_A, KIND_B, KIND_C, Letter
from .words import LoopWord, WordError, normalize

Point = Tuple[Fraction, Fraction]


class PegCollision(ValueError):
    """A curve touched a lattice point."""


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class PLCurve:
    points: Tuple[Point, ...]
    period: Tuple[int, int] = (0, 0)

    def __post_init__(self) -> None:
        if not self.points:
            raise ValueError("a curve needs at least one waypoint")

    @property
    def closed_in_plane(self) -> bool:
        return self.period == (0, 0)

    def segments(self) -> Iterable[Tuple[Point, Point]]:
        """Directed segments of one period, including the closing one."""
        pts = self.points
        for i in range(len(pts) - 1):
            yield pts[i], pts[i + 1]
        h, v = self.period
        yield pts[-1], (pts[0][0] + h, pts[0][1] + v)

    def translated(self, dx, dy) -> "PLCurve":
        dx, dy = _frac(dx), _frac(dy)
        return PLCurve(tuple((x + dx, y + dy) for x, y in self.points), self.period)

    def transformed(self, m11, m12, m21, m22) -> "PLCurve":
        """Image under the linear map [[m11, m12], [m21, m22]]."""
        a, b, c, d = _frac(m11), _frac(m12), _frac(m21), _frac(m22)
        pts = tuple((a * x + b * y, c * x + d * y) for x, y in self.points)
        h, v = self.period
        ph, pv = a * h + b * v, c * h + d * v
        if ph.denominator != 1 or pv.denominator != 1:
            raise ValueError("transform does not preserve the deck lattice")
        return PLCurve(pts, (int(ph), int(pv)))

    def repeated(self, k: int) -> "PLCurve":
        """Concatenate k deck translates into a single period."""
        if k < 1:
            raise ValueError("need k >= 1")
        if k == 1 or self.closed_in_plane:
            return self
        h, v = self.period
        pts: List[Point] = []
        for i in range(k):
            pts.extend((x + i * h, y + i * v) for x, y in self.points)
        return PLCurve(tuple(pts), (k * h, k * v))


# --- wall crossings ---------------------------------------------------------

# A crossing records the oriented passage through one open grid edge:
#   ("V", m, n, d): through {m} x (n, n+1), d = +1 rightward / -1 leftward
#   ("H", n, m, d): through (m, m+1) x {n}, d = +1 upward / -1 downward
Crossing = Tuple[str, int, int, int]


def _is_int(x: Fraction) -> bool:
    return x.denominator == 1


def _check_not_peg(p: Point) -> None:
    if _is_int(p[0]) and _is_int(p[1]):
        raise PegCollision(f"curve touches the peg at ({p[0]}, {p[1]})")


def _interior_lines(a: Fraction, b: Fraction) -> range:
    """Integers strictly between a and b (endpoints excluded)."""
    lo, hi = (a, b) if a <= b else (b, a)
    return range(lo.__floor__() + 1, hi.__ceil__())


def _refine(curve: PLCurve) -> List[Point]:
    """Waypoints of one period with a vertex at every wall contact."""
    out: List[Point] = []
    for p, q in curve.segments():
        _check_not_peg(p)
        out.append(p)
        dx, dy = q[0] - p[0], q[1] - p[1]
        ts = set()
        if dx != 0:
            for m in _interior_lines(p[0], q[0]):
                ts.add(Fraction(m - p[0], dx))
        if dy != 0:
            for n in _interior_lines(p[1], q[1]):
                ts.add(Fraction(n - p[1], dy))
        for t in sorted(ts):
            if 0 < t < 1:
                pt = (p[0] + t * dx, p[1] + t * dy)
                _check_not_peg(pt)
                out.append(pt)
    return out


def wall_crossings(curve: PLCurve) -> List[Crossing]:
    """Cyclic crossing sequence of one period, in traversal order.

    Runs of vertices along a wall are collapsed to a single transversal
    crossing (or to nothing for a tangency); the run must not slide past a
    peg, which exact arithmetic checks directly.
    """
    verts = _refine(curve)
    n = len(verts)
    h, v = curve.period

    def wall_kind(p: Point) -> int:
        # 0 off-wall, 1 on a vertical line, 2 on a horizontal line
        if _is_int(p[0]):
            return 1
        if _is_int(p[1]):
            return 2
        return 0

    kinds = [wall_kind(p) for p in verts]

    # start the walk at a run boundary so wall runs never wrap around it
    start = None
    for i in range(n):
        if kinds[i] == 0:
            start = i
            break
    if start is None:
        prev = (verts[-1][0] - h, verts[-1][1] - v)
        for i in range(n):
            p = verts[i]
            same = (kinds[i] == 1 and _is_int(prev[0]) and prev[0] == p[0]) or (
                kinds[i] == 2 and _is_int(prev[1]) and prev[1] == p[1]
            )
            if not same:
                start = i
                break
            prev = p
    if start is None:
        raise PegCollision("degenerate curve lying along a single wall")

    # one period of vertices beginning at the run boundary, plus neighbors
    ext: List[Point] = []
    for i in range(start - 1, start + n + 1):
        k, r = divmod(i, n)
        ext.append((verts[r][0] + k * h, verts[r][1] + k * v))

    crossings: List[Crossing] = []
    i = 1
    while i <= n:
        p = ext[i]
        kind = wall_kind(p)
        if kind == 0:
            i += 1
            continue
        axis = 0 if kind == 1 else 1  # coordinate pinned to the wall
        other = 1 - axis
        line_val = p[axis]
        j = i
        while j + 1 < len(ext) and ext[j + 1][axis] == line_val:
            j += 1
        cross_vals = [ext[k][other] for k in range(i, j + 1)]
        lo, hi = min(cross_vals), max(cross_vals)
        if lo.__floor__() != hi.__floor__():
            raise PegCollision(f"curve slides through a peg along a wall at {line_val}")
        before, after = ext[i - 1][axis], ext[j + 1][axis]
        s1 = (before > line_val) - (before < line_val)
        s2 = (after > line_val) - (after < line_val)
        if s1 == 0 or s2 == 0:
            raise PegCollision("wall run does not terminate transversally")
        if s1 != s2:
            cell = int(lo.__floor__())
            tag = "V" if axis == 0 else "H"
            crossings.append((tag, int(line_val), cell, s2))
        i = j + 1
    return crossings


def _shift_crossing(c: Crossing, h: int, v: int) -> Crossing:
    kind, line, cell, d = c
    if kind == "V":
        return ("V", line + h, cell + v, d)
    return ("H", line + v, cell + h, d)


def _edge(c: Crossing) -> Tuple[str, int, int]:
    return (c[0], c[1], c[2])


def reduce_crossings(crossings: List[Crossing], period: Tuple[int, int]) -> List[Crossing]:
    """Cancel adjacent passes through the same edge until reduced.

    The list describes one period of a deck-periodic bi-infinite sequence;
    the pair (last, first+period) is adjacent too.
    """
    stack: List[Crossing] = []
    for c in crossings:
        if stack and _edge(stack[-1]) == _edge(c):
            stack.pop()
        else:
            stack.append(c)
    h, v = period
    while len(stack) >= 2 and _edge(_shift_crossing(stack[0], h, v)) == _edge(stack[-1]):
        stack = stack[1:-1]
    return stack


# --- rebuilding a canonical tight representative ----------------------------


def _crossing_points(word: Sequence[Crossing]) -> List[Point]:
    per_edge: Dict[Tuple[str, int, int], int] = {}
    for c in word:
        per_edge[_edge(c)] = per_edge.get(_edge(c), 0) + 1
    seen: Dict[Tuple[str, int, int], int] = {}
    pts: List[Point] = []
    for c in word:
        e = _edge(c)
        k = seen.get(e, 0)
        seen[e] = k + 1
        t = Fraction(k + 1, per_edge[e] + 1)
        if c[0] == "V":
            pts.append((Fraction(c[1]), c[2] + t))
        else:
            pts.append((c[2] + t, Fraction(c[1])))
    return pts


def curve_from_crossings(word: Sequence[Crossing], period: Tuple[int, int]) -> PLCurve:
    if not word:
        raise WordError("crossing word is empty (nullhomotopic curve)")
    return PLCurve(tuple(_crossing_points(word)), period)


def pull_tight(curve: PLCurve) -> PLCurve:
    """Minimal-position representative of the homotopy class.

    Idempotent; raises WordError on nullhomotopic components (they carry no
    curve data).
    """
    reduced = reduce_crossings(wall_crossings(curve), curve.period)
    return curve_from_crossings(reduced, curve.period)


def is_tight(curve: PLCurve) -> bool:
    word = wall_crossings(curve)
    return reduce_crossings(word, curve.period) == word


# --- words <-> curves --------------------------------------------------------


def realize(word: LoopWord, anchor: Point = (Fraction(0), Fraction(1, 2))) -> PLCurve:
    """Draw a word as an exact PL curve, first junction at ``anchor``.

    The anchor must sit on a vertical lattice line but not on a peg; hook
    detours use distinct widths per letter so that overlapping hooks stay
    honestly immersed.
    """
    x0, y0 = _frac(anchor[0]), _frac(anchor[1])
    if not _is_int(x0) or _is_int(y0):
        raise ValueError("anchor must lie on a vertical lattice line, away from pegs")
    pts: List[Point] = []
    x, y = x0, y0
    count = len(word.letters)
    for i, letter in enumerate(word.letters):
        pts.append((x, y))
        delta = Fraction(i + 1, count + 1)
        if letter.kind == KIND_A:
            pts.append((x + delta, y))
            pts.append((x + delta, y + letter.index))
            y += letter.index
        elif letter.kind == KIND_B:
            pts.append((x - delta, y))
            pts.append((x - delta, y + letter.index))
            y += letter.index
        else:
            x += letter.dx
            y += letter.dy
    return PLCurve(tuple(pts), (word.dx, word.dy))


def word_from_crossings(word: Sequence[Crossing], period: Tuple[int, int]) -> LoopWord:
    crossings = list(word)
    if not crossings:
        raise WordError("no crossings: curve carries no word")
    vs = [i for i, c in enumerate(crossings) if c[0] == "V"]
    if not vs:
        raise WordError("curve never crosses a vertical lattice line")
    h, v = period
    letters: List[Letter] = []
    for a, b in zip(vs, vs[1:] + [vs[0] + len(crossings)]):
        wrap = b >= len(crossings)
        start = crossings[a]
        end = crossings[b % len(crossings)]
        if wrap:
            end = _shift_crossing(end, h, v)
        rise = 0
        for k in range(a + 1, b):
            c = crossings[k % len(crossings)]
            if wrap and k >= len(crossings):
                c = _shift_crossing(c, h, v)
            if c[0] == "H":
                rise += c[3]
        m1, m2 = start[1], end[1]
        if m2 == m1:
            if rise == 0:
                raise WordError("curve is not reduced: zero-height return arc")
            kind = KIND_A if start[3] > 0 else KIND_B
            letters.append(Letter(kind, rise))
        elif m2 == m1 + start[3]:
            letters.append(Letter(KIND_C, rise, start[3] < 0))
        else:
            raise WordError("inconsistent strip transition in crossing word")
    return LoopWord(tuple(letters), None)


def word_from_curve(curve: PLCurve, tighten: bool = False) -> LoopWord:
    """Read the cyclic word off a curve in minimal position.

    With ``tighten=False`` the curve must already be reduced; otherwise a
    WordError reports the leftover detour.
    """
    crossings = wall_crossings(curve)
    reduced = reduce_crossings(crossings, curve.period)
    if not tighten and reduced != crossings:
        raise WordError("curve is not pulled tight; reduce it first")
    return normalize(word_from_crossings(reduced, curve.period))


# --- windings ---------------------------------------------------------------


def winding_number(curve: PLCurve, peg: Tuple[int, int]) -> int:
    """Winding of a plane-closed curve around a peg (signed ray count)."""
    if not curve.closed_in_plane:
        raise ValueError("winding numbers need a plane-closed component")
    a, b = peg
    total = 0
    for c in reduce_crossings(wall_crossings(curve), curve.period):
        if c[0] == "V" and c[1] == a and c[2] >= b:
            total += c[3]
    return total


def enclosed_pegs(curve: PLCurve) -> List[Tuple[int, int]]:
    """Pegs with nonzero winding number, for a plane-closed component."""
    reduced = reduce_crossings(wall_crossings(curve), curve.period)
    xs = [c[1] for c in reduced if c[0] == "V"] + [c[2] for c in reduced if c[0] == "H"]
    ys = [c[2] for c in reduced if c[0] == "V"] + [c[1] for c in reduced if c[0] == "H"]
    if not xs or not ys:
        return []
    out = []
    for a in range(min(xs) - 1, max(xs) + 2):
        per_line = [c for c in reduced if c[0] == "V" and c[1] == a]
        for b in range(min(ys) - 1, max(ys) + 2):
            w = sum(c[3] for c in per_line if c[2] >= b)
            if w != 0:
                out.append((a, b))
    return out
