"""Deterministic SVG rendering of pegboard pictures.

Output is byte-stable: fixed element order, fixed 4-decimal serialization
of all coordinates (computed from exact rationals with half-up rounding),
no timestamps or generator metadata.  Curves are drawn as polylines
through their exact waypoints; local systems are drawn schematically as
parallel strands with connection chords along the carrying letter.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .cabling import Tiling, tile
from .multicurve import Multicurve
from .plane import PLCurve
from .transforms import f_pq, g_pq, lift_to_cover
from .words import tensor_local_system

VIEWS = ("cylinder", "plane", "tiling")

PALETTE = ("#1f6f8b", "#c84b31", "#5c8d57", "#7a4f8f", "#b9883d", "#4b6cb7")


@dataclass(frozen=True)
class RenderOptions:
    view: str = "cylinder"
    columns: int = 3
    scale: int = 40
    show_stages: bool = False

    def __post_init__(self) -> None:
        if self.view not in VIEWS:
            raise ValueError(f"view must be one of {VIEWS}")
        if self.columns < 1:
            raise ValueError("columns must be >= 1")
        if self.scale <= 0:
            raise ValueError("scale must be positive")


def _fmt(x: Fraction) -> str:
    """Fixed 4-decimal rendering with deterministic half-up rounding."""
    x = Fraction(x)
    scaled = x * 10000
    n = (scaled + Fraction(1, 2)).__floor__()
    sign = "-" if n < 0 else ""
    n = abs(n)
    whole, frac = divmod(n, 10000)
    return f"{sign}{whole}.{frac:04d}"


class _Canvas:
    def __init__(self, scale: int, x0: Fraction, x1: Fraction, y0: Fraction, y1: Fraction):
        self.scale = scale
        self.x0, self.y1 = x0, y1
        margin = Fraction(1, 2)
        self.width = _fmt((x1 - x0 + 2 * margin) * scale)
        self.height = _fmt((y1 - y0 + 2 * margin) * scale)
        self.ox = (Fraction(1, 2) - x0) * scale
        self.oy = (y1 + Fraction(1, 2)) * scale
        self.body: List[str] = []

    def pt(self, x: Fraction, y: Fraction) -> str:
        return f"{_fmt(self.ox + x * self.scale)},{_fmt(self.oy - y * self.scale)}"

    def polyline(self, pts: Sequence[Tuple[Fraction, Fraction]], color: str, width: str = "2") -> None:
        path = " ".join(self.pt(x, y) for x, y in pts)
        self.body.append(f'<polyline fill="none" stroke="{color}" stroke-width="{width}" points="{path}"/>')

    def circle(self, x: Fraction, y: Fraction, r: Fraction, fill: str) -> None:
        self.body.append(
            f'<circle cx="{_fmt(self.ox + x * self.scale)}" cy="{_fmt(self.oy - y * self.scale)}" '
            f'r="{_fmt(r * self.scale)}" fill="{fill}"/>'
        )

    def line(self, a, b, color: str, width: str = "1", dash: Optional[str] = None) -> None:
        extra = f' stroke-dasharray="{dash}"' if dash else ""
        self.body.append(
            f'<line x1="{_fmt(self.ox + a[0] * self.scale)}" y1="{_fmt(self.oy - a[1] * self.scale)}" '
            f'x2="{_fmt(self.ox + b[0] * self.scale)}" y2="{_fmt(self.oy - b[1] * self.scale)}" '
            f'stroke="{color}" stroke-width="{width}"{extra}/>'
        )

    def svg(self) -> bytes:
        head = (
            '<?xml version="1.0" encoding="UTF-8"?>\n'
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{self.width}" height="{self.height}">\n'
            '<rect width="100%" height="100%" fill="#fdfcf8"/>\n'
        )
        return (head + "\n".join(self.body) + "\n</svg>\n").encode("ascii")


def _curve_drawing_points(curve: PLCurve, copies: int) -> List[List[Tuple[Fraction, Fraction]]]:
    """Waypoint runs for ``copies`` deck translates (one run per translate)."""
    runs = []
    h, v = curve.period
    reps = copies if not curve.closed_in_plane else 1
    if curve.closed_in_plane:
        pts = list(curve.points) + [curve.points[0]]
        runs.append(pts)
    else:
        pts: List[Tuple[Fraction, Fraction]] = []
        for i in range(reps):
            pts.extend((x + i * h, y + i * v) for x, y in curve.points)
        pts.append((curve.points[0][0] + reps * h, curve.points[0][1] + reps * v))
        runs.append(pts)
    return runs


def _bbox(curvesets: List[List[Tuple[Fraction, Fraction]]]):
    xs = [x for run in curvesets for x, _ in run]
    ys = [y for run in curvesets for _, y in run]
    return (
        min(xs).__floor__(),
        max(xs).__ceil__(),
        min(ys).__floor__() - 1,
        max(ys).__ceil__() + 1,
    )


def _draw_pegs(canvas: _Canvas, x0: int, x1: int, y0: int, y1: int) -> None:
    for x in range(x0, x1 + 1):
        canvas.line((Fraction(x), Fraction(y0)), (Fraction(x), Fraction(y1)), "#d8d4c8", "1", "3,3")
    for x in range(x0, x1 + 1):
        for y in range(y0, y1 + 1):
            canvas.circle(Fraction(x), Fraction(y), Fraction(1, 12), "#3a3a3a")


def render_svg(mc: Multicurve, opts: RenderOptions = RenderOptions()) -> bytes:
    """Deterministic picture of a multicurve (cylinder or plane view)."""
    if opts.view == "tiling":
        raise ValueError("tiling view renders a tiling, use render_tiling")
    copies = 1 if opts.view == "cylinder" else opts.columns
    all_runs: List[List[Tuple[Fraction, Fraction]]] = []
    per_comp: List[List[List[Tuple[Fraction, Fraction]]]] = []
    for comp in mc.components:
        runs = _curve_drawing_points(comp.curve, copies)
        if comp.closed and opts.view == "plane":
            base = runs[0]
            runs = [[(x + i, y) for x, y in base] for i in range(copies)]
        per_comp.append(runs)
        all_runs.extend(runs)
    x0, x1, y0, y1 = _bbox(all_runs)
    canvas = _Canvas(opts.scale, Fraction(x0), Fraction(x1), Fraction(y0), Fraction(y1))
    _draw_pegs(canvas, x0, x1, y0, y1)
    for idx, runs in enumerate(per_comp):
        color = PALETTE[idx % len(PALETTE)]
        comp = mc.components[idx]
        track = tensor_local_system(comp.word)
        for run in runs:
            if track.dim == 1:
                canvas.polyline(run, color)
            else:
                for strand in range(track.dim):
                    off = Fraction(strand, 16)
                    canvas.polyline([(x, y + off) for x, y in run], color, "1")
                mid = run[len(run) // 2]
                for i, j in track.connections:
                    canvas.line(
                        (mid[0], mid[1] + Fraction(i, 16)),
                        (mid[0] + Fraction(1, 4), mid[1] + Fraction(j, 16)),
                        color,
                        "1",
                    )
    return canvas.svg()


def render_tiling(p: int, q: int, opts: RenderOptions = RenderOptions(view="tiling")) -> bytes:
    """The cabling tiling: the fundamental tile and its lattice translates."""
    t = tile(p, q)
    cols = opts.columns
    runs = []
    for i in range(cols):
        for j in range(-1, 2):
            dx, dy = t.translations[0][0] * i + t.translations[1][0] * j, t.translations[0][1] * i + t.translations[1][1] * j
            poly = [(x + dx, y + dy) for x, y in t.polygon]
            runs.append(poly + [poly[0]])
    x0, x1, y0, y1 = _bbox(runs)
    canvas = _Canvas(opts.scale, Fraction(x0), Fraction(x1), Fraction(y0), Fraction(y1))
    _draw_pegs(canvas, x0, x1, y0, y1)
    for k, run in enumerate(runs):
        canvas.polyline(run, PALETTE[k % len(PALETTE)])
    return canvas.svg()


def render_cable_stages(mc: Multicurve, p: int, q: int, opts: RenderOptions = RenderOptions()) -> bytes:
    """Three panels: the p-fold lift, the sheared picture, the final cable."""
    comp = mc.gamma0_component
    lifted = lift_to_cover(comp.curve, p)[0]
    sheared = g_pq(lifted, p, q)
    final = f_pq(lifted, p, q)
    runs = []
    offset = Fraction(0)
    for curve in (lifted, sheared, final):
        pts = list(curve.points) + [
            (curve.points[0][0] + curve.period[0], curve.points[0][1] + curve.period[1])
        ]
        span = max(x for x, _ in pts) - min(x for x, _ in pts)
        runs.append([(x + offset, y) for x, y in pts])
        offset += span + 2
    x0, x1, y0, y1 = _bbox(runs)
    canvas = _Canvas(opts.scale, Fraction(x0), Fraction(x1), Fraction(y0), Fraction(y1))
    _draw_pegs(canvas, x0, x1, y0, y1)
    for k, run in enumerate(runs):
        canvas.polyline(run, PALETTE[k % len(PALETTE)])
    return canvas.svg()
