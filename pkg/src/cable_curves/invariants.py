"""Concordance and L-space invariants read off a multicurve.

Everything is extracted from the axis-crossing profile of the
distinguished component: traverse it rightward starting on the segment
that wraps the cylinder (through x = 1/2); the crossings of the vertical
axis then have canonical half-integer heights.  The first crossing gives
tau (the integer strictly below it) and epsilon (the direction the curve
turns there, 0 when it runs straight on).  Left arcs between consecutive
crossings are counted by length with signs (downward arcs positive) and
refined by the direction the curve turns at the top and bottom ends, '+'
for upward.  The Alexander polynomial is the signed crossing count of the
whole multicurve by discrete height, with plane-closed components oriented
so their top crossing counts negatively.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Dict, List, Optional, Tuple

from .multicurve import Component, Multicurve, axis_heights
from .plane import wall_crossings

ARC_TYPES = ("++", "+-", "-+", "--")


# --- Laurent polynomials -----------------------------------------------------


@dataclass(frozen=True)
class Laurent:
    """Laurent polynomial with integer coefficients, keyed by exponent."""

    coeffs: Tuple[Tuple[int, int], ...]  # sorted (exponent, coefficient)

    @classmethod
    def from_dict(cls, d: Dict[int, int]) -> "Laurent":
        return cls(tuple(sorted((e, c) for e, c in d.items() if c != 0)))

    @classmethod
    def one(cls) -> "Laurent":
        return cls(((0, 1),))

    def as_dict(self) -> Dict[int, int]:
        return dict(self.coeffs)

    def __mul__(self, other: "Laurent") -> "Laurent":
        out: Dict[int, int] = {}
        for e1, c1 in self.coeffs:
            for e2, c2 in other.coeffs:
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return Laurent.from_dict(out)

    def __neg__(self) -> "Laurent":
        return Laurent(tuple((e, -c) for e, c in self.coeffs))

    def substitute_power(self, p: int) -> "Laurent":
        """t -> t^p."""
        return Laurent(tuple((e * p, c) for e, c in self.coeffs))

    def evaluate_at_one(self) -> int:
        return sum(c for _, c in self.coeffs)

    def is_symmetric(self) -> bool:
        d = self.as_dict()
        return all(d.get(-e, 0) == c for e, c in d.items())

    def text(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for e, c in sorted(self.coeffs, reverse=True):
            term = "t" if e == 1 else "t^-1" if e == -1 else f"t^{e}" if e else ""
            mag = "" if abs(c) == 1 and term else str(abs(c))
            parts.append(("-" if c < 0 else "+") + (mag + term if term else str(abs(c))))
        head = parts[0][1:] if parts[0][0] == "+" else parts[0]
        return head + "".join(f" {p[0]} {p[1:]}" for p in parts[1:])

    def __str__(self) -> str:  # pragma: no cover
        return self.text()


# --- gamma0 profile -----------------------------------------------------------


@dataclass(frozen=True)
class AxisProfile:
    """Crossing heights and sides of the distinguished component.

    ``heights[i]`` is the i-th axis crossing after the wrap segment; the
    matching entry of ``sides`` says which side of the axis the following
    arc occupies ('R' or 'L'), with the final arc being the wrap itself.
    The traversal is oriented rightward through x = 1/2.
    """

    heights: Tuple[Fraction, ...]
    sides: Tuple[str, ...]

    @property
    def wrap_rise(self) -> Fraction:
        return self.heights[0] - self.heights[-1]


def gamma0_profile(mc: Multicurve) -> AxisProfile:
    comp = mc.gamma0_component
    curve = comp.curve
    if curve.period == (-1, 0):
        from .plane import PLCurve

        curve = PLCurve(tuple(reversed(curve.points)), (1, 0))
    elif curve.period != (1, 0):
        raise ValueError("invariants need a standard distinguished component")
    vs = [c for c in wall_crossings(curve) if c[0] == "V"]
    n = len(vs)
    lines = [c[1] for c in vs] + [vs[0][1] + 1]
    wrap = None
    for i in range(n):
        if lines[i + 1] != lines[i]:
            if wrap is not None:
                raise ValueError("distinguished component wraps more than once")
            wrap = i
    if wrap is None:
        raise ValueError("distinguished component never wraps")
    ordered = vs[wrap + 1 :] + vs[: wrap + 1]
    heights = tuple(c[2] + Fraction(1, 2) for c in ordered)
    sides = tuple("R" if c[3] > 0 else "L" for c in ordered)
    if sides[-1] != "R":
        raise ValueError("wrap segment is not oriented rightward")
    return AxisProfile(heights, sides)


def tau(mc: Multicurve) -> int:
    prof = gamma0_profile(mc)
    return int(prof.heights[0].__floor__())


def epsilon(mc: Multicurve) -> int:
    prof = gamma0_profile(mc)
    if len(prof.heights) == 1:
        return 0
    return 1 if prof.heights[1] < prof.heights[0] else -1


def axis_crossings(mc: Multicurve) -> List[Tuple[Fraction, str]]:
    """Crossing heights with the turning behavior after each crossing."""
    prof = gamma0_profile(mc)
    n = len(prof.heights)
    out = []
    for i, h in enumerate(prof.heights):
        if i == n - 1:
            out.append((h, "straight"))
        else:
            out.append((h, "down" if prof.heights[i + 1] < h else "up"))
    return out


# --- left arcs and phi ---------------------------------------------------------


@dataclass(frozen=True)
class LeftArc:
    top: Fraction
    bottom: Fraction
    sign: int  # +1 for downward traversal
    kind: str  # one of ARC_TYPES; first char = behavior at the top end

    @property
    def length(self) -> int:
        return int(self.top - self.bottom)


def left_arcs(mc: Multicurve) -> List[LeftArc]:
    prof = gamma0_profile(mc)
    hs = prof.heights
    n = len(hs)
    if n == 1:
        return []
    arcs: List[LeftArc] = []

    def beyond(i_from: int, i_to: int) -> int:
        # direction of the curve leaving height hs[i_from % n] along the arc
        # toward hs[i_to % n]; flat wraps count as upward
        d = hs[i_to % n] - hs[i_from % n]
        return 1 if d >= 0 else -1

    for i in range(n - 1):  # arc i runs hs[i] -> hs[i+1]; arc n-1 is the wrap
        if prof.sides[i] != "L":
            continue
        a, b = hs[i], hs[i + 1]
        dir_entry = beyond(i, i - 1)  # away from the arc at its start
        dir_exit = beyond(i + 1, i + 2)  # away from the arc at its end
        if a > b:
            top, bottom = a, b
            t_top, t_bottom = dir_entry, dir_exit
            sign = 1
        else:
            top, bottom = b, a
            t_top, t_bottom = dir_exit, dir_entry
            sign = -1
        kind = ("+" if t_top > 0 else "-") + ("+" if t_bottom > 0 else "-")
        arcs.append(LeftArc(top, bottom, sign, kind))
    return arcs


def phi_refined(mc: Multicurve) -> Dict[Tuple[int, str], int]:
    """Signed refined counts keyed by (length, end-type)."""
    out: Dict[Tuple[int, str], int] = {}
    for arc in left_arcs(mc):
        key = (arc.length, arc.kind)
        out[key] = out.get(key, 0) + arc.sign
    return {k: v for k, v in out.items() if v != 0}


def phi_table(mc: Multicurve) -> Dict[Tuple[int, str], int]:
    """Refined arc-count table; alias for phi_refined."""
    return phi_refined(mc)


def phi_total(mc: Multicurve) -> Dict[int, int]:
    out: Dict[int, int] = {}
    for (length, _), v in phi_refined(mc).items():
        out[length] = out.get(length, 0) + v
    return {k: v for k, v in out.items() if v != 0}


# --- Alexander polynomial ------------------------------------------------------


def _component_signed_counts(comp: Component, flip_rule: bool) -> Dict[int, int]:
    crossings = [c for c in wall_crossings(comp.curve) if c[0] == "V"]
    if not crossings:
        return {}
    contributions = [(c[2], c[3]) for c in crossings]
    if flip_rule:
        top = max(cell for cell, _ in contributions)
        first_top_sign = next(d for cell, d in contributions if cell == top)
        if first_top_sign > 0:
            contributions = [(cell, -d) for cell, d in contributions]
    out: Dict[int, int] = {}
    for cell, d in contributions:
        out[cell] = out.get(cell, 0) + d
    return out


def alexander(mc: Multicurve) -> Laurent:
    """Signed axis-crossing count by discrete height, normalized to 1 at t=1.

    The distinguished component is oriented rightward; plane-closed
    components are oriented so that their top crossing counts negatively.
    """
    prof = gamma0_profile(mc)
    total: Dict[int, int] = {}
    for i, h in enumerate(prof.heights):
        d = 1 if prof.sides[i] == "R" else -1
        cell = int(h.__floor__())
        total[cell] = total.get(cell, 0) + d
    for comp in mc.closed_components():
        for cell, c in _component_signed_counts(comp, flip_rule=True).items():
            total[cell] = total.get(cell, 0) + c
    poly = Laurent.from_dict(total)
    if poly.evaluate_at_one() != 1:
        raise ValueError("Alexander normalization failed; curve data inconsistent")
    return poly


# --- L-space detection ----------------------------------------------------------


def detect_lspace(mc: Multicurve) -> Optional[int]:
    """Seifert genus when the multicurve has L-space shape, else None.

    The shape: a single component with trivial local system whose axis
    crossings descend strictly; the wrap then rises by twice the genus.
    """
    if len(mc.components) != 1:
        return None
    comp = mc.gamma0_component
    if comp.word.system is not None and not comp.word.system.matrix.is_identity():
        return None
    prof = gamma0_profile(mc)
    hs = prof.heights
    for a, b in zip(hs, hs[1:]):
        if b >= a:
            return None
    rise = hs[0] - hs[-1]
    if rise % 2 != 0:
        return None
    return int(rise) // 2


@dataclass(frozen=True)
class LspaceCableReport:
    genus: int
    formula_verdict: bool
    direct_verdict: bool
    boundary_case: bool

    @property
    def agree(self) -> bool:
        return self.formula_verdict == self.direct_verdict


def lspace_formula_verdict(genus: int, p: int, q: int) -> bool:
    """Does the (p, q)-cable of an L-space knot of this genus admit a
    positive L-space surgery?

    For q > 0 this is the slope comparison q/p >= 2g - 1.  A p = 1 cable
    is the knot itself, and for q < 0 (p >= 2) the cable admits a positive
    L-space surgery only when it is unknotted, i.e. g = 0 and |q| = 1.
    """
    if p == 1:
        return True
    if q > 0:
        return q >= p * (2 * genus - 1)
    return genus == 0 and abs(q) == 1


def lspace_cable_check(mc: Multicurve, p: int, q: int) -> LspaceCableReport:
    from .cabling import cable_geometric

    genus = detect_lspace(mc)
    if genus is None:
        raise ValueError("companion curve does not have L-space shape")
    formula = lspace_formula_verdict(genus, p, q)
    direct = detect_lspace(cable_geometric(mc, p, q)) is not None
    boundary = q > 0 and q == p * (2 * genus - 1)
    return LspaceCableReport(genus, formula, direct, boundary)


# --- cabling formula verification ----------------------------------------------


@dataclass(frozen=True)
class FormulaCheck:
    name: str
    expected: object
    computed: object

    @property
    def ok(self) -> bool:
        return self.expected == self.computed


@dataclass(frozen=True)
class CablingVerification:
    checks: Tuple[FormulaCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self) -> List[FormulaCheck]:
        return [c for c in self.checks if not c.ok]


def expected_cable_tau(tau_k: int, eps_k: int, p: int, q: int) -> int:
    if eps_k == 1:
        return p * tau_k + (p - 1) * (q - 1) // 2
    if eps_k == -1:
        return p * tau_k + (p - 1) * (q + 1) // 2
    if abs(q) <= 1:
        return 0
    sign = 1 if q > 0 else -1
    return sign * (p - 1) * (abs(q) - 1) // 2


def expected_cable_epsilon(eps_k: int, p: int, q: int) -> int:
    if eps_k != 0:
        return eps_k
    if abs(q) <= 1 or p == 1:
        return 0
    return 1 if q > 1 else -1


def verify_cabling_formulas(mc: Multicurve, p: int, q: int, cable: Optional[Multicurve] = None) -> CablingVerification:
    """Check the tau / epsilon closed forms, and for (2, 1) the phi transfer.

    The identities are evaluated on an actually cabled curve; failures are
    reported entries, not exceptions.
    """
    from .cabling import cable_geometric

    if cable is None:
        cable = cable_geometric(mc, p, q)
    tau_k, eps_k = tau(mc), epsilon(mc)
    checks: List[FormulaCheck] = [
        FormulaCheck("tau", expected_cable_tau(tau_k, eps_k, p, q), tau(cable)),
        FormulaCheck("epsilon", expected_cable_epsilon(eps_k, p, q), epsilon(cable)),
    ]
    if (p, q) == (2, 1):
        phi_k = phi_refined(mc)
        phi_c = phi_refined(cable)
        max_len = max([l for l, _ in phi_k] + [l for l, _ in phi_c] + [1])
        for i in range(2, 2 * max_len + 2):
            for kind in ARC_TYPES:
                if i % 2 == 0:
                    expected = phi_k.get((i // 2, kind), 0) if kind in ("++", "--") else 0
                elif kind == "+-":
                    expected = phi_k.get(((i - 1) // 2, "+-"), 0)
                elif kind == "-+":
                    expected = phi_k.get(((i + 1) // 2, "-+"), 0)
                else:
                    expected = 0
                checks.append(
                    FormulaCheck(f"phi_{i}^{kind}", expected, phi_c.get((i, kind), 0))
                )
        phi1_expected = -sum(phi_total(mc).values()) + (1 if tau_k > 0 else 0)
        phi1 = sum(phi_c.get((1, kind), 0) for kind in ARC_TYPES)
        checks.append(FormulaCheck("phi_1", phi1_expected, phi1))
    return CablingVerification(tuple(checks))


# --- report ---------------------------------------------------------------------


@dataclass(frozen=True)
class InvariantReport:
    tau: int
    epsilon: int
    phi: Dict[int, int]
    phi_refined: Dict[Tuple[int, str], int]
    lspace: bool
    genus: Optional[int]
    alexander: Laurent

    def to_json_dict(self) -> Dict:
        return {
            "tau": self.tau,
            "epsilon": self.epsilon,
            "phi": {str(k): v for k, v in sorted(self.phi.items())},
            "phi_refined": {f"{l},{kind}": v for (l, kind), v in sorted(self.phi_refined.items())},
            "lspace": self.lspace,
            "genus": self.genus,
            "alexander": {str(e): c for e, c in self.alexander.coeffs},
            "alexander_text": self.alexander.text(),
        }


def invariant_report(mc: Multicurve) -> InvariantReport:
    genus = detect_lspace(mc)
    return InvariantReport(
        tau=tau(mc),
        epsilon=epsilon(mc),
        phi=phi_total(mc),
        phi_refined=phi_refined(mc),
        lspace=genus is not None,
        genus=genus,
        alexander=alexander(mc),
    )
