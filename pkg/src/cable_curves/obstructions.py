"""Obstructions to a multicurve being the invariant of a nontrivial cable.

Three checks, all exact:

* closed components: a cable's plane-closed components arise from single
  translates of the companion picture, so each encloses only pegs whose
  heights agree modulo p;
* the distinguished component: a cable's gamma0 is the image of a p-fold
  lift under the cabling plane map.  The map is exactly invertible, so we
  apply the inverse for every candidate q (and every vertical translate
  mod p, since the picture is only pinned down up to centering) and test
  whether the preimage word is a p-fold repetition.  Finding such a q is a
  certificate; exhausting the bounded q-range is an obstruction;
* the first left arc: the image of the companion's first left arc clears
  the p - 1 staggered pegs between consecutive image heights, so its
  length bounds p from above by length + 1.  A horizontal distinguished
  curve gives no bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Dict, List, Optional, Tuple

from .invariants import gamma0_profile, left_arcs
from .multicurve import Component, Multicurve
from .plane import PLCurve, enclosed_pegs, pull_tight, reduce_crossings, wall_crossings, word_from_crossings
from .transforms import f_pq_inverse
from .words import LoopWord, WordError


@dataclass(frozen=True)
class ClosedComponentFinding:
    component: int
    pegs: Tuple[Tuple[int, int], ...]
    ok: bool


def closed_component_check(mc: Multicurve, p: int) -> List[ClosedComponentFinding]:
    """Enclosed-peg heights of every closed component, reduced mod p."""
    findings = []
    for idx, comp in enumerate(mc.components):
        if idx == mc.gamma0:
            continue
        pegs = tuple(enclosed_pegs(comp.curve))
        heights = {b % p for _, b in pegs}
        findings.append(ClosedComponentFinding(idx, pegs, len(heights) <= 1))
    return findings


def _oriented_gamma0(comp: Component) -> PLCurve:
    curve = comp.curve
    if curve.period == (-1, 0):
        return PLCurve(tuple(reversed(curve.points)), (1, 0))
    if curve.period != (1, 0):
        raise ValueError("cable obstructions need a standard distinguished component")
    return curve


def _is_repetition(letters: Tuple, copies: int) -> bool:
    n = len(letters)
    if n % copies != 0:
        return False
    shift = n // copies
    return all(letters[i] == letters[(i + shift) % n] for i in range(n))


def decable_gamma0(mc: Multicurve, p: int, q: int) -> Optional[LoopWord]:
    """Companion subword if gamma0 is the (p, q)-image of a lifted curve."""
    curve = _oriented_gamma0(mc.gamma0_component)
    for t in range(p):
        try:
            pre = f_pq_inverse(curve.translated(0, t), p, q)
            crossings = reduce_crossings(wall_crossings(pre), pre.period)
            word = word_from_crossings(crossings, pre.period)
        except (WordError, ValueError):
            continue
        if _is_repetition(word.letters, p):
            sub = word.letters[: len(word.letters) // p]
            return LoopWord(sub)
    return None


def candidate_slopes(mc: Multicurve, p: int) -> List[int]:
    """Bounded list of q worth trying against the cable's tau and epsilon.

    A genuine (p, q)-image satisfies the cabling formula for tau with a
    companion of matching epsilon, so q must make
    (tau - (p-1)(q -+ 1)/2) divisible by p, or tau must be exactly the
    torus-knot value (companion unknot).  Everything else is obstructed
    without touching the geometry.
    """
    from .invariants import epsilon, expected_cable_tau, tau

    prof = gamma0_profile(mc)
    span = int(max(abs(h) for h in prof.heights).__ceil__())
    bound = 2 * span + 2 * p + 3
    t, e = tau(mc), epsilon(mc)
    out = []
    for q in range(-bound, bound + 1):
        if gcd(p, q) != 1:
            continue
        num = 2 * t - (p - 1) * (q - e)
        if num % (2 * p) == 0:
            out.append(q)
        elif t == expected_cable_tau(0, 0, p, q):
            out.append(q)
    out.sort(key=lambda q: (abs(q), -q))
    return out


@dataclass(frozen=True)
class PassingFinding:
    ok: bool
    slope: Optional[int]  # q of the decabling certificate, if any
    companion_word: Optional[str]
    tried: int


def gamma0_passing_check(mc: Multicurve, p: int) -> PassingFinding:
    """Search for a (p, q)-decabling of the distinguished component."""
    if p == 1:
        return PassingFinding(True, None, None, 0)
    prof = gamma0_profile(mc)
    if len(prof.heights) == 1:
        # horizontal curve: it is the cable of the unknot for every q
        return PassingFinding(True, 1 if p == 1 else None, "e", 0)
    tried = 0
    for q in candidate_slopes(mc, p):
        tried += 1
        sub = decable_gamma0(mc, p, q)
        if sub is not None:
            from .words import normalize

            return PassingFinding(True, q, normalize(sub).text(), tried)
    return PassingFinding(False, None, None, tried)


def arc_length_bound(mc: Multicurve) -> Optional[int]:
    """Upper bound on p from the first left arc; None when unbounded."""
    arcs = left_arcs(mc)
    if not arcs:
        return None
    return arcs[0].length + 1


@dataclass(frozen=True)
class ObstructionVerdict:
    p: int
    possible: bool
    closed_ok: bool
    gamma0_ok: bool
    closed_findings: Tuple[ClosedComponentFinding, ...]
    passing: PassingFinding


@dataclass(frozen=True)
class ObstructionReport:
    """Per-p verdicts plus the first-left-arc bound.

    The checks are sound obstructions (a genuine cable always passes), not
    a complete cabling detector for arbitrary invariants.
    """

    verdicts: Tuple[ObstructionVerdict, ...]
    arc_bound: Optional[int]

    def verdict(self, p: int) -> ObstructionVerdict:
        for v in self.verdicts:
            if v.p == p:
                return v
        raise KeyError(p)

    def to_json_dict(self) -> Dict:
        return {
            "first_left_arc_p_max": self.arc_bound,
            "verdicts": [
                {
                    "p": v.p,
                    "possible": v.possible,
                    "closed_components_ok": v.closed_ok,
                    "gamma0_ok": v.gamma0_ok,
                    "witness_pegs": [
                        {"component": f.component, "pegs": [list(t) for t in f.pegs]}
                        for f in v.closed_findings
                        if not f.ok
                    ],
                    "decabling_slope": v.passing.slope,
                    "companion_word": v.passing.companion_word,
                }
                for v in self.verdicts
            ],
        }


def obstruction_report(mc: Multicurve, p_max: int = 5) -> ObstructionReport:
    verdicts = []
    for p in range(2, p_max + 1):
        closed = closed_component_check(mc, p)
        closed_ok = all(f.ok for f in closed)
        passing = gamma0_passing_check(mc, p)
        verdicts.append(
            ObstructionVerdict(
                p=p,
                possible=closed_ok and passing.ok,
                closed_ok=closed_ok,
                gamma0_ok=passing.ok,
                closed_findings=tuple(closed),
                passing=passing,
            )
        )
    return ObstructionReport(tuple(verdicts), arc_length_bound(mc))
