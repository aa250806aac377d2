"""The acceptance suite: every headline property, run end to end.

Each criterion returns (name, ok, detail); run_all prints one line per
criterion and reports overall success.  The same checks back the pytest
acceptance module and the ``verify-all`` CLI subcommand.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple

from .cabling import CableParams, cable_geometric, cable_merge, torus_knot_curve
from .corpus import (
    corpus,
    figure_eight_like,
    iterated_cable,
    left_trefoil,
    right_trefoil,
    synthetic_noncable,
    unknot,
)
from .invariants import (
    alexander,
    detect_lspace,
    epsilon,
    expected_cable_epsilon,
    expected_cable_tau,
    lspace_cable_check,
    phi_refined,
    phi_total,
    tau,
    verify_cabling_formulas,
    Laurent,
)
from .letters import KIND_A, KIND_B, KIND_C, Letter, sides_compatible
from .merge import merge
from .multicurve import Multicurve, from_words, word_sets_equal
from .obstructions import (
    arc_length_bound,
    closed_component_check,
    gamma0_passing_check,
    obstruction_report,
)
from .plane import pull_tight, realize, word_from_curve, PLCurve
from .transforms import key_from_curve, vertical_sum
from .words import LoopWord, normalize, parse_word, validate

GRID: Tuple[Tuple[int, int], ...] = ((2, 1), (2, -1), (2, 3), (3, 2), (3, 4), (3, -2), (5, 2))

Criterion = Tuple[str, bool, str]


def _corpus_for_grid() -> Dict[str, Multicurve]:
    names = ("unknot", "right-trefoil", "left-trefoil", "figure-eight-like", "synthetic-noncable")
    full = corpus()
    return {n: full[n] for n in names}


def criterion_route_equivalence() -> Criterion:
    bad = []
    for name, mc in _corpus_for_grid().items():
        for p, q in GRID:
            if not word_sets_equal(cable_geometric(mc, p, q), cable_merge(mc, p, q)):
                bad.append(f"{name}({p},{q})")
    return (
        "route equivalence (geometric vs merge, corpus x grid)",
        not bad,
        "all equal" if not bad else "mismatch at " + ", ".join(bad),
    )


def criterion_tau_epsilon() -> Criterion:
    bad = []
    for name, mc in _corpus_for_grid().items():
        t_k, e_k = tau(mc), epsilon(mc)
        for p, q in GRID:
            cable = cable_geometric(mc, p, q)
            if tau(cable) != expected_cable_tau(t_k, e_k, p, q):
                bad.append(f"tau {name}({p},{q})")
            if epsilon(cable) != expected_cable_epsilon(e_k, p, q):
                bad.append(f"eps {name}({p},{q})")
    # torus-knot closed form: sign(q) (p-1)(|q|-1)/2
    for p, q in GRID:
        want = 0 if abs(q) <= 1 else (1 if q > 0 else -1) * (p - 1) * (abs(q) - 1) // 2
        if tau(torus_knot_curve(p, q)) != want:
            bad.append(f"torus tau ({p},{q})")
    return (
        "tau and epsilon cabling formulas (corpus x grid + torus knots)",
        not bad,
        "all match" if not bad else "; ".join(bad),
    )


def criterion_phi() -> Criterion:
    bad = []
    for name, mc in _corpus_for_grid().items():
        v = verify_cabling_formulas(mc, 2, 1)
        if not v.ok:
            bad.append(f"{name}: " + ", ".join(c.name for c in v.failures()))
    mc = right_trefoil()
    for n in range(0, 6):
        phi = phi_total(mc)
        want = {2**n: 1}
        if phi != want:
            bad.append(f"K_{n} phi={phi}")
        if n < 5:
            mc = cable_geometric(mc, 2, 1)
    return (
        "phi transfer under (2,1) + iterated family phi_i(K_n) = [i = 2^n], n <= 5",
        not bad,
        "all match" if not bad else "; ".join(bad),
    )


def criterion_lspace() -> Criterion:
    bad = []
    tref = right_trefoil()
    if detect_lspace(cable_geometric(tref, 3, 4)) is None:
        bad.append("(3,4)-cable should be L-space")
    if detect_lspace(cable_geometric(tref, 3, 2)) is not None:
        bad.append("(3,2)-cable should not be L-space")
    for name, mc in _corpus_for_grid().items():
        if detect_lspace(mc) is None:
            continue
        for p, q in GRID:
            rep = lspace_cable_check(mc, p, q)
            if not rep.agree:
                bad.append(f"{name}({p},{q}): formula {rep.formula_verdict} vs curve {rep.direct_verdict}")
    return (
        "L-space cables: Figure-6 pair + formula/direct agreement on the grid",
        not bad,
        "all agree" if not bad else "; ".join(bad),
    )


def _alexander_oracle_trefoil() -> Laurent:
    """Brute-force signed axis crossings of the drawn trefoil curve.

    Independent of the wall-crossing machinery: walk the raw waypoints of
    the realized word and count every passage across a vertical lattice
    line with its direction, by discrete height.
    """
    curve = realize(parse_word("a1 c2' b1"))
    pts = list(curve.points)
    h, v = curve.period
    pts.append((pts[0][0] + h, pts[0][1] + v))
    counts: Dict[int, int] = {}
    # interior crossings of segments
    for (x1, y1), (x2, y2) in zip(pts, pts[1:]):
        if x1 == x2:
            continue
        step = 1 if x2 > x1 else -1
        lo, hi = sorted((x1, x2))
        for m in range(lo.__floor__() + 1, hi.__ceil__()):
            if lo < m < hi:
                y = y1 + Fraction(m - x1, x2 - x1) * (y2 - y1)
                cell = int(y.__floor__())
                counts[cell] = counts.get(cell, 0) + step
    # crossings at waypoints sitting exactly on a lattice line
    n = len(pts) - 1
    for i in range(n):
        x, y = pts[i]
        if x.denominator == 1:
            before = pts[i - 1][0] if i > 0 else pts[n - 1][0] - h
            after = pts[i + 1][0]
            s1 = (before > x) - (before < x)
            s2 = (after > x) - (after < x)
            if s1 != 0 and s2 != 0 and s1 != s2:
                cell = int(y.__floor__())
                counts[cell] = counts.get(cell, 0) + s2
    # orient positively and recentre so the crossing heights are symmetric
    if sum(counts.values()) < 0:
        counts = {c: -k for c, k in counts.items()}
    top, bot = max(counts), min(counts)
    shift = -(top + bot) // 2
    return Laurent.from_dict({c + shift: k for c, k in counts.items()})


def criterion_alexander() -> Criterion:
    bad = []
    oracle = _alexander_oracle_trefoil()
    reference = Laurent.from_dict({1: 1, 0: -1, -1: 1})
    if oracle.coeffs != reference.coeffs:
        bad.append(f"oracle gave {oracle.text()}")
    if alexander(right_trefoil()).coeffs != reference.coeffs:
        bad.append("Delta(T_{2,3}) wrong")
    for name, mc in _corpus_for_grid().items():
        base = alexander(mc)
        for p, q in GRID:
            lhs = alexander(cable_geometric(mc, p, q))
            rhs = base.substitute_power(p) * alexander(torus_knot_curve(p, q))
            if lhs.coeffs != rhs.coeffs:
                bad.append(f"{name}({p},{q}): {lhs.text()} != {rhs.text()}")
    return (
        "Alexander product formula (corpus x grid) + trefoil oracle",
        not bad,
        "all match" if not bad else "; ".join(bad),
    )


def criterion_obstructions() -> Criterion:
    bad = []
    for name, mc in _corpus_for_grid().items():
        for p, q in GRID:
            cable = cable_geometric(mc, p, q)
            if not gamma0_passing_check(cable, p).ok:
                bad.append(f"gamma0 check rejects {name}({p},{q}) at its own p")
            if not all(f.ok for f in closed_component_check(cable, p)):
                bad.append(f"closed check rejects {name}({p},{q}) at its own p")
    fig8 = figure_eight_like()
    for p in range(2, 6):
        if all(f.ok for f in closed_component_check(fig8, p)):
            bad.append(f"figure-eight component not obstructed at p={p}")
    synth = synthetic_noncable()
    rep = obstruction_report(synth, 3)
    for p in (2, 3):
        if rep.verdict(p).possible:
            bad.append(f"synthetic curve not obstructed at p={p}")
    if arc_length_bound(synth) != 3:
        bad.append(f"synthetic p_max = {arc_length_bound(synth)}, want 3")
    if arc_length_bound(right_trefoil()) != 2:
        bad.append("trefoil p_max wrong")
    if arc_length_bound(unknot()) is not None:
        bad.append("unknot should be unbounded")
    return (
        "obstruction soundness + figure-eight and synthetic curve verdicts",
        not bad,
        "all sound" if not bad else "; ".join(bad),
    )


# --- property suites -------------------------------------------------------------


def random_word(rng: random.Random, max_len: int = 12) -> LoopWord:
    """A random valid word: alternating hooks with an optional wrap."""
    while True:
        n_hooks = rng.randint(1, max_len // 2)
        wrap = rng.random() < 0.6
        letters: List[Letter] = []
        if wrap:
            letters.append(Letter(KIND_C, rng.randint(-3, 3), False))
        for i in range(n_hooks):
            kind = KIND_A if (i % 2 == 0) == wrap else KIND_B
            idx = rng.choice([-2, -1, 1, 2])
            letters.append(Letter(kind, idx))
        if not wrap and len(letters) % 2 == 1:
            letters.append(Letter(KIND_B if letters[-1].kind == KIND_A else KIND_A, rng.choice([-1, 1])))
        if not wrap:
            drift = sum(l.index for l in letters)
            if drift != 0:
                k = letters[-1].index - drift
                if k == 0:
                    continue
                letters[-1] = Letter(letters[-1].kind, k)
        try:
            w = LoopWord(tuple(letters))
            validate(w)
            return normalize(w)
        except Exception:
            continue


def criterion_properties() -> Criterion:
    bad = []
    rng = random.Random(20240817)
    # word -> curve -> word round trip
    for _ in range(200):
        w = random_word(rng)
        back = word_from_curve(pull_tight(realize(w)))
        if back != w:
            bad.append(f"round trip failed for {w.text()}")
            break
    # pull_tight idempotence and detour invariance on the corpus
    for name, mc in _corpus_for_grid().items():
        for comp in mc.components:
            tight = pull_tight(comp.curve)
            if pull_tight(tight).points != tight.points:
                bad.append(f"pull_tight not idempotent on {name}")
            detour = _insert_detour(tight)
            if word_from_curve(pull_tight(detour)) != word_from_curve(tight):
                bad.append(f"detour changed the word on {name}")
    # merge against the vertical-sum oracle
    merge_bad = _merge_oracle_trials(rng, 50)
    bad.extend(merge_bad)
    # elliptic involution: rotate by pi about a lattice cell center
    for name, mc in _corpus_for_grid().items():
        rotated_words = []
        for comp in mc.components:
            rot = comp.curve.transformed(-1, 0, 0, -1).translated(1, 1)
            rotated_words.append(word_from_curve(pull_tight(rot)))
        original = sorted(c.word.text() for c in mc.components)
        if sorted(w.text() for w in rotated_words) != original:
            bad.append(f"elliptic involution changed words on {name}")
    # framing independence of the merge route
    for p, q in GRID:
        base = CableParams.default(p, q)
        alt = CableParams(p, q, base.r + p, base.s + q)
        a = cable_merge(right_trefoil(), p, q, base)
        b = cable_merge(right_trefoil(), p, q, alt)
        if not word_sets_equal(a, b):
            bad.append(f"framing choice changed ({p},{q})-cable words")
    return (
        "property suites: round trips, tightening, merge oracle, involution, framing choice",
        not bad,
        "all hold" if not bad else "; ".join(bad[:4]),
    )


def _insert_detour(curve: PLCurve) -> PLCurve:
    """Insert a back-and-forth spike across a wall at a segment midpoint."""
    pts = list(curve.points)
    x1, y1 = pts[0]
    if len(pts) > 1:
        x2, y2 = pts[1]
    else:
        x2, y2 = pts[0][0] + curve.period[0], pts[0][1] + curve.period[1]
    mid = ((x1 + x2) / 2, (y1 + y2) / 2)
    eps = Fraction(1, 7)
    spike_y = mid[1] + 1
    if spike_y.denominator == 1:
        spike_y += Fraction(1, 5)
    detour = [
        mid,
        (mid[0] - eps, spike_y),
        (mid[0] + eps, spike_y),
        mid,
    ]
    return PLCurve(tuple([pts[0]] + detour + pts[1:]), curve.period)


def _merge_oracle_trials(rng: random.Random, count: int) -> List[str]:
    bad = []
    done = 0
    while done < count:
        m = rng.randint(1, 4)
        gamma = LoopWord(tuple(Letter(KIND_C, rng.randint(-2, 2), False) for _ in range(m)))
        theta = random_word(rng, 8)
        h = theta.dx
        if h != 0 and abs(h) != 1:
            continue
        done += 1
        outputs = sorted(w.text() for w in merge(gamma, theta))
        theta_curve = pull_tight(realize(theta))
        key = key_from_curve(realize(gamma))
        if h == 0:
            images = [
                word_from_curve(pull_tight(vertical_sum(theta_curve.translated(j, 0), key))).text()
                for j in range(m)
            ]
        else:
            images = [word_from_curve(pull_tight(vertical_sum(theta_curve, key))).text()]
        if sorted(images) != outputs:
            bad.append(f"merge oracle mismatch for gamma={gamma.text()} theta={theta.text()}")
            if len(bad) > 2:
                break
    return bad


def criterion_determinism() -> Criterion:
    first = _determinism_payload()
    second = _determinism_payload()
    ok = first == second
    return (
        "determinism: SVG renders and JSON reports byte-identical across runs",
        ok,
        "byte-identical" if ok else "payload differs between runs",
    )


def _determinism_payload() -> bytes:
    from .curvefile import serialize
    from .invariants import invariant_report
    from .render import RenderOptions, render_svg, render_tiling
    import json

    parts: List[bytes] = []
    tref = right_trefoil()
    parts.append(render_svg(unknot(), RenderOptions(view="cylinder")))
    parts.append(render_svg(tref, RenderOptions(view="plane", columns=3)))
    parts.append(render_tiling(3, 2))
    parts.append(serialize(cable_geometric(tref, 2, 1), "k1").encode())
    parts.append(json.dumps(invariant_report(tref).to_json_dict(), sort_keys=True).encode())
    return b"\x00".join(parts)


CRITERIA: Tuple[Tuple[str, Callable[[], Criterion]], ...] = (
    ("1 route equivalence", criterion_route_equivalence),
    ("2 tau/epsilon formulas", criterion_tau_epsilon),
    ("3 phi under (2,1)", criterion_phi),
    ("4 L-space cables", criterion_lspace),
    ("5 Alexander product", criterion_alexander),
    ("6 obstruction soundness", criterion_obstructions),
    ("7 property suites", criterion_properties),
    ("8 determinism", criterion_determinism),
)


def run_all(printer: Callable[[str], None] = print) -> bool:
    ok_all = True
    for label, fn in CRITERIA:
        name, ok, detail = fn()
        ok_all &= ok
        printer(f"[{'PASS' if ok else 'FAIL'}] {label}: {name} -- {detail}")
    return ok_all
