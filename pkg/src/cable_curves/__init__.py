"""Immersed-curve invariants of knot complements and their cables.

The package computes with the multicurve invariant of a knot complement,
drawn exactly in the lattice-punctured plane: cyclic words in a segment
alphabet on one side, rational piecewise-linear curves on the other, with
conversions both ways.  Cabling is implemented twice (a plane
transformation and a word-level merge), and the numerical pieces of the
invariant -- tau, epsilon, the refined arc counts, the L-space shape, the
Alexander polynomial -- are read off the distinguished component.
"""

from .cabling import CableParams, cable_geometric, cable_merge, tile, torus_knot_curve
from .corpus import corpus
from .curvefile import deserialize, load, save, serialize
from .gf2 import BitMatrix
from .invariants import (
    alexander,
    axis_crossings,
    detect_lspace,
    epsilon,
    invariant_report,
    lspace_cable_check,
    phi_refined,
    phi_table,
    phi_total,
    tau,
    verify_cabling_formulas,
)
from .merge import merge, merge_components
from .multicurve import Multicurve, from_words, standardize, word_sets_equal
from .obstructions import (
    arc_length_bound,
    closed_component_check,
    gamma0_passing_check,
    obstruction_report,
)
from .plane import PLCurve, pull_tight, realize, word_from_curve
from .render import RenderOptions, render_svg, render_tiling
from .transforms import (
    apply_basis_change,
    ceil_key,
    f_pq,
    floor_key,
    g_pq,
    lift_to_cover,
    vertical_sum,
)
from .words import LocalSystem, LoopWord, normalize, parse_word, tensor_local_system

__version__ = "0.1.0"

__all__ = [
    "BitMatrix",
    "CableParams",
    "LocalSystem",
    "LoopWord",
    "Multicurve",
    "PLCurve",
    "RenderOptions",
    "alexander",
    "apply_basis_change",
    "arc_length_bound",
    "axis_crossings",
    "cable_geometric",
    "cable_merge",
    "ceil_key",
    "closed_component_check",
    "corpus",
    "deserialize",
    "detect_lspace",
    "epsilon",
    "f_pq",
    "floor_key",
    "from_words",
    "g_pq",
    "gamma0_passing_check",
    "invariant_report",
    "lift_to_cover",
    "load",
    "lspace_cable_check",
    "merge",
    "merge_components",
    "normalize",
    "obstruction_report",
    "parse_word",
    "phi_refined",
    "phi_table",
    "phi_total",
    "pull_tight",
    "realize",
    "render_svg",
    "render_tiling",
    "save",
    "serialize",
    "standardize",
    "tau",
    "tensor_local_system",
    "tile",
    "torus_knot_curve",
    "verify_cabling_formulas",
    "vertical_sum",
    "word_from_curve",
    "word_sets_equal",
]
