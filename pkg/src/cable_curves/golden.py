"""Golden-file fixtures: canonical renders and reports for regression tests.

The files live in golden/ at the repository root (override with the
CABLE_CURVES_GOLDEN_DIR environment variable) and are rewritten only by an
explicit ``cable-curves regen-golden``.
"""

from __future__ import annotations

import json
import os
from typing import Dict, List

from .cabling import cable_geometric
from .corpus import right_trefoil, unknot
from .curvefile import serialize
from .invariants import invariant_report
from .render import RenderOptions, render_svg, render_tiling


def golden_payloads() -> Dict[str, bytes]:
    tref = right_trefoil()
    return {
        "unknot-cylinder.svg": render_svg(unknot(), RenderOptions(view="cylinder")),
        "trefoil-plane.svg": render_svg(tref, RenderOptions(view="plane", columns=3)),
        "tiling-3-2.svg": render_tiling(3, 2),
        "trefoil.json": serialize(tref, "right-trefoil").encode(),
        "trefoil-cable-2-1.json": serialize(cable_geometric(tref, 2, 1), "cable-2-1").encode(),
        "trefoil-invariants.json": (
            json.dumps(invariant_report(tref).to_json_dict(), sort_keys=True) + "\n"
        ).encode(),
    }


def write_goldens(directory: str) -> List[str]:
    os.makedirs(directory, exist_ok=True)
    written = []
    for name, payload in sorted(golden_payloads().items()):
        path = os.path.join(directory, name)
        with open(path, "wb") as f:
            f.write(payload)
        written.append(path)
    return written
