"""JSON curve files.

Schema::

    {
      "name": "right-trefoil",
      "components": [
        {"word": "a1' b1' c2",
         "local_system": {"dim": 2, "rows": ["01", "11"]},   # optional
         "offset": 0}                                        # optional
      ],
      "gamma0": 0
    }

Words use the text grammar of the parser.  A plane-closed component is
drawn vertically centered by default; ``offset`` shifts it by whole units
(cables of invariants with several boxes need this).  Serialization is
canonical (sorted keys, fixed separators), so normalized files round-trip
byte for byte.
"""

from __future__ import annotations

import json
from typing import Dict, List, Optional, Tuple

from .gf2 import BitMatrix
from .multicurve import Component, Multicurve, from_words
from .plane import pull_tight, realize, wall_crossings
from .words import LocalSystem, LoopWord, WordError, normalize, parse_word


class CurveFileError(ValueError):
    pass


def _centered_default(word: LoopWord):
    from fractions import Fraction

    curve = pull_tight(realize(word))
    ys = [y for _, y in curve.points]
    center = (min(ys) + max(ys)) / 2
    shift = Fraction(1, 2) - center
    k = int((shift + Fraction(1, 2)).__floor__())
    return curve.translated(0, k)


def _component_offset(comp: Component, word: LoopWord) -> int:
    """Vertical offset of a closed component from its centered position."""
    default = _centered_default(word)
    cells_default = [c[2] for c in wall_crossings(default) if c[0] == "V"]
    cells_actual = [c[2] for c in wall_crossings(comp.curve) if c[0] == "V"]
    if not cells_default or not cells_actual:
        return 0
    return min(cells_actual) - min(cells_default)


def serialize(mc: Multicurve, name: str) -> str:
    comps: List[Dict] = []
    for i, comp in enumerate(mc.components):
        word = normalize(comp.word)
        entry: Dict = {"word": word.text()}
        if word.system is not None and not (word.system.dim == 1 and word.system.matrix.is_identity()):
            entry["local_system"] = {
                "dim": word.system.dim,
                "rows": word.system.matrix.to_strings(),
            }
            entry["word"] = LoopWord(word.letters, None).text()
        if i != mc.gamma0:
            off = _component_offset(comp, word)
            if off:
                entry["offset"] = off
        comps.append(entry)
    doc = {"name": name, "components": comps, "gamma0": mc.gamma0}
    return json.dumps(doc, sort_keys=True, separators=(", ", ": ")) + "\n"


def deserialize(text: str) -> Tuple[str, Multicurve]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CurveFileError(f"bad JSON: {exc}") from None
    if not isinstance(doc, dict) or "components" not in doc:
        raise CurveFileError("curve file needs a components list")
    entries = doc["components"]
    if not isinstance(entries, list) or not entries:
        raise CurveFileError("components must be a nonempty list")
    gamma0 = doc.get("gamma0", 0)
    if not isinstance(gamma0, int) or not (0 <= gamma0 < len(entries)):
        raise CurveFileError("gamma0 index out of range")
    words: List[LoopWord] = []
    offsets: List[int] = []
    for entry in entries:
        if not isinstance(entry, dict) or "word" not in entry:
            raise CurveFileError("each component needs a word")
        try:
            word = parse_word(entry["word"])
        except WordError as exc:
            raise CurveFileError(str(exc)) from None
        ls = entry.get("local_system")
        if ls is not None:
            try:
                matrix = BitMatrix.from_strings(ls["rows"])
            except (KeyError, ValueError) as exc:
                raise CurveFileError(f"bad local system: {exc}") from None
            if matrix.dim != ls.get("dim", matrix.dim):
                raise CurveFileError("local system dimension disagrees with rows")
            word = normalize(LoopWord(word.letters, LocalSystem(matrix, _first_a(word))))
        words.append(word)
        off = entry.get("offset", 0)
        if not isinstance(off, int):
            raise CurveFileError("offset must be an integer")
        offsets.append(off)
    name = doc.get("name", "unnamed")
    return name, from_words(words, gamma0, offsets)


def _first_a(word: LoopWord) -> int:
    for i, letter in enumerate(word.letters):
        if letter.kind == "a":
            return i
    return 0


def load(path: str) -> Tuple[str, Multicurve]:
    with open(path, "r", encoding="utf-8") as f:
        return deserialize(f.read())


def save(path: str, mc: Multicurve, name: str) -> None:
    with open(path, "w", encoding="utf-8") as f:
        f.write(serialize(mc, name))
