"""The merge operation on words, computed on a toroidal grid.

One input is a word in crossing letters only (all forward, so its curve is
a graph over the horizontal direction); its letters label the columns of a
grid, one column per strip of the plane.  The other word is traversed
cyclically while a column cursor tracks which vertical lattice line the
curve currently sits on:

* hooks keep their letter and their column,
* a forward crossing letter picks up the index of the column it crosses
  and advances the cursor,
* a barred crossing letter first steps the cursor back, then subtracts the
  crossed column's index.

The traversal closes when the (letter, column) state repeats.  A word with
net column displacement d per pass closes after width/gcd(width, d) passes
and the distinct starting columns yield gcd(width, d) output components;
plane-closed inputs give one output per column.  Local systems ride along
unchanged on the images of their letters.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

from .letters import KIND_A, KIND_B, KIND_C, Letter
from .multicurve import Component, Multicurve, component_from_curve
from .plane import pull_tight, realize
from .words import LocalSystem, LoopWord, WordError, normalize, validate


def column_indices(gamma: LoopWord) -> List[int]:
    """The column labels of the grid: gamma must be forward crossing letters only."""
    cols = []
    for letter in gamma.letters:
        if letter.kind != KIND_C or letter.bar:
            raise WordError("merge needs a word of forward crossing letters only")
        cols.append(letter.index)
    return cols


@dataclass(frozen=True)
class MergeGrid:
    """Grid state for merging: column labels plus the traversed word."""

    columns: Tuple[int, ...]
    theta: LoopWord

    @property
    def width(self) -> int:
        return len(self.columns)

    def column(self, i: int) -> int:
        return self.columns[i % self.width]


def merge(gamma: LoopWord, theta: LoopWord) -> List[LoopWord]:
    """Merge a columns-only word with an arbitrary word.

    Returns the list of output words, one per traversal orbit of the grid.
    """
    validate(gamma)
    validate(theta)
    grid = MergeGrid(tuple(column_indices(gamma)), theta)
    m = grid.width
    letters = theta.letters
    n = len(letters)
    outputs: List[LoopWord] = []
    seen = set()
    for start_col in range(m):
        if (0, start_col) in seen:
            continue
        out: List[Letter] = []
        positions: List[Tuple[int, int]] = []
        sys_out: Optional[LocalSystem] = None
        state = (0, start_col)
        while True:
            seen.add(state)
            positions.append(state)
            i, col = state
            letter = letters[i]
            if letter.kind == KIND_C:
                if not letter.bar:
                    out.append(Letter(KIND_C, letter.index + grid.column(col), False))
                    col += 1
                else:
                    col -= 1
                    out.append(Letter(KIND_C, letter.index - grid.column(col), True))
            else:
                out.append(letter)
            if theta.system is not None and theta.system.position == i and sys_out is None:
                sys_out = LocalSystem(theta.system.matrix, len(out) - 1)
            state = ((i + 1) % n, col % m)
            if state == (0, start_col % m):
                break
        outputs.append(normalize(LoopWord(tuple(out), sys_out)))
    return outputs


def merge_components(gamma: LoopWord, theta: Multicurve) -> List[List[LoopWord]]:
    """Componentwise merge; first entry is the image of the distinguished one."""
    out = [merge(gamma, theta.gamma0_component.word)]
    for comp in theta.closed_components():
        out.append(merge(gamma, comp.word))
    return out
