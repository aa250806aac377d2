"""The segment alphabet for curves in the lattice-punctured plane.

Curves are cut into segments at their crossings of the vertical lattice
lines x = m ("pegs" sit at the lattice points).  Each segment is one letter:

* ``A(k)`` -- an arc with both endpoints on the same vertical line, bulging
  to the RIGHT of that line and moving k units vertically (k > 0 up,
  k < 0 down).  Written ``a<k>`` / ``a<k>'``.
* ``B(k)`` -- the same on the LEFT of the line.  Written ``b<k>`` / ``b<k>'``.
* ``C(k, bar=False)`` -- a segment crossing one strip to the NEXT line on
  the right, rising k units.  Its reverse ``C(k, bar=True)`` moves one strip
  left while rising k.  The index is always the vertical motion along the
  traversal direction.

Text tokens follow the classical five-letter alphabet: ``a<k>``, ``b<k>``,
``c<k>``, ``d<k>``, ``e`` with an optional trailing ``'`` for reversal, and
k a positive integer.  The d/e letters are leftward crossing segments and
are stored as barred C letters: ``d<k>`` is the reverse of a rightward
segment falling k, and ``e`` is the reverse of the flat segment, so

    d<k>  -> C(+k, bar)      e  -> C(0, bar)
    d<k>' -> C(-k, fwd)      e' -> C(0, fwd)

Which of a/b bulges right is a convention; this one is fixed so that the
standard right-handed trefoil word ``a1 c2' b1`` realizes the curve whose
first axis crossing sits at height 3/2 and turns downward.

Side rule: consecutive letters share an endpoint on a vertical line and the
curve must cross that line transversally there, so the side occupied by the
end of one letter is opposite the side occupied by the start of the next.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

KIND_A = "a"
KIND_B = "b"
KIND_C = "c"

_TOKEN_RE = re.compile(r"^([abcde])(\d*)('?)$")


@dataclass(frozen=True, order=True)
class Letter:
    kind: str
    index: int
    bar: bool = False  # meaningful for C only: True = leftward strip crossing

    def __post_init__(self) -> None:
        if self.kind not in (KIND_A, KIND_B, KIND_C):
            raise ValueError(f"unknown letter kind {self.kind!r}")
        if self.kind in (KIND_A, KIND_B):
            if self.index == 0:
                raise ValueError(f"{self.kind}0 does not exist")
            if self.bar:
                raise ValueError("A/B letters store reversal in the index sign")

    # -- geometry ----------------------------------------------------------
    @property
    def dx(self) -> int:
        """Horizontal displacement along the traversal."""
        if self.kind != KIND_C:
            return 0
        return -1 if self.bar else 1

    @property
    def dy(self) -> int:
        """Vertical displacement along the traversal."""
        return self.index

    @property
    def start_side(self) -> str:
        """Side of the junction line occupied just after the start ('L'/'R')."""
        if self.kind == KIND_A:
            return "R"
        if self.kind == KIND_B:
            return "L"
        return "L" if self.bar else "R"

    @property
    def end_side(self) -> str:
        if self.kind == KIND_A:
            return "R"
        if self.kind == KIND_B:
            return "L"
        return "R" if self.bar else "L"

    def reversed(self) -> "Letter":
        if self.kind == KIND_C:
            return Letter(KIND_C, -self.index, not self.bar)
        return Letter(self.kind, -self.index)

    # -- text --------------------------------------------------------------
    def token(self) -> str:
        if self.kind in (KIND_A, KIND_B):
            if self.index > 0:
                return f"{self.kind}{self.index}"
            return f"{self.kind}{-self.index}'"
        if not self.bar:
            if self.index > 0:
                return f"c{self.index}"
            if self.index < 0:
                return f"d{-self.index}'"
            return "e'"
        if self.index < 0:
            return f"c{-self.index}'"
        if self.index > 0:
            return f"d{self.index}"
        return "e"

    def __str__(self) -> str:  # pragma: no cover - convenience
        return self.token()


def parse_letter(token: str) -> Letter:
    """Parse one token of the word grammar into a Letter.

    >>> parse_letter("a2").token()
    'a2'
    >>> parse_letter("c2'") == Letter("c", -2, True)
    True
    >>> parse_letter("d3") == Letter("c", 3, True)
    True
    >>> parse_letter("e") == Letter("c", 0, True)
    True
    """
    m = _TOKEN_RE.match(token)
    if not m:
        raise ValueError(f"bad letter token {token!r}")
    name, digits, bar = m.group(1), m.group(2), m.group(3) == "'"
    if name == "e":
        if digits:
            raise ValueError("e takes no subscript")
        return Letter(KIND_C, 0, not bar)
    if not digits:
        raise ValueError(f"letter {name!r} needs a positive subscript")
    k = int(digits)
    if k <= 0:
        raise ValueError("subscripts are positive integers")
    if name == "a":
        return Letter(KIND_A, -k if bar else k)
    if name == "b":
        return Letter(KIND_B, -k if bar else k)
    if name == "c":
        return Letter(KIND_C, -k if bar else k, bar)
    # d<k> is the reverse of the rightward segment falling k
    return Letter(KIND_C, -k if bar else k, not bar)


def sides_compatible(first: Letter, second: Letter) -> bool:
    """Transversality at the shared junction of two consecutive letters."""
    return first.end_side != second.start_side
