"""Cyclic words of curve segments, with optional GF(2) local systems.

A LoopWord is a nonempty cyclic sequence of letters subject to the side
rule (see letters.py) and a closure condition: a word with zero net
horizontal displacement must also have zero net vertical displacement,
otherwise it does not describe a closed curve.

Words are compared up to cyclic rotation and up to reversal (reversing the
traversal bars every letter), since the underlying curves are unoriented.
A word may carry a local system: an invertible GF(2) matrix attached to a
single letter, realized geometrically as parallel copies of the curve with
a connection pattern along that letter.  A nontrivial system must sit on an
A letter; systems spread over several letters are composed onto one.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

from .gf2 import BitMatrix, similar
from .letters import KIND_A, KIND_B, KIND_C, Letter, parse_letter, sides_compatible


class WordError(ValueError):
    """Raised for syntax errors and invalid words."""


@dataclass(frozen=True)
class LocalSystem:
    matrix: BitMatrix
    position: int  # index of the carrying letter

    @property
    def dim(self) -> int:
        return self.matrix.dim


@dataclass(frozen=True)
class LoopWord:
    letters: Tuple[Letter, ...]
    system: Optional[LocalSystem] = None

    def __post_init__(self) -> None:
        if not self.letters:
            raise WordError("empty word")
        if self.system is not None and not (0 <= self.system.position < len(self.letters)):
            raise WordError("local system position out of range")

    def __len__(self) -> int:
        return len(self.letters)

    @property
    def dx(self) -> int:
        return sum(l.dx for l in self.letters)

    @property
    def dy(self) -> int:
        return sum(l.dy for l in self.letters)

    @property
    def dim(self) -> int:
        return self.system.dim if self.system else 1

    def rotated(self, k: int) -> "LoopWord":
        n = len(self.letters)
        k %= n
        letters = self.letters[k:] + self.letters[:k]
        system = None
        if self.system is not None:
            system = LocalSystem(self.system.matrix, (self.system.position - k) % n)
        return LoopWord(letters, system)

    def reversed(self) -> "LoopWord":
        n = len(self.letters)
        letters = tuple(l.reversed() for l in reversed(self.letters))
        system = None
        if self.system is not None:
            system = LocalSystem(self.system.matrix.inverse(), n - 1 - self.system.position)
        return LoopWord(letters, system)

    def text(self) -> str:
        parts = []
        for i, letter in enumerate(self.letters):
            tok = letter.token()
            if self.system is not None and i == self.system.position and not (
                self.system.dim == 1 and self.system.matrix.is_identity()
            ):
                rows = ";".join(self.system.matrix.to_strings())
                tok += f"[{self.system.dim};{rows}]"
            parts.append(tok)
        return " ".join(parts)

    def __str__(self) -> str:  # pragma: no cover - convenience
        return self.text()


def validate(word: LoopWord) -> None:
    """Raise WordError if the word is not a valid closed curve description."""
    n = len(word.letters)
    for i, letter in enumerate(word.letters):
        nxt = word.letters[(i + 1) % n]
        if not sides_compatible(letter, nxt):
            raise WordError(
                f"side violation at junction {i}: {letter.token()} cannot be followed by {nxt.token()}"
            )
    if word.dx == 0 and word.dy != 0:
        raise WordError(f"word does not close up: net vertical drift {word.dy} with no horizontal period")
    if word.system is not None:
        if not word.system.matrix.is_invertible():
            raise WordError("local system matrix is singular over GF(2)")
        carrier = word.letters[word.system.position]
        if not word.system.matrix.is_identity() and carrier.kind != KIND_A:
            raise WordError("a nontrivial local system must sit on an a-letter")


def _letter_key(letter: Letter) -> Tuple:
    return (letter.kind, 0 if letter.bar else 1, letter.index)


def _word_key(word: LoopWord) -> Tuple:
    ls = ()
    if word.system is not None and not (word.system.dim == 1 and word.system.matrix.is_identity()):
        ls = (word.system.position, word.system.dim, word.system.matrix.rows)
    return (tuple(_letter_key(l) for l in word.letters), ls)


def normalize(word: LoopWord) -> LoopWord:
    """Canonical representative of a word up to rotation and reversal.

    Spread-out local systems are first composed onto a single carrying
    letter (an a-letter when the composite is nontrivial); then the
    lexicographically least rotation of the word or its reversal is chosen.
    """
    word = _consolidate_system(word)
    validate(word)
    candidates = []
    for w in (word, word.reversed()):
        for k in range(len(w.letters)):
            candidates.append(w.rotated(k))
    best = min(candidates, key=_word_key)
    validate(best)
    return best


def _consolidate_system(word: LoopWord) -> LoopWord:
    if word.system is None:
        return word
    if word.system.dim == 1 and word.system.matrix.is_identity():
        return LoopWord(word.letters, None)
    carrier = word.letters[word.system.position]
    if carrier.kind == KIND_A or word.system.matrix.is_identity():
        return word
    # slide the system forward onto the first a-letter (the matrix is
    # unchanged: only the marked letter moves, conjugation is absorbed in
    # the equivalence relation)
    n = len(word.letters)
    for off in range(1, n + 1):
        j = (word.system.position + off) % n
        if word.letters[j].kind == KIND_A:
            return LoopWord(word.letters, LocalSystem(word.system.matrix, j))
    raise WordError("a nontrivial local system must sit on an a-letter, but the word has none")


def merge_systems(matrices: Sequence[Tuple[int, BitMatrix]], length: int) -> Optional[LocalSystem]:
    """Compose per-letter matrices (traversal order) into one LocalSystem."""
    live = [(pos, m) for pos, m in matrices if m is not None]
    if not live:
        return None
    dim = live[0][1].dim
    for _, m in live:
        if m.dim != dim:
            raise WordError("local system blocks must share one dimension")
    live.sort(key=lambda pm: pm[0])
    acc = BitMatrix.identity(dim)
    for _, m in live:
        acc = acc @ m
    return LocalSystem(acc, live[0][0])


def equivalent(a: LoopWord, b: LoopWord) -> bool:
    """Equality up to rotation, reversal, and conjugacy of local systems."""
    a = _consolidate_system(a)
    b = _consolidate_system(b)
    if len(a) != len(b) or a.dim != b.dim:
        return False
    letters_b = b.letters
    sys_b = b.system
    for w in (a, a.reversed()):
        for k in range(len(w.letters)):
            r = w.rotated(k)
            if r.letters != letters_b:
                continue
            if r.system is None and sys_b is None:
                return True
            if r.system is None or sys_b is None:
                trivial_r = r.system is None or r.system.matrix.is_identity()
                trivial_b = sys_b is None or sys_b.matrix.is_identity()
                if trivial_r and trivial_b and (r.system.dim if r.system else 1) == (sys_b.dim if sys_b else 1):
                    return True
                continue
            if r.system.position == sys_b.position and similar(r.system.matrix, sys_b.matrix):
                return True
    return False


# --- parsing ----------------------------------------------------------------


def parse_word(text: str) -> LoopWord:
    """Parse a whitespace-separated word, normalizing it.

    >>> parse_word("a1 c2' b1").text()
    "a1' b1' c2"
    >>> parse_word("e").text()
    'e'
    """
    tokens = text.split()
    if not tokens:
        raise WordError("empty word")
    letters: List[Letter] = []
    systems: List[Tuple[int, BitMatrix]] = []
    for tok in tokens:
        block = None
        if "[" in tok:
            if not tok.endswith("]"):
                raise WordError(f"unterminated local system block in {tok!r}")
            tok, block = tok[: tok.index("[")], tok[tok.index("[") + 1 : -1]
        try:
            letter = parse_letter(tok)
        except ValueError as exc:
            raise WordError(str(exc)) from None
        if block is not None:
            parts = [p.strip() for p in block.split(";")]
            try:
                dim = int(parts[0])
            except ValueError:
                raise WordError(f"bad local system dimension in {block!r}") from None
            rows = parts[1:]
            if len(rows) != dim or any(len(r) != dim for r in rows):
                raise WordError("local system block needs dim rows of dim bits")
            systems.append((len(letters), BitMatrix.from_strings(rows)))
        letters.append(letter)
    system = merge_systems(systems, len(letters))
    return normalize(LoopWord(tuple(letters), system))


# --- train track expansion ---------------------------------------------------


@dataclass(frozen=True)
class TrainTrack:
    """Letter-level expansion of a word with a local system."""

    base: LoopWord
    dim: int
    carrier: int  # letter index carrying the connection pattern
    connections: Tuple[Tuple[int, int], ...]  # (i, j) strand links on the carrier


def tensor_local_system(word: LoopWord) -> TrainTrack:
    """Expand a decorated word into parallel strands plus connections.

    The n strands run parallel along every letter; along the carrying
    letter, strand i connects to strand j exactly when the (i, j) entry of
    the matrix is nonzero.
    """
    word = _consolidate_system(word)
    if word.system is None:
        return TrainTrack(word, 1, 0, ((0, 0),))
    m = word.system.matrix
    links = tuple((i, j) for i in range(m.dim) for j in range(m.dim) if m.entry(i, j))
    return TrainTrack(word, m.dim, word.system.position, links)
