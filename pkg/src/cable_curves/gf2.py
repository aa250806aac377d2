"""Small GF(2) linear algebra on int-bitset rows.

A matrix is stored as a tuple of ``dim`` row bitmasks; bit ``j`` of row ``i``
is the (i, j) entry.  Dimensions here are tiny (local systems on curve
components), so everything is plain integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple


def _rank(rows: List[int], n: int) -> int:
    work = list(rows)
    rank = 0
    for col in range(n):
        pivot = None
        for r in range(rank, len(work)):
            if (work[r] >> col) & 1:
                pivot = r
                break
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        for r in range(len(work)):
            if r != rank and ((work[r] >> col) & 1):
                work[r] ^= work[rank]
        rank += 1
    return rank


@dataclass(frozen=True)
class BitMatrix:
    """Square matrix over GF(2), rows as bitmasks."""

    dim: int
    rows: Tuple[int, ...]

    def __post_init__(self) -> None:
        if self.dim < 1:
            raise ValueError("dimension must be positive")
        if len(self.rows) != self.dim:
            raise ValueError("row count does not match dimension")
        mask = (1 << self.dim) - 1
        for r in self.rows:
            if r & ~mask:
                raise ValueError("row has bits outside the matrix width")

    @classmethod
    def identity(cls, dim: int) -> "BitMatrix":
        return cls(dim, tuple(1 << i for i in range(dim)))

    @classmethod
    def from_rows(cls, rows: Sequence[Iterable[int]]) -> "BitMatrix":
        packed = tuple(sum((1 << j) for j, v in enumerate(row) if int(v) & 1) for row in rows)
        return cls(len(packed), packed)

    @classmethod
    def from_strings(cls, rows: Sequence[str]) -> "BitMatrix":
        """Rows as bit strings, leftmost character = column 0."""
        packed = []
        for row in rows:
            bits = 0
            for j, ch in enumerate(row.strip()):
                if ch == "1":
                    bits |= 1 << j
                elif ch != "0":
                    raise ValueError(f"bad bit character {ch!r}")
            packed.append(bits)
        return cls(len(packed), tuple(packed))

    def entry(self, i: int, j: int) -> int:
        return (self.rows[i] >> j) & 1

    def to_strings(self) -> List[str]:
        return ["".join("1" if self.entry(i, j) else "0" for j in range(self.dim)) for i in range(self.dim)]

    def is_identity(self) -> bool:
        return self.rows == tuple(1 << i for i in range(self.dim))

    def is_invertible(self) -> bool:
        return _rank(list(self.rows), self.dim) == self.dim

    def __matmul__(self, other: "BitMatrix") -> "BitMatrix":
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        out = []
        for i in range(self.dim):
            acc = 0
            row = self.rows[i]
            for k in range(self.dim):
                if (row >> k) & 1:
                    acc ^= other.rows[k]
            out.append(acc)
        return BitMatrix(self.dim, tuple(out))

    def inverse(self) -> "BitMatrix":
        n = self.dim
        work = [self.rows[i] | (1 << (n + i)) for i in range(n)]
        rank = 0
        for col in range(n):
            pivot = None
            for r in range(rank, n):
                if (work[r] >> col) & 1:
                    pivot = r
                    break
            if pivot is None:
                raise ValueError("matrix is singular over GF(2)")
            work[rank], work[pivot] = work[pivot], work[rank]
            for r in range(n):
                if r != rank and ((work[r] >> col) & 1):
                    work[r] ^= work[rank]
            rank += 1
        mask = (1 << n) - 1
        return BitMatrix(n, tuple((work[i] >> n) & mask for i in range(n)))


# --- similarity over GF(2) ------------------------------------------------
#
# Two matrices are similar iff xI - A and xI - B have the same Smith normal
# form over F2[x].  Polynomials over F2 are int bitmasks (bit k = coeff of
# x^k), so multiplication is carry-less and everything stays exact.


def _pmul(a: int, b: int) -> int:
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out


def _pdivmod(a: int, b: int) -> Tuple[int, int]:
    if b == 0:
        raise ZeroDivisionError("polynomial division by zero")
    q = 0
    db = b.bit_length()
    while a.bit_length() >= db:
        shift = a.bit_length() - db
        q ^= 1 << shift
        a ^= b << shift
    return q, a


def _invariant_factors(mat: "BitMatrix") -> Tuple[int, ...]:
    """Nontrivial invariant factors of xI - mat over F2[x]."""
    n = mat.dim
    # m[i][j] is a polynomial bitmask; xI - A = xI + A over F2.
    m = [[(2 if i == j else 0) ^ mat.entry(i, j) for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        m[i], m[j] = m[j], m[i]

    def swap_cols(i, j):
        for row in m:
            row[i], row[j] = row[j], row[i]

    factors = []
    top = 0
    while top < n:
        # find the nonzero entry of lowest degree in the remaining block
        best = None
        for i in range(top, n):
            for j in range(top, n):
                if m[i][j] and (best is None or m[i][j].bit_length() < m[best[0]][best[1]].bit_length()):
                    best = (i, j)
        if best is None:
            factors.append(0)
            top += 1
            continue
        swap_rows(top, best[0])
        swap_cols(top, best[1])
        dirty = True
        while dirty:
            dirty = False
            pivot = m[top][top]
            for i in range(top + 1, n):
                if m[i][top]:
                    q, _ = _pdivmod(m[i][top], pivot)
                    for j in range(top, n):
                        m[i][j] ^= _pmul(q, m[top][j])
                    if m[i][top]:
                        swap_rows(top, i)
                        dirty = True
            for j in range(top + 1, n):
                if m[top][j]:
                    q, _ = _pdivmod(m[top][j], m[top][top])
                    for i in range(top, n):
                        m[i][j] ^= _pmul(q, m[i][top])
                    if m[top][j]:
                        swap_cols(top, j)
                        dirty = True
            if not dirty:
                # pivot must divide every remaining entry
                for i in range(top + 1, n):
                    for j in range(top + 1, n):
                        _, rem = _pdivmod(m[i][j], m[top][top])
                        if rem:
                            for k in range(top, n):
                                m[top][k] ^= m[i][k]
                            dirty = True
                            break
                    if dirty:
                        break
        factors.append(m[top][top])
        top += 1
    return tuple(f for f in factors if f.bit_length() > 1 or f == 0)


def similar(a: "BitMatrix", b: "BitMatrix") -> bool:
    """True iff a and b are conjugate by an invertible GF(2) matrix."""
    if a.dim != b.dim:
        return False
    return _invariant_factors(a) == _invariant_factors(b)
