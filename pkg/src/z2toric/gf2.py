"""Exact linear algebra over GF(2) using int bitmasks.

A vector of (Z_2)^n is an n-bit int, bit k = coordinate k (n <= 16).
Matrices store their columns as bitmasks, so apply() is an XOR of the
columns selected by the set bits of the argument.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import CapacityError, DimensionMismatchError

MAX_RANK = 16
GL_ENUM_MAX_RANK = 4


def check_vector(v: int, n: int) -> None:
    """Reject vectors with bits outside rank n."""
    if not 1 <= n <= MAX_RANK:
        raise DimensionMismatchError(f"rank {n} outside 1..{MAX_RANK}")
    if v < 0 or v >> n:
        raise DimensionMismatchError(f"vector {v} has bits outside rank {n}")


def basis(n: int, k: int) -> int:
    """The k-th standard basis vector of (Z_2)^n (0-indexed)."""
    if not 0 <= k < n:
        raise DimensionMismatchError(f"basis index {k} outside rank {n}")
    return 1 << k


def rank(vectors: Iterable[int], n: int) -> int:
    """Dimension of the span, by Gaussian elimination on bitmasks."""
    pivots: dict[int, int] = {}
    for v in vectors:
        check_vector(v, n)
        while v:
            h = v.bit_length() - 1
            if h in pivots:
                v ^= pivots[h]
            else:
                pivots[h] = v
                break
    return len(pivots)


def is_independent(vectors: Sequence[int], n: int) -> bool:
    """True iff the vectors are linearly independent over Z_2."""
    return rank(vectors, n) == len(vectors)


@dataclass(frozen=True)
class Mat:
    """A square matrix over GF(2) stored as a tuple of column bitmasks."""

    n: int
    cols: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.cols) != self.n:
            raise DimensionMismatchError(
                f"{len(self.cols)} columns for rank {self.n}")
        for c in self.cols:
            check_vector(c, self.n)

    @classmethod
    def identity(cls, n: int) -> "Mat":
        return cls(n, tuple(1 << k for k in range(n)))

    def apply(self, v: int) -> int:
        """Matrix-vector product over Z_2."""
        check_vector(v, self.n)
        out = 0
        k = 0
        while v:
            if v & 1:
                out ^= self.cols[k]
            v >>= 1
            k += 1
        return out

    def __matmul__(self, other: "Mat") -> "Mat":
        if self.n != other.n:
            raise DimensionMismatchError(
                f"rank {self.n} matrix times rank {other.n} matrix")
        return Mat(self.n, tuple(self.apply(c) for c in other.cols))

    def is_identity(self) -> bool:
        return all(c == 1 << k for k, c in enumerate(self.cols))

    def is_invertible(self) -> bool:
        return rank(self.cols, self.n) == self.n

    def inverse(self) -> "Mat":
        """Inverse via Gauss-Jordan; raises on a singular matrix."""
        n = self.n
        # row masks: bit j of rows[i] is the (i, j) entry
        rows = [0] * n
        for j, c in enumerate(self.cols):
            for i in range(n):
                if (c >> i) & 1:
                    rows[i] |= 1 << j
        aug = [1 << i for i in range(n)]
        for col in range(n):
            pivot = None
            for r in range(col, n):
                if (rows[r] >> col) & 1:
                    pivot = r
                    break
            if pivot is None:
                raise ValueError("matrix is singular")
            rows[col], rows[pivot] = rows[pivot], rows[col]
            aug[col], aug[pivot] = aug[pivot], aug[col]
            for r in range(n):
                if r != col and (rows[r] >> col) & 1:
                    rows[r] ^= rows[col]
                    aug[r] ^= aug[col]
        inv_cols = [0] * n
        for i in range(n):
            for j in range(n):
                if (aug[i] >> j) & 1:
                    inv_cols[j] |= 1 << i
        return Mat(n, tuple(inv_cols))


def gl_order(n: int) -> int:
    """|GL(n, Z_2)| = prod_k (2^n - 2^k), exact."""
    out = 1
    for k in range(n):
        out *= (1 << n) - (1 << k)
    return out


def enumerate_gl(n: int) -> list[Mat]:
    """All invertible n x n matrices over Z_2, each exactly once.

    Columns are chosen by backtracking, each new column outside the span
    of the previous ones; output is in lexicographic order of the column
    bitmask sequence.
    """
    if not 1 <= n <= GL_ENUM_MAX_RANK:
        raise CapacityError(f"GL enumeration supports rank 1..{GL_ENUM_MAX_RANK}, got {n}")
    out: list[Mat] = []
    cols: list[int] = []

    def extend(pivots: dict[int, int]) -> None:
        if len(cols) == n:
            out.append(Mat(n, tuple(cols)))
            return
        for c in range(1, 1 << n):
            v = c
            entry = None
            while v:
                h = v.bit_length() - 1
                if h in pivots:
                    v ^= pivots[h]
                else:
                    entry = (h, v)
                    break
            if entry is None:
                continue
            cols.append(c)
            pivots[entry[0]] = entry[1]
            extend(pivots)
            del pivots[entry[0]]
            cols.pop()

    extend({})
    return out
