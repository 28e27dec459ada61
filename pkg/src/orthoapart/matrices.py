"""Exact matrices over Gaussian rationals.

Vectors are rows throughout the package: a frame is a matrix whose rows
span a subspace, and an operator acts on a row vector v as v @ M (so row i
of M is the image of the i-th standard basis vector).  Row reduction is
fully deterministic -- pivots are the first nonzero entry scanning each
column top-down -- so reduced forms are canonical.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .rationals import ONE, ZERO, GaussianRational, as_gaussian

Vector = tuple[GaussianRational, ...]


def vec(entries: Iterable) -> Vector:
    return tuple(as_gaussian(e) for e in entries)


def vec_add(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v, strict=True))

def vec_sub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v, strict=True))


def vec_scale(c: GaussianRational, v: Vector) -> Vector:
    return tuple(c * a for a in v)


def vec_conj(v: Vector) -> Vector:
    return tuple(a.conjugate() for a in v)


def vec_is_zero(v: Vector) -> bool:
    return not any(v)


@dataclass(frozen=True, slots=True)
class ExactMatrix:
    rows: int
    cols: int
    entries: tuple[Vector, ...]

    def __post_init__(self) -> None:
        if len(self.entries) != self.rows:
            raise ValueError("row count mismatch")
        if any(len(r) != self.cols for r in self.entries):
            raise ValueError("ragged rows")

    @staticmethod
    def from_rows(rows: Sequence[Sequence]) -> "ExactMatrix":
        entries = tuple(vec(r) for r in rows)
        if not entries:
            raise ValueError("from_rows needs at least one row; use zeros()")
        return ExactMatrix(len(entries), len(entries[0]), entries)

    @staticmethod
    def identity(n: int) -> "ExactMatrix":
        return ExactMatrix(
            n, n, tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n))
        )

    @staticmethod
    def zeros(rows: int, cols: int) -> "ExactMatrix":
        return ExactMatrix(rows, cols, tuple(tuple(ZERO for _ in range(cols)) for _ in range(rows)))

    def __getitem__(self, rc: tuple[int, int]) -> GaussianRational:
        return self.entries[rc[0]][rc[1]]

    def row(self, i: int) -> Vector:
        return self.entries[i]

    def is_zero(self) -> bool:
        return all(not e for r in self.entries for e in r)

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_shape(other)
        return ExactMatrix(
            self.rows,
            self.cols,
            tuple(vec_add(a, b) for a, b in zip(self.entries, other.entries)),
        )

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_shape(other)
        return ExactMatrix(
            self.rows,
            self.cols,
            tuple(vec_sub(a, b) for a, b in zip(self.entries, other.entries)),
        )

    def _check_shape(self, other: "ExactMatrix") -> None:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")

    def scale(self, c) -> "ExactMatrix":
        c = as_gaussian(c)
        return ExactMatrix(self.rows, self.cols, tuple(vec_scale(c, r) for r in self.entries))

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise ValueError("incompatible shapes for product")
        ot = tuple(zip(*other.entries))  # columns of other
        out = tuple(
            tuple(sum((a * b for a, b in zip(row, col)), ZERO) for col in ot)
            for row in self.entries
        )
        return ExactMatrix(self.rows, other.cols, out)

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(self.cols, self.rows, tuple(zip(*self.entries)))

    def conj(self) -> "ExactMatrix":
        return ExactMatrix(self.rows, self.cols, tuple(vec_conj(r) for r in self.entries))

    def conj_transpose(self) -> "ExactMatrix":
        return self.conj().transpose()

    def stack(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.cols:
            raise ValueError("column count mismatch")
        return ExactMatrix(self.rows + other.rows, self.cols, self.entries + other.entries)

    def rref(self) -> tuple["ExactMatrix", int]:
        """Reduced row echelon form and rank.

        Zero rows sink to the bottom; each pivot is 1 with zeros above and
        below, so the result is the canonical representative of the row
        space.
        """
        reduced, rank, _ = _rref_rows(list(self.entries), self.cols)
        return ExactMatrix(self.rows, self.cols, tuple(reduced)), rank

    def rank(self) -> int:
        _, rank, _ = _rref_rows(list(self.entries), self.cols)
        return rank

    def kernel(self) -> tuple[Vector, ...]:
        """Basis of {v : v unknowns in columns, M @ v^T = 0}.

        One basis vector per free column, with a 1 in that column; the
        basis count is cols - rank.
        """
        reduced, rank, pivots = _rref_rows(list(self.entries), self.cols)
        pivot_set = set(pivots)
        free_cols = [c for c in range(self.cols) if c not in pivot_set]
        basis = []
        for f in free_cols:
            v = [ZERO] * self.cols
            v[f] = ONE
            for r, c in enumerate(pivots):
                v[c] = -reduced[r][f]
            basis.append(tuple(v))
        return tuple(basis)

    def inverse(self) -> "ExactMatrix":
        if self.rows != self.cols:
            raise ValueError("inverse of a non-square matrix")
        n = self.rows
        aug = [list(self.entries[i]) + [ONE if j == i else ZERO for j in range(n)] for i in range(n)]
        reduced, rank, _ = _rref_rows([tuple(r) for r in aug], 2 * n)
        if rank < n:
            raise ValueError("matrix is singular")
        return ExactMatrix(n, n, tuple(tuple(r[n:]) for r in reduced))

    def apply_to_row(self, v: Vector) -> Vector:
        """Image of the row vector v under this operator (v @ M)."""
        if len(v) != self.rows:
            raise ValueError("vector length mismatch")
        return tuple(
            sum((v[i] * self.entries[i][j] for i in range(self.rows)), ZERO)
            for j in range(self.cols)
        )

    def __str__(self) -> str:
        cells = [[str(e) for e in r] for r in self.entries]
        width = max((len(c) for r in cells for c in r), default=1)
        return "\n".join("[" + "  ".join(c.rjust(width) for c in r) + "]" for r in cells)


def _rref_rows(rows: list[Vector], cols: int) -> tuple[list[Vector], int, list[int]]:
    """Shared elimination core: returns (reduced rows, rank, pivot columns)."""
    work = [list(r) for r in rows]
    pivots: list[int] = []
    pr = 0
    for pc in range(cols):
        pivot_row = None
        for r in range(pr, len(work)):
            if work[r][pc]:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        work[pr], work[pivot_row] = work[pivot_row], work[pr]
        p = work[pr][pc]
        if p != ONE:
            inv = ONE / p
            work[pr] = [inv * e for e in work[pr]]
        for r in range(len(work)):
            if r != pr and work[r][pc]:
                f = work[r][pc]
                work[r] = [a - f * b for a, b in zip(work[r], work[pr])]
        pivots.append(pc)
        pr += 1
        if pr == len(work):
            break
    return [tuple(r) for r in work], len(pivots), pivots
