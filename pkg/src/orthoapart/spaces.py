"""Subspaces of a finite-dimensional Hermitian space, with exact arithmetic.

A subspace is identified with the reduced row echelon form of any frame
spanning it, which makes equality testing trivial and every operation
canonical.  The Hermitian inner product is conjugate-linear in the second
argument; this convention is fixed here once and asserted in the tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .matrices import ExactMatrix, Vector, vec, vec_is_zero
from .rationals import ONE, ZERO, GaussianRational


@dataclass(frozen=True, slots=True)
class HermitianForm:
    """The standard inner product on an n-dimensional complex space.

    <u, v> = sum_i u_i * conj(v_i): linear in the first argument,
    conjugate-linear in the second.
    """

    dimension: int

    def inner(self, u: Sequence, v: Sequence) -> GaussianRational:
        u = vec(u)
        v = vec(v)
        if len(u) != self.dimension or len(v) != self.dimension:
            raise ValueError("vector length does not match the form dimension")
        return sum((a * b.conjugate() for a, b in zip(u, v)), ZERO)

    def norm_sq(self, u: Sequence) -> GaussianRational:
        return self.inner(u, u)


@dataclass(frozen=True, slots=True)
class Subspace:
    """A k-dimensional subspace of an n-dimensional space.

    `frame` is the canonical RREF basis, one row per dimension (no rows at
    all for the zero subspace).  Two Subspace values are equal iff their
    frames are entry-wise equal.
    """

    n: int
    k: int
    frame: ExactMatrix

    def __post_init__(self) -> None:
        if self.frame.cols != self.n or self.frame.rows != self.k:
            raise ValueError("frame shape does not match (n, k)")

    @staticmethod
    def from_vectors(n: int, rows: Iterable[Sequence]) -> "Subspace":
        rows = [vec(r) for r in rows]
        if any(len(r) != n for r in rows):
            raise ValueError("vector length does not match ambient dimension")
        if not rows:
            return Subspace.zero(n)
        reduced, rank = ExactMatrix.from_rows(rows).rref()
        frame = ExactMatrix(rank, n, reduced.entries[:rank])
        return Subspace(n, rank, frame)

    @staticmethod
    def zero(n: int) -> "Subspace":
        return Subspace(n, 0, ExactMatrix(0, n, ()))

    @staticmethod
    def full(n: int) -> "Subspace":
        return Subspace(n, n, ExactMatrix.identity(n))

    @staticmethod
    def line(v: Sequence) -> "Subspace":
        v = vec(v)
        if vec_is_zero(v):
            raise ValueError("a line needs a nonzero vector")
        return Subspace.from_vectors(len(v), [v])

    @staticmethod
    def coordinate(n: int, indices: Iterable[int]) -> "Subspace":
        """Span of the standard basis vectors e_i for 1-based indices i."""
        rows = []
        for i in indices:
            if not 1 <= i <= n:
                raise ValueError(f"index {i} outside 1..{n}")
            rows.append(_std_row(n, i))
        return Subspace.from_vectors(n, rows)

    def basis(self) -> tuple[Vector, ...]:
        return self.frame.entries

    def contains_vector(self, v: Sequence) -> bool:
        v = vec(v)
        if len(v) != self.n:
            raise ValueError("ambient dimension mismatch")
        if vec_is_zero(v):
            return True
        if self.k == 0:
            return False
        stacked = self.frame.stack(ExactMatrix.from_rows([v]))
        return stacked.rank() == self.k

    def contains(self, other: "Subspace") -> bool:
        _check_ambient(self, other)
        if other.k == 0:
            return True
        if other.k > self.k:
            return False
        return self.frame.stack(other.frame).rank() == self.k


def _std_row(n: int, i: int) -> Vector:
    return tuple(ONE if j == i - 1 else ZERO for j in range(n))


def _check_ambient(a: Subspace, b: Subspace) -> None:
    if a.n != b.n:
        raise ValueError(f"ambient dimension mismatch: {a.n} != {b.n}")


def intersect(a: Subspace, b: Subspace) -> Subspace:
    """Set-theoretic intersection of two subspaces of the same space."""
    _check_ambient(a, b)
    if a.k == 0 or b.k == 0:
        return Subspace.zero(a.n)
    stacked = a.frame.stack(b.frame)
    vectors = []
    for coeffs in stacked.transpose().kernel():
        v = [ZERO] * a.n
        for i in range(a.k):
            if coeffs[i]:
                row = a.frame.entries[i]
                v = [x + coeffs[i] * y for x, y in zip(v, row)]
        vectors.append(tuple(v))
    return Subspace.from_vectors(a.n, [v for v in vectors if not vec_is_zero(v)])


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    """Smallest subspace containing both arguments."""
    _check_ambient(a, b)
    return Subspace.from_vectors(a.n, a.frame.entries + b.frame.entries)


def orthocomplement(a: Subspace, form: HermitianForm) -> Subspace:
    """All vectors orthogonal to a under the form; an involution."""
    if form.dimension != a.n:
        raise ValueError("form dimension does not match the subspace")
    if a.k == 0:
        return Subspace.full(a.n)
    return Subspace.from_vectors(a.n, a.frame.conj().kernel())


def projection_matrix(a: Subspace, form: HermitianForm) -> ExactMatrix:
    """Orthogonal projection onto a, acting on row vectors (v -> v @ P).

    P = B^H (B B^H)^{-1} B for the frame B; idempotent, Hermitian, with
    row space exactly a.
    """
    if form.dimension != a.n:
        raise ValueError("form dimension does not match the subspace")
    if a.k == 0:
        return ExactMatrix.zeros(a.n, a.n)
    b = a.frame
    bh = b.conj_transpose()
    gram = b @ bh
    return (bh @ gram.inverse()) @ b


def mutually_orthogonal(spaces: Sequence[Subspace], form: HermitianForm) -> bool:
    """True iff every pair of frame rows from distinct subspaces is orthogonal."""
    for s in range(len(spaces)):
        for t in range(s + 1, len(spaces)):
            for u in spaces[s].frame.entries:
                for v in spaces[t].frame.entries:
                    if form.inner(u, v):
                        return False
    return True
