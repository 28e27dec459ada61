"""Scaled-unitary transforms and the subspace maps they induce.

A transform is a matrix M with M* M = c I for a positive rational c,
optionally preceded by entrywise conjugation and followed (when n = 2k)
by orthocomplementation.  Scaling by c changes no span, so these induce
exactly the subspace maps of unitary and conjugate-unitary operators
while keeping every entry rational.  Operators act on row vectors:
v -> conj(v) @ M when the conjugation flag is set, else v -> v @ M.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .apartments import OrthoBase
from .errors import ScaledUnitarityError
from .matrices import ExactMatrix, vec_conj
from .rationals import gr
from .spaces import HermitianForm, Subspace, orthocomplement


def _unitarity_scale(m: ExactMatrix) -> Fraction:
    """The c in M* M = c I, or raise if there is no such positive rational."""
    if m.rows != m.cols:
        raise ScaledUnitarityError("transform matrix must be square")
    prod = m.conj_transpose() @ m
    c = prod[0, 0]
    if not c.is_real() or c.re <= 0:
        raise ScaledUnitarityError("M*M has a non-positive diagonal")
    n = m.rows
    for i in range(n):
        for j in range(n):
            expected = c if i == j else gr(0)
            if prod[i, j] != expected:
                raise ScaledUnitarityError("M*M is not a positive multiple of the identity")
    return c.re


@dataclass(frozen=True, slots=True)
class TransformSpec:
    """A scaled-unitary matrix plus conjugation and orthocomplement flags."""

    matrix: ExactMatrix
    conjugate: bool = False
    perp: bool = False

    def __post_init__(self) -> None:
        _unitarity_scale(self.matrix)

    @property
    def n(self) -> int:
        return self.matrix.rows

    def scale(self) -> Fraction:
        return _unitarity_scale(self.matrix)

    def compose(self, other: "TransformSpec") -> "TransformSpec":
        """The transform applying `other` first, then this one.

        Conjugation and perp flags combine by xor; perp slides past a
        scaled unitary because these operators preserve orthogonality.
        """
        if self.n != other.n:
            raise ValueError("dimension mismatch")
        m2 = other.matrix.conj() if self.conjugate else other.matrix
        return TransformSpec(
            m2 @ self.matrix,
            conjugate=self.conjugate != other.conjugate,
            perp=self.perp != other.perp,
        )


def induced_map(spec: TransformSpec, x: Subspace) -> Subspace:
    """Image of a subspace under the induced Grassmannian map."""
    if spec.n != x.n:
        raise ValueError("ambient dimension mismatch")
    if spec.perp and x.n != 2 * x.k:
        raise ValueError(f"perp flag needs n = 2k, got (n, k) = ({x.n}, {x.k})")
    rows = x.frame.entries
    if spec.conjugate:
        rows = tuple(vec_conj(r) for r in rows)
    image = Subspace.from_vectors(x.n, [spec.matrix.apply_to_row(r) for r in rows])
    if spec.perp:
        image = orthocomplement(image, HermitianForm(x.n))
    return image


def map_base(spec: TransformSpec, base: OrthoBase) -> OrthoBase:
    """Image base: scaled unitaries keep orthogonal families orthogonal.

    The perp flag does not act on bases (only on subspaces).
    """
    if spec.n != base.n:
        raise ValueError("dimension mismatch")
    vectors = []
    for v in base.vectors:
        if spec.conjugate:
            v = vec_conj(v)
        vectors.append(spec.matrix.apply_to_row(v))
    return OrthoBase(tuple(vectors), base.form)


# A few Pythagorean triples drive rational rotation blocks [[a, b], [-b, a]]
# with a^2 + b^2 = h^2, so whole matrices scale to M*M = h^2 I.
_TRIPLES = ((3, 4, 5), (5, 12, 13), (8, 15, 17), (20, 21, 29))

# Gaussian integers of norm h^2 usable as diagonal singles alongside an
# (a, b, h) block: h times a fourth root of unity, or a+bi itself.
def _single_choices(a: int, b: int, h: int):
    return (
        gr(h),
        gr(-h),
        gr(0, h),
        gr(0, -h),
        gr(a, b),
        gr(a, -b),
    )


def random_transform_spec(
    rng: random.Random,
    n: int,
    allow_conjugate: bool = True,
    allow_perp: bool = False,
) -> TransformSpec:
    """A seeded random scaled-unitary spec built from rotation blocks,
    diagonal units, and a permutation."""
    a, b, h = _TRIPLES[rng.randrange(len(_TRIPLES))]
    singles = _single_choices(a, b, h)
    cells: list[list] = [[gr(0)] * n for _ in range(n)]
    pos = 0
    while pos < n:
        if pos + 1 < n and rng.random() < 0.6:
            if rng.random() < 0.5:
                block = ((gr(a), gr(b)), (gr(-b), gr(a)))
            else:
                block = ((gr(a), gr(0, b)), (gr(0, b), gr(a)))
            cells[pos][pos] = block[0][0]
            cells[pos][pos + 1] = block[0][1]
            cells[pos + 1][pos] = block[1][0]
            cells[pos + 1][pos + 1] = block[1][1]
            pos += 2
        else:
            cells[pos][pos] = singles[rng.randrange(len(singles))]
            pos += 1
    block_diag = ExactMatrix.from_rows(cells)
    perm = list(range(n))
    rng.shuffle(perm)
    perm_rows = [[gr(1) if c == perm[r] else gr(0) for c in range(n)] for r in range(n)]
    matrix = block_diag @ ExactMatrix.from_rows(perm_rows)
    return TransformSpec(
        matrix,
        conjugate=allow_conjugate and rng.random() < 0.5,
        perp=allow_perp and rng.random() < 0.5,
    )
