"""Orthogonal bases, apartments, compatibility, and witness constructions.

An orthogonal base is any family of n pairwise-orthogonal nonzero vectors
(no normalization: the spans, not the lengths, carry the structure).  Its
level-k apartment is the family of spans of k-element subfamilies.  Two
subspaces are compatible when they decompose over the common part
orthogonally; the canonical decomposition below realizes that whenever
any decomposition does, and commuting projections provide an independent
cross-check of the same relation.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterator, Sequence

from .errors import WitnessBudgetError
from .matrices import Vector, vec, vec_is_zero, vec_scale, vec_sub
from .spaces import (
    HermitianForm,
    Subspace,
    intersect,
    mutually_orthogonal,
    orthocomplement,
    projection_matrix,
    subspace_sum,
)
from .subsets import KSubset


def is_orthogonal_base(vectors: Sequence[Sequence], form: HermitianForm) -> bool:
    """True iff the vectors are nonzero and pairwise orthogonal.

    Exactly n of them are required; n pairwise-orthogonal nonzero vectors
    are automatically linearly independent.
    """
    vs = [vec(v) for v in vectors]
    if len(vs) != form.dimension:
        raise ValueError(
            f"an orthogonal base of dimension {form.dimension} needs exactly "
            f"{form.dimension} vectors, got {len(vs)}"
        )
    if any(vec_is_zero(v) for v in vs):
        return False
    for a, b in combinations(vs, 2):
        if form.inner(a, b):
            return False
    return True


@dataclass(frozen=True, slots=True)
class OrthoBase:
    """n pairwise-orthogonal nonzero vectors spanning the space."""

    vectors: tuple[Vector, ...]
    form: HermitianForm

    def __post_init__(self) -> None:
        if not is_orthogonal_base(self.vectors, self.form):
            raise ValueError("vectors are not an orthogonal base")

    @staticmethod
    def of(vectors: Sequence[Sequence], form: HermitianForm) -> "OrthoBase":
        return OrthoBase(tuple(vec(v) for v in vectors), form)

    @staticmethod
    def standard(n: int) -> "OrthoBase":
        from .rationals import ONE, ZERO

        vecs = tuple(
            tuple(ONE if j == i else ZERO for j in range(n)) for i in range(n)
        )
        return OrthoBase(vecs, HermitianForm(n))

    @property
    def n(self) -> int:
        return self.form.dimension

    def span_of(self, subset: KSubset) -> Subspace:
        """Span of the base vectors named by a subset (1-based indices)."""
        if subset.n != self.n:
            raise ValueError("subset ground set does not match the base")
        return Subspace.from_vectors(self.n, [self.vectors[i - 1] for i in subset])

    def apartment(self, k: int) -> "NumericApartment":
        return NumericApartment(self, k)

    def rescaled(self, factors: Sequence) -> "OrthoBase":
        """Same apartment structure with each vector scaled by a nonzero scalar."""
        if len(factors) != self.n:
            raise ValueError("need one factor per base vector")
        from .rationals import as_gaussian

        vecs = tuple(
            vec_scale(as_gaussian(c), v) for c, v in zip(factors, self.vectors)
        )
        return OrthoBase(vecs, self.form)


@dataclass(frozen=True, slots=True)
class NumericApartment:
    """All k-dimensional spans of subfamilies of an orthogonal base."""

    base: OrthoBase
    k: int

    def __post_init__(self) -> None:
        if not 0 <= self.k <= self.base.n:
            raise ValueError("level k outside 0..n")

    def element(self, subset: KSubset) -> Subspace:
        if subset.k != self.k:
            raise ValueError(f"expected a {self.k}-subset, got size {subset.k}")
        return self.base.span_of(subset)

    def items(self) -> Iterator[tuple[KSubset, Subspace]]:
        n = self.base.n
        for members in combinations(range(1, n + 1), self.k):
            s = KSubset.of(n, members)
            yield s, self.element(s)

    def subspace_set(self) -> frozenset[Subspace]:
        return _apartment_subspaces(self)

    def __contains__(self, subspace: Subspace) -> bool:
        return subspace in self.subspace_set()


@lru_cache(maxsize=256)
def _apartment_subspaces(apartment: NumericApartment) -> frozenset[Subspace]:
    return frozenset(s for _, s in apartment.items())


def apartment_element(apartment: NumericApartment, subset: KSubset) -> Subspace:
    return apartment.element(subset)


def compatible(x: Subspace, y: Subspace, form: HermitianForm) -> bool:
    """Orthogonal-decomposition test over the common part.

    With M = X & Y, X' = X & M^perp, Y' = Y & M^perp, the pair is
    compatible iff M, X', Y' are mutually orthogonal and X' + M = X,
    Y' + M = Y.  If any witnessing decomposition exists, this canonical
    one works, so the test is equivalent to the existential definition.
    """
    if x.n != y.n or form.dimension != x.n:
        raise ValueError("ambient dimension mismatch")
    m = intersect(x, y)
    mp = orthocomplement(m, form)
    xp = intersect(x, mp)
    yp = intersect(y, mp)
    return (
        mutually_orthogonal([m, xp, yp], form)
        and subspace_sum(xp, m) == x
        and subspace_sum(yp, m) == y
    )


def commuting_projections(x: Subspace, y: Subspace, form: HermitianForm) -> bool:
    """Independent cross-check of compatibility: P_X P_Y = P_Y P_X exactly."""
    if x.n != y.n or form.dimension != x.n:
        raise ValueError("ambient dimension mismatch")
    px = projection_matrix(x, form)
    py = projection_matrix(y, form)
    return px @ py == py @ px


def inexact_witness(base: OrthoBase, i: int, j: int) -> OrthoBase:
    """A second base whose apartment contains everything that avoids or
    contains both of the i-th and j-th base vectors.

    Replaces b_i, b_j by f1 = b_i + b_j and f2 = q b_i - p b_j, where
    p = <b_i, b_i> and q = <b_j, b_j>; the replacement spans the same
    coordinate plane and stays orthogonal, so the subsets through neither
    or both indices reappear in the new apartment, which is nevertheless
    distinct from the original.
    """
    if i == j:
        raise ValueError("the two indices must differ")
    n = base.n
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError(f"indices must lie in 1..{n}")
    bi = base.vectors[i - 1]
    bj = base.vectors[j - 1]
    p = base.form.inner(bi, bi)
    q = base.form.inner(bj, bj)
    f1 = tuple(a + b for a, b in zip(bi, bj))
    f2 = vec_sub(vec_scale(q, bi), vec_scale(p, bj))
    vectors = list(base.vectors)
    vectors[i - 1] = f1
    vectors[j - 1] = f2
    return OrthoBase(tuple(vectors), base.form)


def _gram_schmidt(rows: Sequence[Vector], form: HermitianForm) -> list[Vector]:
    """Exact orthogonalization in row order, without normalization."""
    out: list[Vector] = []
    for row in rows:
        v = row
        for u in out:
            coeff = form.inner(v, u) / form.inner(u, u)
            v = vec_sub(v, vec_scale(coeff, u))
        if not vec_is_zero(v):
            out.append(v)
    return out


def build_compatible_witnesses(
    x: Subspace, y: Subspace, form: HermitianForm, count: int = 2
) -> list[Subspace]:
    """Mutually compatible companions of an adjacent pair.

    Both arguments must be k-dimensional with a (k-1)-dimensional
    intersection.  Inside N = (X & Y)^perp, the orthocomplement of
    S = (X + Y) & N has dimension n - k - 1; its canonical frame is
    orthogonalized in row order and the first `count` lines P, Q (, T)
    yield the witnesses P + (X & Y), Q + (X & Y) (, T + (X & Y)).  Each
    witness is compatible with X, with Y, and with the other witnesses,
    and adjacent to both X and Y.
    """
    if count not in (2, 3):
        raise ValueError("count must be 2 or 3")
    if x.n != y.n or form.dimension != x.n:
        raise ValueError("ambient dimension mismatch")
    if x.k != y.k:
        raise ValueError("the two subspaces must have equal dimension")
    core = intersect(x, y)
    if x == y or core.k != x.k - 1:
        raise ValueError("the two subspaces must be adjacent")
    n, k = x.n, x.k
    if n - k - 1 < count:
        raise WitnessBudgetError(f"n-k-1 = {n - k - 1} < {count}")
    big = orthocomplement(core, form)
    s = intersect(subspace_sum(x, y), big)
    room = intersect(orthocomplement(s, form), big)
    lines = _gram_schmidt(room.frame.entries, form)[:count]
    return [subspace_sum(Subspace.line(v), core) for v in lines]
