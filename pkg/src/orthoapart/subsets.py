"""Combinatorial model of an orthogonal apartment: k-subsets of {1..n}.

Everything here is independent of the numeric subspace layer.  A k-subset
stands for the span of the base vectors it names; two subsets play the
role of subspaces with intersection dimension m = |X & Y|.  Subsets are
bit masks (member i <-> bit i-1), capped at 64 indices.

The central counting fact: a pair X != Y with |X & Y| = m lies in exactly
c(m) = (k-m)^2 + m(n-2k+m) complementary subsets, where the complementary
subset for an index pair {i, j} collects the subsets containing exactly
one of i, j.  The two summands track the two ways {i, j} can separate X
and Y: one index in X\\Y and the other in Y\\X, or one index in X & Y and
the other outside X | Y.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Iterator

from .errors import ExceptionalCaseError

MAX_N = 64


def _check_n(n: int) -> None:
    if not 1 <= n <= MAX_N:
        raise ValueError(f"n must be in 1..{MAX_N}, got {n}")


def mask_of(members: Iterable[int], n: int) -> int:
    m = 0
    for i in members:
        if not 1 <= i <= n:
            raise ValueError(f"member {i} outside 1..{n}")
        m |= 1 << (i - 1)
    return m


def members_of(mask: int) -> tuple[int, ...]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def popcount(mask: int) -> int:
    return mask.bit_count()


def all_ksubset_masks(n: int, k: int) -> tuple[int, ...]:
    """All k-subsets of {1..n} as masks, in increasing mask order."""
    _check_n(n)
    if not 0 <= k <= n:
        raise ValueError(f"k must be in 0..{n}")
    return tuple(sorted(mask_of(c, n) for c in combinations(range(1, n + 1), k)))


@dataclass(frozen=True, slots=True)
class KSubset:
    """A k-element subset of {1..n} as an immutable bit mask."""

    n: int
    mask: int

    def __post_init__(self) -> None:
        _check_n(self.n)
        if self.mask < 0 or self.mask >> self.n:
            raise ValueError("mask has bits outside 1..n")

    @staticmethod
    def of(n: int, members: Iterable[int]) -> "KSubset":
        return KSubset(n, mask_of(members, n))

    @property
    def k(self) -> int:
        return popcount(self.mask)

    @property
    def members(self) -> tuple[int, ...]:
        return members_of(self.mask)

    def complement(self) -> "KSubset":
        return KSubset(self.n, ((1 << self.n) - 1) ^ self.mask)

    def __contains__(self, i: int) -> bool:
        return 1 <= i <= self.n and bool(self.mask >> (i - 1) & 1)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __and__(self, other: "KSubset") -> "KSubset":
        return KSubset(self.n, self.mask & other.mask)

    def __or__(self, other: "KSubset") -> "KSubset":
        return KSubset(self.n, self.mask | other.mask)


@dataclass(frozen=True, slots=True)
class ComplementaryPair:
    """The unordered index pair {i, j} naming a complementary subset.

    A subset belongs to the complementary subset iff it contains exactly
    one of i, j; swapping i and j names the same subset.
    """

    i: int
    j: int

    def __post_init__(self) -> None:
        if self.i == self.j:
            raise ValueError("the two indices must differ")
        if self.i > self.j:
            i, j = self.j, self.i
            object.__setattr__(self, "i", i)
            object.__setattr__(self, "j", j)

    @property
    def mask(self) -> int:
        return (1 << (self.i - 1)) | (1 << (self.j - 1))

    def separates(self, subset_mask: int) -> bool:
        return popcount(subset_mask & self.mask) == 1

    def meets(self, other: "ComplementaryPair") -> bool:
        return bool(self.mask & other.mask)


class CaseTag(enum.Enum):
    """Which regime (n, k) falls into for pair classification.

    The split is symmetric under k -> n-k (complementation maps all the
    statistics onto themselves), so the distance n - 2*min(k, n-k) decides
    the tag; (6, 2) and (6, 4) are the degenerate exceptions.
    """

    GENERIC = "GENERIC"
    N2K1 = "N2K1"
    N2K2 = "N2K2"
    N2K = "N2K"
    EXCEPTIONAL = "EXCEPTIONAL"


def case_tag(n: int, k: int) -> CaseTag:
    if not 1 < k < n - 1:
        raise ValueError(f"need 1 < k < n-1, got (n, k) = ({n}, {k})")
    if n == 6 and k in (2, 4):
        return CaseTag.EXCEPTIONAL
    gap = n - 2 * min(k, n - k)
    if gap == 0:
        return CaseTag.N2K
    if gap == 1:
        return CaseTag.N2K1
    if gap == 2:
        return CaseTag.N2K2
    return CaseTag.GENERIC


def c_formula(n: int, k: int, m: int) -> int:
    """Number of complementary subsets containing a fixed pair with
    m-dimensional intersection: (k-m)^2 + m(n-2k+m)."""
    if not 1 < k < n - 1:
        raise ValueError(f"need 1 < k < n-1, got (n, k) = ({n}, {k})")
    if not 0 <= m <= k - 1:
        raise ValueError(f"need 0 <= m <= k-1, got m = {m}")
    return (k - m) ** 2 + m * (n - 2 * k + m)


def realizable_m_range(n: int, k: int) -> range:
    """Intersection sizes that distinct k-subsets of an n-set can have."""
    return range(max(0, 2 * k - n), k)


def count_complementary_containing(n: int, k: int, x: KSubset, y: KSubset) -> int:
    """Brute-force count of complementary subsets containing both x and y.

    Enumerates all binom(n, 2) index pairs; this is the independent oracle
    against which the closed form c(m) is checked.
    """
    if x.mask == y.mask:
        raise ValueError("the two subsets must be distinct")
    if x.n != n or y.n != n or x.k != k or y.k != k:
        raise ValueError("subset parameters do not match (n, k)")
    count = 0
    for i, j in combinations(range(1, n + 1), 2):
        p = ComplementaryPair(i, j)
        if p.separates(x.mask) and p.separates(y.mask):
            count += 1
    return count


def maximal_inexact(n: int, k: int, i: int, j: int) -> frozenset[KSubset]:
    """Subsets containing both of i, j or neither.

    This is the largest family that survives reshuffling the base inside
    the {i, j} coordinate plane, hence is contained in a second apartment;
    its complement within the apartment is the complementary subset C_ij.
    """
    if i == j:
        raise ValueError("the two indices must differ")
    pair = mask_of((i, j), n)
    out = [
        KSubset(n, m)
        for m in all_ksubset_masks(n, k)
        if (m & pair) == pair or not (m & pair)
    ]
    return frozenset(out)


def complementary_subset(n: int, k: int, i: int, j: int) -> frozenset[KSubset]:
    """C_ij: the subsets containing exactly one of i, j."""
    if i == j:
        raise ValueError("the two indices must differ")
    pair = ComplementaryPair(i, j)
    return frozenset(KSubset(n, m) for m in all_ksubset_masks(n, k) if pair.separates(m))


def complementary_adjacent(
    n: int, k: int, first: ComplementaryPair, second: ComplementaryPair
) -> tuple[bool, int]:
    """Whether two complementary subsets are adjacent (index pairs meet),
    plus the brute-force size of their intersection."""
    if first == second:
        raise ValueError("the two pairs must be distinct")
    size = sum(
        1
        for m in all_ksubset_masks(n, k)
        if first.separates(m) and second.separates(m)
    )
    return first.meets(second), size


def star(n: int, k: int, s: KSubset) -> tuple[KSubset, ...]:
    """All k-subsets containing the (k-1)-subset s; n-k+1 of them."""
    if s.n != n or s.k != k - 1:
        raise ValueError("star needs a (k-1)-subset")
    return tuple(
        KSubset(n, s.mask | (1 << (i - 1)))
        for i in range(1, n + 1)
        if i not in s
    )


def top(n: int, k: int, big: KSubset) -> tuple[KSubset, ...]:
    """All k-subsets contained in the (k+1)-subset big; k+1 of them."""
    if big.n != n or big.k != k + 1:
        raise ValueError("top needs a (k+1)-subset")
    return tuple(KSubset(n, big.mask ^ (1 << (i - 1))) for i in big.members)


def triple_hull(n: int, k: int, x: KSubset, y: KSubset, z: KSubset) -> tuple[int, int]:
    """(|X&Y&Z|, |X|Y|Z|) for three mutually adjacent k-subsets.

    Only (k-1, k+2) and (k-2, k+1) can occur: a common (k-1)-set forces
    the star shape, otherwise the union is pinned to k+1 elements.
    """
    for a, b in ((x, y), (x, z), (y, z)):
        if popcount(a.mask & b.mask) != k - 1:
            raise ValueError("the three subsets must be mutually adjacent")
    return (
        popcount(x.mask & y.mask & z.mask),
        popcount(x.mask | y.mask | z.mask),
    )


def lonely_separating_pairs(n: int, k: int, x: KSubset, y: KSubset) -> list[ComplementaryPair]:
    """Complementary subsets containing both x and y that are adjacent to
    no other complementary subset containing both.

    The tie-breaking statistic for n = 2k + 2: an adjacent pair admits
    exactly one such subset, an orthogonal (disjoint) pair admits none.
    """
    containing = [
        ComplementaryPair(i, j)
        for i, j in combinations(range(1, n + 1), 2)
        if ComplementaryPair(i, j).separates(x.mask)
        and ComplementaryPair(i, j).separates(y.mask)
    ]
    out = []
    for p in containing:
        if not any(p != q and p.meets(q) for q in containing):
            out.append(p)
    return out


def classify_pair(n: int, k: int, x: KSubset, y: KSubset) -> frozenset[int]:
    """Recover the intersection size of a distinct pair from its
    complementary-subset statistics alone.

    Returns a singleton {m} whenever the statistics pin m down, and the
    unordered candidate set {m, k-m} when n = 2k (the two are genuinely
    indistinguishable there).  Refuses at (6, 2) and (6, 4), where every
    statistic is constant across pair types.
    """
    tag = case_tag(n, k)
    if tag is CaseTag.EXCEPTIONAL:
        raise ExceptionalCaseError(
            f"(n, k) = ({n}, {k}): every pair lies in 4 complementary subsets and "
            "all their intersections have size 4, so the intersection dimension "
            "cannot be recovered from these statistics"
        )
    count = count_complementary_containing(n, k, x, y)
    candidates = [m for m in realizable_m_range(n, k) if c_formula(n, k, m) == count]
    if not candidates:
        raise AssertionError(f"count {count} matches no intersection size")
    if len(candidates) == 1:
        return frozenset(candidates)
    if tag is CaseTag.N2K:
        return frozenset(candidates)
    if len(candidates) != 2 or k - 1 not in candidates:
        raise AssertionError(f"unexpected tie {candidates} at (n, k) = ({n}, {k})")
    # Two-way tie between the extreme sizes; adjacency owns a unique
    # complementary subset that is isolated among those containing the pair.
    lonely = lonely_separating_pairs(n, k, x, y)
    if lonely:
        return frozenset({k - 1})
    return frozenset({min(candidates)})
