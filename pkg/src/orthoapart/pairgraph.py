"""The complement-pair graph for n = 2k and its maximal cliques.

When n = 2k the complement of a k-subset is again a k-subset, so the
apartment folds into unordered pairs {X, X^c}.  Two pairs are adjacent
when some choice of representatives is adjacent in the Johnson graph,
i.e. |X & Y| is k-1 or 1.  The maximal cliques of this graph are exactly
the families C(S) collecting the pairs whose representative contains a
fixed (k-1)-subset S; the clique enumeration below is the independent
route used to verify that.
"""

from __future__ import annotations

from dataclasses import dataclass

from .subsets import KSubset, all_ksubset_masks, popcount


@dataclass(frozen=True, slots=True)
class PairVertex:
    """An unordered pair {X, complement(X)} of k-subsets, n = 2k.

    The stored representative is the member containing index 1, so equal
    pairs always store equal masks.
    """

    n: int
    rep: int

    @staticmethod
    def of(n: int, mask: int) -> "PairVertex":
        if n % 2:
            raise ValueError("pair vertices need an even ground set")
        comp = ((1 << n) - 1) ^ mask
        return PairVertex(n, mask if mask & 1 else comp)

    @property
    def members(self) -> tuple[KSubset, KSubset]:
        a = KSubset(self.n, self.rep)
        return a, a.complement()


class PairGraph:
    """Adjacency over all complement pairs, with bitset rows."""

    def __init__(self, n: int):
        if n % 2 or n < 4:
            raise ValueError(f"the pair graph needs n = 2k >= 4, got n = {n}")
        self.n = n
        self.k = n // 2
        self.vertices = tuple(
            PairVertex.of(n, m) for m in all_ksubset_masks(n, self.k) if m & 1
        )
        self.index = {v: i for i, v in enumerate(self.vertices)}
        full = (1 << n) - 1
        adjacency = []
        for v in self.vertices:
            row = 0
            for j, w in enumerate(self.vertices):
                if v == w:
                    continue
                inter = popcount(v.rep & w.rep)
                if inter == self.k - 1 or popcount(v.rep & (full ^ w.rep)) == self.k - 1:
                    row |= 1 << j
            adjacency.append(row)
        self.adjacency = tuple(adjacency)

    def are_adjacent(self, v: PairVertex, w: PairVertex) -> bool:
        return bool(self.adjacency[self.index[v]] >> self.index[w] & 1)


def gamma_prime(n: int) -> PairGraph:
    """The graph on complement pairs; defined only for n = 2k."""
    return PairGraph(n)


def clique_C(n: int, s: KSubset) -> frozenset[PairVertex]:
    """The pairs {X, X^c} with X or X^c containing the (k-1)-subset s."""
    if n % 2:
        raise ValueError("needs n = 2k")
    k = n // 2
    if s.n != n or s.k != k - 1:
        raise ValueError("clique_C needs a (k-1)-subset")
    out = {
        PairVertex.of(n, s.mask | (1 << (i - 1)))
        for i in range(1, n + 1)
        if i not in s
    }
    return frozenset(out)


def enumerate_maximal_cliques(graph: PairGraph) -> list[frozenset[PairVertex]]:
    """All maximal cliques, via Bron-Kerbosch with pivoting.

    Deterministic: the result is sorted by the sorted vertex index tuples.
    """
    adj = graph.adjacency
    found: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            found.append(r)
            return
        both = p | x
        pivot = -1
        best = -1
        m = both
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            deg = popcount(adj[v] & p)
            if deg > best:
                best = deg
                pivot = v
        candidates = p & ~adj[pivot]
        while candidates:
            vbit = candidates & -candidates
            v = vbit.bit_length() - 1
            candidates &= candidates - 1
            expand(r | vbit, p & adj[v], x & adj[v])
            p &= ~vbit
            x |= vbit

    expand(0, (1 << len(graph.vertices)) - 1, 0)
    cliques = []
    for bits in found:
        idxs = []
        m = bits
        while m:
            idxs.append((m & -m).bit_length() - 1)
            m &= m - 1
        cliques.append(frozenset(graph.vertices[i] for i in idxs))
    cliques.sort(key=lambda c: sorted(graph.index[v] for v in c))
    return cliques


def cliques_containing(graph: PairGraph, cliques: list[frozenset[PairVertex]],
                       vertices: frozenset[PairVertex]) -> list[frozenset[PairVertex]]:
    return [c for c in cliques if vertices <= c]
