"""Hot counting kernels: numba JIT loops with a vectorized numpy fallback.

The exhaustive suites test every pair of apartment elements against every
index pair (at n = 12, k = 5 that is ~313k subset pairs x 66 complementary
subsets, plus adjacency post-processing per pair), which dominates the
package runtime.  Both backends produce identical integer tables.

Backend selection:
    ORTHOAPART_BACKEND=numba   JIT kernels (default when numba imports)
    ORTHOAPART_BACKEND=numpy   pure-numpy fallback

`set_backend` overrides the environment at runtime; `benchmarks/` holds a
script comparing the two.
"""

from __future__ import annotations

import os
import warnings
from itertools import combinations

import numpy as np

from .subsets import all_ksubset_masks, mask_of

try:
    from numba import njit

    NUMBA_AVAILABLE = True
except ImportError:  # pragma: no cover - exercised only without numba
    NUMBA_AVAILABLE = False

    def njit(*args, **kwargs):
        def wrap(func):
            return func

        if len(args) == 1 and callable(args[0]):
            return args[0]
        return wrap


_ENV_VAR = "ORTHOAPART_BACKEND"
_VALID = ("numba", "numpy")
_backend: str | None = None


def get_backend() -> str:
    """The active backend name, resolving the environment on first use."""
    global _backend
    if _backend is None:
        requested = os.environ.get(_ENV_VAR, "numba").strip().lower()
        if requested not in _VALID:
            raise ValueError(f"{_ENV_VAR} must be one of {_VALID}, got {requested!r}")
        if requested == "numba" and not NUMBA_AVAILABLE:
            warnings.warn("numba is not importable; falling back to the numpy backend")
            requested = "numpy"
        _backend = requested
    return _backend


def set_backend(name: str) -> None:
    global _backend
    if name not in _VALID:
        raise ValueError(f"backend must be one of {_VALID}, got {name!r}")
    if name == "numba" and not NUMBA_AVAILABLE:
        raise ValueError("numba backend requested but numba is not importable")
    _backend = name


def subset_masks_array(n: int, k: int) -> np.ndarray:
    """All k-subset masks of {1..n} as a sorted uint64 array."""
    return np.array(all_ksubset_masks(n, k), dtype=np.uint64)


def index_pair_data(n: int) -> tuple[list[tuple[int, int]], np.ndarray, np.ndarray]:
    """Index pairs {i, j}, their 2-bit masks, and their meeting relation.

    Two index pairs are adjacent when they share an index; the diagonal of
    the relation is False.
    """
    pairs = list(combinations(range(1, n + 1), 2))
    masks = np.array([mask_of(p, n) for p in pairs], dtype=np.uint64)
    p = len(pairs)
    adj = np.zeros((p, p), dtype=np.bool_)
    for s in range(p):
        a = set(pairs[s])
        for t in range(s + 1, p):
            if a & set(pairs[t]):
                adj[s, t] = True
                adj[t, s] = True
    return pairs, masks, adj


# =====================================================================
# numba kernels
# =====================================================================


@njit(cache=True)
def _nb_popcount(x):
    c = 0
    while x:
        x &= x - np.uint64(1)
        c += 1
    return c


@njit(cache=True)
def _nb_separation(masks, pair_masks):
    nsub = masks.shape[0]
    npair = pair_masks.shape[0]
    sep = np.zeros((nsub, npair), dtype=np.uint8)
    for a in range(nsub):
        for p in range(npair):
            if _nb_popcount(masks[a] & pair_masks[p]) == 1:
                sep[a, p] = 1
    return sep


@njit(cache=True)
def _nb_pair_count_table(masks, pair_masks):
    sep = _nb_separation(masks, pair_masks)
    nsub = sep.shape[0]
    npair = sep.shape[1]
    out = np.zeros((nsub, nsub), dtype=np.int32)
    for a in range(nsub):
        for b in range(a + 1, nsub):
            c = 0
            for p in range(npair):
                if sep[a, p] and sep[b, p]:
                    c += 1
            out[a, b] = c
            out[b, a] = c
    return out


@njit(cache=True)
def _nb_lonely_count_table(masks, pair_masks, pair_adj):
    sep = _nb_separation(masks, pair_masks)
    nsub = sep.shape[0]
    npair = sep.shape[1]
    out = np.zeros((nsub, nsub), dtype=np.int32)
    buf = np.empty(npair, dtype=np.int64)
    for a in range(nsub):
        for b in range(a + 1, nsub):
            cnt = 0
            for p in range(npair):
                if sep[a, p] and sep[b, p]:
                    buf[cnt] = p
                    cnt += 1
            lonely = 0
            for s in range(cnt):
                isolated = True
                for t in range(cnt):
                    if t != s and pair_adj[buf[s], buf[t]]:
                        isolated = False
                        break
                if isolated:
                    lonely += 1
            out[a, b] = lonely
            out[b, a] = lonely
    return out


@njit(cache=True)
def _nb_comp_intersection_table(masks, pair_masks):
    sep = _nb_separation(masks, pair_masks)
    nsub = sep.shape[0]
    npair = sep.shape[1]
    out = np.zeros((npair, npair), dtype=np.int64)
    for p in range(npair):
        for q in range(p, npair):
            c = 0
            for a in range(nsub):
                if sep[a, p] and sep[a, q]:
                    c += 1
            out[p, q] = c
            out[q, p] = c
    return out


# =====================================================================
# numpy fallback
# =====================================================================


def _np_separation(masks, pair_masks):
    return np.bitwise_count(masks[:, None] & pair_masks[None, :]) == 1


def _np_pair_count_table(masks, pair_masks):
    mem = _np_separation(masks, pair_masks).astype(np.float64)
    out = (mem @ mem.T).astype(np.int32)
    np.fill_diagonal(out, 0)
    return out


def _np_lonely_count_table(masks, pair_masks, pair_adj):
    mem = _np_separation(masks, pair_masks)
    memf = mem.astype(np.float64)
    adjf = pair_adj.astype(np.float64)
    nsub = mem.shape[0]
    out = np.zeros((nsub, nsub), dtype=np.int32)
    for a in range(nsub):
        both = mem[a] & mem
        companions = both.astype(np.float64) @ adjf
        out[a] = (both & (companions == 0)).sum(axis=1)
    np.fill_diagonal(out, 0)
    return out


def _np_comp_intersection_table(masks, pair_masks):
    mem = _np_separation(masks, pair_masks).astype(np.float64)
    return (mem.T @ mem).astype(np.int64)


# =====================================================================
# dispatch
# =====================================================================


def _as_masks(arr) -> np.ndarray:
    return np.ascontiguousarray(np.asarray(arr, dtype=np.uint64))


def pair_count_table(masks, pair_masks) -> np.ndarray:
    """counts[a, b] = number of complementary subsets containing both the
    a-th and b-th subset (diagonal zeroed)."""
    masks = _as_masks(masks)
    pair_masks = _as_masks(pair_masks)
    if get_backend() == "numba":
        return _nb_pair_count_table(masks, pair_masks)
    return _np_pair_count_table(masks, pair_masks)


def lonely_count_table(masks, pair_masks, pair_adj) -> np.ndarray:
    """lonely[a, b] = number of complementary subsets containing both
    subsets and adjacent to no other complementary subset containing both."""
    masks = _as_masks(masks)
    pair_masks = _as_masks(pair_masks)
    pair_adj = np.ascontiguousarray(np.asarray(pair_adj, dtype=np.bool_))
    if get_backend() == "numba":
        return _nb_lonely_count_table(masks, pair_masks, pair_adj)
    return _np_lonely_count_table(masks, pair_masks, pair_adj)


def comp_intersection_table(masks, pair_masks) -> np.ndarray:
    """sizes[p, q] = |C_p & C_q| over the given subsets (diagonal |C_p|)."""
    masks = _as_masks(masks)
    pair_masks = _as_masks(pair_masks)
    if get_backend() == "numba":
        return _nb_comp_intersection_table(masks, pair_masks)
    return _np_comp_intersection_table(masks, pair_masks)
