"""Named verification suites over (n, k) configurations.

Each suite checks one family of facts exhaustively at desk scale and
produces one flat record per configuration.  Suites whose hypotheses a
configuration fails yield SKIPPED records (never errors) so that blanket
range scans stay ergonomic.  All sampling is derived from the run seed,
so reports are reproducible byte for byte apart from timing.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from itertools import combinations
from math import comb

import numpy as np

from . import kernels
from .apartments import (
    OrthoBase,
    build_compatible_witnesses,
    commuting_projections,
    compatible,
    inexact_witness,
)
from .errors import ExceptionalCaseError
from .harness import (
    NON_INDUCED,
    adversarial_scaffolds,
    describe_subspace,
    detect_noninduced,
    frame_samples,
    recover_operator_k1,
    scaffold_from_stabilizing_spec,
    verify_apartment_preservation,
    verify_dim_pattern,
    verify_pairclique_level_map,
    verify_star_pattern,
)
from .rationals import gr
from .spaces import HermitianForm, Subspace, intersect, orthocomplement
from .subsets import (
    CaseTag,
    KSubset,
    c_formula,
    case_tag,
    classify_pair,
    realizable_m_range,
)
from .pairgraph import clique_C, enumerate_maximal_cliques, gamma_prime
from .transforms import TransformSpec, induced_map, random_transform_spec

EXHAUSTIVE_CAP = 12  # full pair enumerations stop here; the verified targets end at 12


@dataclass
class Record:
    suite: str
    n: int
    k: int
    status: str  # PASS | FAIL | SKIPPED
    anchor: str
    details: str = ""
    witness: str = ""
    millis: float = 0.0

    def as_dict(self) -> dict:
        return {
            "suite": self.suite,
            "n": self.n,
            "k": self.k,
            "status": self.status,
            "anchor": self.anchor,
            "details": self.details,
            "witness": self.witness,
            "millis": round(self.millis, 3),
        }


@dataclass
class Outcome:
    status: str
    anchor: str
    details: str = ""
    witness: str = ""


def _passfail(ok: bool, anchor: str, details: str = "", witness: str = "") -> Outcome:
    return Outcome("PASS" if ok else "FAIL", anchor, details, witness if not ok else "")


def _skip(anchor: str, reason: str) -> Outcome:
    return Outcome("SKIPPED", anchor, witness=reason)


def _tables(n: int, k: int):
    masks = kernels.subset_masks_array(n, k)
    pairs, pmasks, padj = kernels.index_pair_data(n)
    return masks, pairs, pmasks, padj


def _expected_count_table(n: int, k: int, masks: np.ndarray) -> np.ndarray:
    inter = np.bitwise_count(masks[:, None] & masks[None, :])
    expected = np.zeros(inter.shape, dtype=np.int64)
    for m in realizable_m_range(n, k):
        expected[inter == m] = c_formula(n, k, m)
    np.fill_diagonal(expected, 0)
    return expected


def _first_mismatch_witness(n: int, masks: np.ndarray, got, want) -> str:
    bad = np.argwhere(np.asarray(got) != np.asarray(want))
    a, b = (int(v) for v in bad[0])
    x = KSubset(n, int(masks[a]))
    y = KSubset(n, int(masks[b]))
    return (
        f"X = {x.members}, Y = {y.members}: counted {int(np.asarray(got)[a, b])}, "
        f"expected {int(np.asarray(want)[a, b])}"
    )


# ---------------------------------------------------------------------
# suites
# ---------------------------------------------------------------------


def suite_pair_counts(n: int, k: int, seed: int) -> Outcome:
    """Brute-force complementary-subset counts equal the closed form for
    every distinct pair."""
    anchor = "pair-count-formula"
    if n > EXHAUSTIVE_CAP:
        return _skip(anchor, f"exhaustive enumeration capped at n = {EXHAUSTIVE_CAP}")
    masks, _, pmasks, _ = _tables(n, k)
    counts = kernels.pair_count_table(masks, pmasks)
    expected = _expected_count_table(n, k, masks)
    ok = bool((counts == expected).all())
    witness = "" if ok else _first_mismatch_witness(n, masks, counts, expected)
    npairs = len(masks) * (len(masks) - 1) // 2
    return _passfail(ok, anchor, details=f"pairs={npairs}", witness=witness)


def suite_inexact(n: int, k: int, seed: int) -> Outcome:
    """Cardinalities of the two-index families: subsets through both or
    neither index, and their complement within the apartment."""
    anchor = "inexact-cardinalities"
    if n > EXHAUSTIVE_CAP:
        return _skip(anchor, f"exhaustive enumeration capped at n = {EXHAUSTIVE_CAP}")
    masks = kernels.subset_masks_array(n, k)
    want_inexact = comb(n - 2, k - 2) + comb(n - 2, k)
    want_comp = 2 * comb(n - 2, k - 1)
    if want_inexact + want_comp != comb(n, k):
        return _passfail(False, anchor, witness="cardinality identity fails")
    for i, j in combinations(range(1, n + 1), 2):
        pair = (1 << (i - 1)) | (1 << (j - 1))
        hits = np.bitwise_count(masks & np.uint64(pair))
        got_inexact = int(((hits == 2) | (hits == 0)).sum())
        got_comp = int((hits == 1).sum())
        if got_inexact != want_inexact or got_comp != want_comp:
            return _passfail(
                False,
                anchor,
                witness=f"(i, j) = ({i}, {j}): sizes {got_inexact}/{got_comp}, "
                f"expected {want_inexact}/{want_comp}",
            )
    return _passfail(True, anchor, details=f"inexact={want_inexact} complementary={want_comp}")


def suite_classify(n: int, k: int, seed: int) -> Outcome:
    """Pair statistics recover the intersection dimension (or provably
    cannot, at the degenerate parameters)."""
    tag = case_tag(n, k)
    if tag is CaseTag.EXCEPTIONAL:
        return _exceptional_outcome(n, k)
    anchor = "pair-classification"
    if n > EXHAUSTIVE_CAP:
        return _skip(anchor, f"exhaustive enumeration capped at n = {EXHAUSTIVE_CAP}")
    masks, _, pmasks, padj = _tables(n, k)
    counts = kernels.pair_count_table(masks, pmasks)
    inter = np.bitwise_count(masks[:, None] & masks[None, :])
    off_diag = ~np.eye(len(masks), dtype=bool)

    by_value: dict[int, list[int]] = {}
    for m in realizable_m_range(n, k):
        by_value.setdefault(c_formula(n, k, m), []).append(m)

    for value, ms in sorted(by_value.items()):
        sel = off_diag & (counts == value)
        if len(ms) == 1:
            ok = bool((inter[sel] == ms[0]).all())
            if not ok:
                return _passfail(False, anchor, witness=f"count {value} does not pin m = {ms[0]}")
        elif n == 2 * k:
            ok = bool(np.isin(inter[sel], ms).all())
            if not ok:
                return _passfail(False, anchor, witness=f"count {value} outside candidates {ms}")
        else:
            lonely = kernels.lonely_count_table(masks, pmasks, padj)
            adj_sel = sel & (inter == k - 1)
            other_sel = sel & (inter != k - 1)
            if not bool((lonely[adj_sel] == 1).all() and (lonely[other_sel] == 0).all()):
                return _passfail(
                    False, anchor, witness=f"tie {ms} not resolved by isolated subsets"
                )
    # spot-check the public classifier against a seeded sample of pairs
    rng = random.Random(seed)
    nmask = len(masks)
    for _ in range(min(50, nmask * (nmask - 1) // 2)):
        a, b = rng.randrange(nmask), rng.randrange(nmask)
        if a == b:
            continue
        x = KSubset(n, int(masks[a]))
        y = KSubset(n, int(masks[b]))
        got = classify_pair(n, k, x, y)
        true_m = int(inter[a, b])
        if n == 2 * k:
            want = frozenset({true_m, k - true_m}) & frozenset(realizable_m_range(n, k))
        else:
            want = frozenset({true_m})
        if got != want:
            return _passfail(
                False, anchor, witness=f"classify({x.members}, {y.members}) = {set(got)}"
            )
    ties = [ms for ms in by_value.values() if len(ms) > 1]
    return _passfail(True, anchor, details=f"case={tag.value} ties={len(ties)}")


def _exceptional_outcome(n: int, k: int) -> Outcome:
    anchor = "exceptional-degeneracy"
    masks, _, pmasks, _ = _tables(n, k)
    counts = kernels.pair_count_table(masks, pmasks)
    off_diag = ~np.eye(len(masks), dtype=bool)
    if not bool((counts[off_diag] == 4).all()):
        return _passfail(False, anchor, witness="pair counts are not constant 4")
    inter = kernels.comp_intersection_table(masks, pmasks)
    off = ~np.eye(inter.shape[0], dtype=bool)
    if not bool((inter[off] == 4).all()):
        return _passfail(False, anchor, witness="complementary intersections are not constant 4")
    x = KSubset.of(n, range(1, k + 1))
    y = KSubset.of(n, range(2, k + 2))
    try:
        classify_pair(n, k, x, y)
    except ExceptionalCaseError:
        return _passfail(True, anchor, details="pair_count=4 intersection=4 refused=yes")
    return _passfail(False, anchor, witness="classifier did not refuse")


def suite_resolution(n: int, k: int, seed: int) -> Outcome:
    """Tie breaking where the extreme counts collide: adjacent pairs own
    exactly one isolated complementary subset, the other tied class none."""
    anchor = "tie-resolution"
    tag = case_tag(n, k) if 1 < k < n - 1 else None
    if tag is CaseTag.EXCEPTIONAL:
        return _skip(anchor, "degenerate parameters; see exceptional-degeneracy")
    if tag is not CaseTag.N2K2:
        return _skip(anchor, "tie resolution applies when |n - 2k| = 2")
    if n > EXHAUSTIVE_CAP:
        return _skip(anchor, f"exhaustive enumeration capped at n = {EXHAUSTIVE_CAP}")
    masks, _, pmasks, padj = _tables(n, k)
    lonely = kernels.lonely_count_table(masks, pmasks, padj)
    inter = np.bitwise_count(masks[:, None] & masks[None, :])
    off_diag = ~np.eye(len(masks), dtype=bool)
    low = max(0, 2 * k - n)
    adj_sel = off_diag & (inter == k - 1)
    low_sel = off_diag & (inter == low)
    ok_adj = bool((lonely[adj_sel] == 1).all())
    ok_low = bool((lonely[low_sel] == 0).all())
    if not (ok_adj and ok_low):
        which = "adjacent" if not ok_adj else "non-adjacent"
        sel = adj_sel if not ok_adj else low_sel
        bad = np.argwhere(sel & (lonely != (1 if not ok_adj else 0)))
        a, b = (int(v) for v in bad[0])
        return _passfail(
            False,
            anchor,
            witness=f"{which} pair {KSubset(n, int(masks[a])).members} / "
            f"{KSubset(n, int(masks[b])).members} has {int(lonely[a, b])} isolated subsets",
        )
    return _passfail(
        True,
        anchor,
        details=f"adjacent_pairs={int(adj_sel.sum()) // 2} tied_pairs={int(low_sel.sum()) // 2}",
    )


def suite_coincidence(n: int, k: int, seed: int) -> Outcome:
    """Complementary-subset intersection sizes match the two binomial
    forms, which coincide exactly when k = 2."""
    anchor = "adjacency-coincidence"
    if n > EXHAUSTIVE_CAP:
        return _skip(anchor, f"exhaustive enumeration capped at n = {EXHAUSTIVE_CAP}")
    masks, pairs, pmasks, padj = _tables(n, k)
    table = kernels.comp_intersection_table(masks, pmasks)
    want_adj = comb(n - 2, k - 1)
    want_non = 4 * comb(n - 4, k - 2) if n >= 4 else 0
    p = len(pairs)
    for s in range(p):
        for t in range(s + 1, p):
            want = want_adj if padj[s, t] else want_non
            if int(table[s, t]) != want:
                return _passfail(
                    False,
                    anchor,
                    witness=f"C{pairs[s]} & C{pairs[t]}: {int(table[s, t])} != {want}",
                )
    flag = comb(2 * k, k - 1) == 4 * comb(2 * k - 2, k - 2)
    if flag != (k == 2):
        return _passfail(False, anchor, witness=f"binomial coincidence at k = {k}")
    return _passfail(
        True,
        anchor,
        details=f"adjacent={want_adj} nonadjacent={want_non} coincide={str(flag).lower()}",
    )


def suite_pair_graph(n: int, k: int, seed: int) -> Outcome:
    """Maximal cliques of the complement-pair graph are exactly the
    families over (k-1)-subsets."""
    anchor = "pairgraph-cliques"
    if n != 2 * k:
        return _skip(anchor, "the complement-pair graph needs n = 2k")
    if n < 8:
        return _skip(anchor, "clique family matches the subset model only for n = 2k >= 8")
    if n > 12:
        return _skip(anchor, "clique enumeration capped at n = 12")
    graph = gamma_prime(n)
    cliques = enumerate_maximal_cliques(graph)
    family = {}
    for members in combinations(range(1, n + 1), k - 1):
        family[members] = clique_C(n, KSubset.of(n, members))
    ok = (
        len(graph.vertices) == comb(n, k) // 2
        and len(cliques) == comb(n, k - 1)
        and all(len(c) == k + 1 for c in cliques)
        and set(cliques) == set(family.values())
        and len(set(family.values())) == comb(n, k - 1)
    )
    witness = "" if ok else (
        f"vertices={len(graph.vertices)} cliques={len(cliques)} "
        f"sizes={sorted({len(c) for c in cliques})}"
    )
    return _passfail(
        ok,
        anchor,
        details=f"vertices={len(graph.vertices)} cliques={len(cliques)} clique_size={k + 1}",
        witness=witness,
    )


def suite_triples(n: int, k: int, seed: int) -> Outcome:
    """Hull dichotomy for mutually adjacent triples, and uniqueness of the
    containing clique in the complement-pair graph."""
    anchor = "triple-hulls"
    if n != 2 * k or n < 8:
        return _skip(anchor, "triple checks run on the pair graph, n = 2k >= 8")
    if n > 10:
        return _skip(anchor, "triple enumeration capped at n = 10")
    from .pairgraph import PairVertex

    masks = list(kernels.subset_masks_array(n, k))
    masks = [int(m) for m in masks]
    count = len(masks)
    adj = [[False] * count for _ in range(count)]
    for a in range(count):
        for b in range(a + 1, count):
            if bin(masks[a] & masks[b]).count("1") == k - 1:
                adj[a][b] = adj[b][a] = True
    graph = gamma_prime(n)
    cliques = enumerate_maximal_cliques(graph)
    membership = {v: 0 for v in graph.vertices}
    for ci, c in enumerate(cliques):
        for v in c:
            membership[v] |= 1 << ci
    triples = 0
    for a in range(count):
        for b in range(a + 1, count):
            if not adj[a][b]:
                continue
            for c in range(b + 1, count):
                if not (adj[a][c] and adj[b][c]):
                    continue
                triples += 1
                cap = bin(masks[a] & masks[b] & masks[c]).count("1")
                cup = bin(masks[a] | masks[b] | masks[c]).count("1")
                if (cap, cup) not in ((k - 1, k + 2), (k - 2, k + 1)):
                    return _passfail(
                        False,
                        anchor,
                        witness=f"triple {masks[a]:b}/{masks[b]:b}/{masks[c]:b} "
                        f"has hull ({cap}, {cup})",
                    )
                common = (
                    membership[PairVertex.of(n, masks[a])]
                    & membership[PairVertex.of(n, masks[b])]
                    & membership[PairVertex.of(n, masks[c])]
                )
                if bin(common).count("1") != 1:
                    return _passfail(
                        False,
                        anchor,
                        witness=f"triple lies in {bin(common).count('1')} maximal cliques",
                    )
    return _passfail(True, anchor, details=f"triples={triples}")


def suite_cases(n: int, k: int, seed: int) -> Outcome:
    """Shape of the count function across intersection sizes: who ties with
    whom is exactly what the regime tag predicts."""
    anchor = "case-structure"
    tag = case_tag(n, k)
    values = [c_formula(n, k, m) for m in range(k)]
    ok = True
    if tag in (CaseTag.GENERIC, CaseTag.N2K1, CaseTag.N2K2):
        lo = max(0, 2 * k - n)
        real = list(range(lo, k))
        vals = {m: c_formula(n, k, m) for m in real}
        if tag is CaseTag.GENERIC:
            ok = all(vals[k - 1] > vals[m] for m in real[:-1])
        if tag is CaseTag.N2K1:
            ok = len(set(vals.values())) == len(real)
        if tag is CaseTag.N2K2:
            ok = vals[k - 1] == vals[lo] and all(
                vals[k - 1] > vals[m] for m in real if m not in (lo, k - 1)
            )
    elif tag is CaseTag.N2K:
        ok = all(
            (c_formula(n, k, a) == c_formula(n, k, b)) == (b in (a, k - a))
            for a in range(k)
            for b in range(k)
        ) and all(c_formula(n, k, 0) > c_formula(n, k, m) for m in range(1, k))
    else:  # EXCEPTIONAL: constancy verified by the degeneracy suite
        real = list(realizable_m_range(n, k))
        ok = len({c_formula(n, k, m) for m in real}) == 1
    return _passfail(
        ok,
        anchor,
        details="c=" + "|".join(str(v) for v in values) + f" case={tag.value}",
        witness="" if ok else f"c-values {values} break the {tag.value} shape",
    )


_COMPAT_CONFIGS = ((4, 2), (5, 2), (6, 3))


def _random_subspace(rng: random.Random, n: int, k: int) -> Subspace:
    while True:
        rows = [
            [gr(rng.randint(-2, 2), rng.randint(-1, 1)) for _ in range(n)]
            for _ in range(k)
        ]
        s = Subspace.from_vectors(n, rows)
        if s.k == k:
            return s


def suite_compat(n: int, k: int, seed: int) -> Outcome:
    """Decomposition-based compatibility agrees with commuting projections
    on a structured corpus plus seeded random pairs."""
    anchor = "compatibility-oracles"
    if (n, k) not in _COMPAT_CONFIGS:
        return _skip(anchor, f"numeric corpus runs at {_COMPAT_CONFIGS}")
    form = HermitianForm(n)
    rng = random.Random(f"compat:{seed}:{n}:{k}")
    corpus: list[tuple[Subspace, Subspace]] = []
    base = OrthoBase.standard(n)
    apartment = list(s for _, s in base.apartment(k).items())
    corpus.extend((apartment[i], apartment[j]) for i in range(len(apartment)) for j in range(i, len(apartment)))
    tilted = inexact_witness(base, 1, 2).apartment(k)
    corpus.extend((apartment[0], s) for _, s in tilted.items())
    line = Subspace.line([1] * n)
    corpus.append((line, orthocomplement(line, form)))
    for _ in range(1000):
        corpus.append((_random_subspace(rng, n, k), _random_subspace(rng, n, k)))
    checked = 0
    for x, y in corpus:
        a = compatible(x, y, form)
        b = commuting_projections(x, y, form)
        if a != b:
            return _passfail(
                False,
                anchor,
                witness=f"{describe_subspace(x)} vs {describe_subspace(y)}: "
                f"decomposition={a} projections={b}",
            )
        checked += 1
    return _passfail(True, anchor, details=f"pairs={checked}")


def suite_witnesses(n: int, k: int, seed: int) -> Outcome:
    """Self-checks of the two constructions: the tilted base swallows the
    through-both/through-neither family, and adjacent pairs get mutually
    compatible companions."""
    anchor = "witness-selfcheck"
    if n > 10:
        return _skip(anchor, "witness self-checks capped at n = 10")
    form = HermitianForm(n)
    base = OrthoBase.standard(n)
    new_base = inexact_witness(base, 1, 2)
    old_ap = base.apartment(k)
    new_ap = new_base.apartment(k)
    pair = KSubset.of(n, (1, 2))
    for subset, s in old_ap.items():
        hits = len(set(subset.members) & {1, 2})
        if hits in (0, 2) and s not in new_ap:
            return _passfail(
                False, anchor, witness=f"{subset.members} missing from the tilted apartment"
            )
    if old_ap.subspace_set() == new_ap.subspace_set():
        return _passfail(False, anchor, witness="tilted apartment equals the original")

    budget = n - k - 1
    if budget < 2:
        return _skip(anchor, f"n-k-1 = {budget} < 2")
    x = Subspace.coordinate(n, range(1, k + 1))
    y_rows = [[1 if c == r else 0 for c in range(n)] for r in range(k - 1)]
    y_rows.append([1 if c in (k - 1, k) else 0 for c in range(n)])
    y = Subspace.from_vectors(n, y_rows)
    counts = [2, 3] if budget >= 3 else [2]
    total_checks = 0
    for count in counts:
        ws = build_compatible_witnesses(x, y, form, count)
        for i, w in enumerate(ws):
            for other in (x, y, *ws[i + 1 :]):
                if not compatible(w, other, form):
                    return _passfail(
                        False,
                        anchor,
                        witness=f"witness {describe_subspace(w)} incompatible with "
                        f"{describe_subspace(other)}",
                    )
                total_checks += 1
            for anchor_space in (x, y):
                if intersect(w, anchor_space).k != k - 1:
                    return _passfail(
                        False, anchor, witness=f"witness not adjacent to {describe_subspace(anchor_space)}"
                    )
    return _passfail(True, anchor, details=f"compat_checks={total_checks} counts={counts}")


def suite_rigidity(n: int, k: int, seed: int) -> Outcome:
    """Induced maps pass the structural checks; the fixed adversarial
    tables are flagged with witnesses."""
    anchor = "rigidity-harness"
    if n > 9 and n != 2 * k:
        return _skip(anchor, "rigidity checks capped at n = 9 for n != 2k")
    if n == 2 * k and n > 8:
        return _skip(anchor, "rigidity checks capped at n = 8 for n = 2k")
    rng = random.Random(f"rigidity:{seed}:{n}:{k}")
    form = HermitianForm(n)
    base = OrthoBase.standard(n)
    details = []

    spec = random_transform_spec(rng, n, allow_perp=False)
    bases = [base, inexact_witness(base, 1, 2)]
    rep = verify_apartment_preservation(spec, bases, k)
    if not rep.passed:
        return _passfail(False, anchor, witness=rep.first_failure().witness or "apartment image")
    details.append("apartments=ok")

    if n != 2 * k:
        if comb(n, k - 1) * (n - k + 1) <= 600:
            rep = verify_star_pattern(spec, base, k)
            if not rep.passed:
                return _passfail(False, anchor, witness=rep.first_failure().witness or "star image")
            details.append("stars=ok")
        else:
            details.append("stars=capped")
    else:
        budget = n - k - 1
        if budget < 3:
            details.append(f"witness_budget=n-k-1={budget}<3")
        if n == 8:
            perm_spec = TransformSpec(spec_matrix_permutation(rng, n))
            flip = Subspace.coordinate(n, range(1, k + 1))
            scaffold = scaffold_from_stabilizing_spec(perm_spec, base, k, flip_pairs=[flip])
            rep = verify_dim_pattern(perm_spec, scaffold)
            if not rep.passed:
                return _passfail(False, anchor, witness=rep.first_failure().witness or "dim pattern")
            rep = verify_pairclique_level_map(spec, base)
            if not rep.passed:
                return _passfail(False, anchor, witness=rep.first_failure().witness or "level map")
            details.append("dim_pattern=ok level_map=ok")

    if (n, k) in ((5, 2), (8, 4)):
        for name, scaffold in adversarial_scaffolds(n, k):
            verdict = detect_noninduced(scaffold)
            if verdict.verdict != NON_INDUCED:
                return _passfail(
                    False, anchor, witness=f"adversarial table {name} was not flagged"
                )
        details.append("adversarial=flagged")

    if k == 2 and n in (4, 5):
        for trial in range(5):
            t = random_transform_spec(rng, n)
            rec = recover_operator_k1(frame_samples(t, n), n)
            for _ in range(20):
                line = _random_subspace(rng, n, 1)
                if induced_map(rec, line) != induced_map(t, line):
                    return _passfail(
                        False, anchor, witness=f"recovery round trip differs on {describe_subspace(line)}"
                    )
        details.append("recovery=ok")

    return _passfail(True, anchor, details=" ".join(details))


def spec_matrix_permutation(rng: random.Random, n: int):
    """A random permutation matrix (stabilizes every coordinate apartment)."""
    from .matrices import ExactMatrix

    perm = list(range(n))
    rng.shuffle(perm)
    return ExactMatrix.from_rows(
        [[1 if c == perm[r] else 0 for c in range(n)] for r in range(n)]
    )


SUITES: dict[str, tuple] = {
    "pair-counts": (suite_pair_counts, ("lemma2",)),
    "cases": (suite_cases, ("case-table",)),
    "classify": (suite_classify, ()),
    "resolution": (suite_resolution, ()),
    "coincidence": (suite_coincidence, ()),
    "inexact": (suite_inexact, ()),
    "pair-graph": (suite_pair_graph, ("gamma-prime",)),
    "triples": (suite_triples, ()),
    "compat": (suite_compat, ()),
    "witnesses": (suite_witnesses, ()),
    "rigidity": (suite_rigidity, ()),
}


def resolve_suite_names(requested: list[str] | None) -> list[str]:
    if not requested:
        return list(SUITES)
    alias_map = {}
    for name, (_, aliases) in SUITES.items():
        alias_map[name] = name
        for a in aliases:
            alias_map[a] = name
    out = []
    for r in requested:
        if r not in alias_map:
            raise ValueError(f"unknown suite {r!r}; available: {', '.join(SUITES)}")
        if alias_map[r] not in out:
            out.append(alias_map[r])
    return out


def valid_k_values(n: int, requested: list[int] | None) -> list[tuple[int, bool]]:
    """(k, valid) pairs for a configuration; invalid k become SKIPPED rows."""
    if requested is None:
        return [(k, True) for k in range(2, n - 1)]
    return [(k, 1 < k < n - 1) for k in requested]


def run_suites(
    n_values: list[int],
    k_requested: list[int] | None,
    suite_names: list[str],
    seed: int,
) -> list[Record]:
    records = []
    for suite in suite_names:
        func, _ = SUITES[suite]
        for n in n_values:
            for k, valid in valid_k_values(n, k_requested):
                start = time.perf_counter()
                if not valid:
                    outcome = Outcome(
                        "SKIPPED", "configuration", witness=f"k = {k} outside 1 < k < n-1"
                    )
                else:
                    outcome = func(n, k, seed)
                records.append(
                    Record(
                        suite=suite,
                        n=n,
                        k=k,
                        status=outcome.status,
                        anchor=outcome.anchor,
                        details=outcome.details,
                        witness=outcome.witness,
                        millis=(time.perf_counter() - start) * 1000.0,
                    )
                )
    records.sort(key=lambda r: (r.suite, r.n, r.k))
    return records
