"""Finite-scaffold verification of the rigidity behaviors of induced maps.

A scaffold is an explicit bijective image table on a finite family of
k-subspaces.  The harness checks the forward facts exactly (an induced
map preserves apartments, intersection-dimension patterns, and star
structure) and, in the other direction, falsifies candidate tables whose
apartment images break.  A clean verdict on a finite scaffold is
consistency, never a proof that a table extends to an induced map; the
report banner states this scope.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb
from pathlib import Path
from typing import Iterable, Sequence

from .apartments import NumericApartment, OrthoBase, compatible
from .errors import SampleFitError, ScaffoldError
from .matrices import ExactMatrix
from .rationals import GaussianRational, gr
from .spaces import HermitianForm, Subspace, intersect, orthocomplement, subspace_sum
from .subsets import KSubset
from .transforms import TransformSpec, induced_map, map_base

REPORT_SCOPE = (
    "forward checks verify induced maps exactly; non-induced detection is "
    "falsification on finite scaffolds and a clean verdict is consistency, "
    "not proof"
)

INDUCED_CONSISTENT = "INDUCED-CONSISTENT"
NON_INDUCED = "NON-INDUCED"


@dataclass
class CheckResult:
    name: str
    passed: bool
    witness: str | None = None
    millis: float = 0.0


@dataclass
class VerificationReport:
    config: dict
    results: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def first_failure(self) -> CheckResult | None:
        for r in self.results:
            if not r.passed:
                return r
        return None


class _Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.millis = (time.perf_counter() - self.start) * 1000.0


def describe_subspace(s: Subspace) -> str:
    rows = ", ".join("(" + ", ".join(str(e) for e in r) + ")" for r in s.frame.entries)
    return f"span{{{rows}}}" if rows else "0"


# ---------------------------------------------------------------------
# cached pairwise compatibility (scaffold checks revisit the same pairs)
# ---------------------------------------------------------------------

_COMPAT_CACHE: dict[tuple[Subspace, Subspace], bool] = {}


def compatible_cached(x: Subspace, y: Subspace, form: HermitianForm) -> bool:
    key = (x, y)
    hit = _COMPAT_CACHE.get(key)
    if hit is None:
        hit = compatible(x, y, form)
        _COMPAT_CACHE[key] = hit
        _COMPAT_CACHE[(y, x)] = hit
    return hit


def dim_intersection(a: Subspace, b: Subspace) -> int:
    if a.k == 0 or b.k == 0:
        return 0
    return a.k + b.k - a.frame.stack(b.frame).rank()


# ---------------------------------------------------------------------
# scaffolds
# ---------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class Scaffold:
    """A finite list of k-subspaces with a bijective image table.

    `mapping[i]` is the index of the image of `subspaces[i]`.  When the
    scaffold was built from a known base, `apartments` lists the index
    tuples of the full apartments it contains; loaders leave it None and
    the apartments are then discovered from pairwise compatibility.
    """

    n: int
    k: int
    subspaces: tuple[Subspace, ...]
    mapping: tuple[int, ...]
    apartments: tuple[tuple[int, ...], ...] | None = None

    def __post_init__(self) -> None:
        if any(s.n != self.n or s.k != self.k for s in self.subspaces):
            raise ScaffoldError("all scaffold subspaces must share (n, k)")
        if len(set(self.subspaces)) != len(self.subspaces):
            raise ScaffoldError("scaffold subspaces must be distinct")
        if sorted(self.mapping) != list(range(len(self.subspaces))):
            raise ScaffoldError("image table is not a bijection on the listed set")

    def index_of(self, s: Subspace) -> int:
        try:
            return _scaffold_index(self)[s]
        except KeyError:
            raise ScaffoldError(f"{describe_subspace(s)} is not listed") from None

    def image(self, s: Subspace) -> Subspace:
        return self.subspaces[self.mapping[self.index_of(s)]]

    def is_perp_closed(self, form: HermitianForm) -> bool:
        listed = set(self.subspaces)
        return all(orthocomplement(s, form) in listed for s in self.subspaces)


# Keyed by id with a strong reference to the scaffold, so the id cannot be
# recycled while the cache entry lives.
_SCAFFOLD_INDEX_CACHE: dict[int, tuple[Scaffold, dict[Subspace, int]]] = {}


def _scaffold_index(scaffold: Scaffold) -> dict[Subspace, int]:
    key = id(scaffold)
    hit = _SCAFFOLD_INDEX_CACHE.get(key)
    if hit is None:
        hit = (scaffold, {s: i for i, s in enumerate(scaffold.subspaces)})
        _SCAFFOLD_INDEX_CACHE[key] = hit
    return hit[1]


def discover_apartments(scaffold: Scaffold) -> tuple[tuple[int, ...], ...]:
    """Full apartments inside the listed set, via compatibility cliques.

    A family of binom(n, k) mutually compatible k-subspaces is exactly an
    apartment (apartments are the maximal mutually-compatible families and
    all have that cardinality), so it suffices to enumerate maximal
    cliques of the compatibility relation and keep the full-sized ones.
    """
    form = HermitianForm(scaffold.n)
    subs = scaffold.subspaces
    count = len(subs)
    adjacency = [0] * count
    for i in range(count):
        for j in range(i + 1, count):
            if compatible_cached(subs[i], subs[j], form):
                adjacency[i] |= 1 << j
                adjacency[j] |= 1 << i
    target = comb(scaffold.n, scaffold.k)
    found: list[tuple[int, ...]] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            members = _bits(r)
            if len(members) == target:
                found.append(tuple(members))
            return
        both = p | x
        pivot = max(_bits(both), key=lambda v: bin(adjacency[v] & p).count("1"))
        candidates = p & ~adjacency[pivot]
        while candidates:
            vbit = candidates & -candidates
            v = vbit.bit_length() - 1
            candidates &= candidates - 1
            expand(r | vbit, p & adjacency[v], x & adjacency[v])
            p &= ~vbit
            x |= vbit

    expand(0, (1 << count) - 1, 0)
    found.sort()
    return tuple(found)


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        out.append((mask & -mask).bit_length() - 1)
        mask &= mask - 1
    return out


def listed_apartments(scaffold: Scaffold) -> tuple[tuple[int, ...], ...]:
    if scaffold.apartments is not None:
        return scaffold.apartments
    return discover_apartments(scaffold)


# ---------------------------------------------------------------------
# scaffold file format (shared with the CLI)
# ---------------------------------------------------------------------


def _quad(z: GaussianRational) -> list[int]:
    return [z.re.numerator, z.re.denominator, z.im.numerator, z.im.denominator]


def _from_quad(q: Sequence[int]) -> GaussianRational:
    if len(q) != 4:
        raise ScaffoldError("scalar entries must be [re_num, re_den, im_num, im_den]")
    return GaussianRational(Fraction(q[0], q[1]), Fraction(q[2], q[3]))


def scaffold_to_dict(scaffold: Scaffold) -> dict:
    return {
        "n": scaffold.n,
        "k": scaffold.k,
        "subspaces": [
            [[_quad(e) for e in row] for row in s.frame.entries]
            for s in scaffold.subspaces
        ],
        "map": [[i, scaffold.mapping[i]] for i in range(len(scaffold.mapping))],
    }


def scaffold_from_dict(data: dict) -> Scaffold:
    try:
        n = int(data["n"])
        k = int(data["k"])
        raw_subs = data["subspaces"]
        raw_map = data["map"]
    except (KeyError, TypeError) as exc:
        raise ScaffoldError(f"malformed scaffold document: {exc}") from exc
    subspaces = tuple(
        Subspace.from_vectors(n, [[_from_quad(q) for q in row] for row in rows])
        for rows in raw_subs
    )
    mapping = [-1] * len(subspaces)
    for src, dst in raw_map:
        if not (0 <= src < len(subspaces) and 0 <= dst < len(subspaces)):
            raise ScaffoldError(f"map entry [{src}, {dst}] out of range")
        if mapping[src] != -1:
            raise ScaffoldError(f"duplicate map entry for index {src}")
        mapping[src] = dst
    if -1 in mapping:
        raise ScaffoldError("map must cover every listed subspace")
    return Scaffold(n, k, subspaces, tuple(mapping))


def save_scaffold(scaffold: Scaffold, path: str | Path) -> None:
    Path(path).write_text(json.dumps(scaffold_to_dict(scaffold), indent=1) + "\n")


def load_scaffold(path: str | Path) -> Scaffold:
    return scaffold_from_dict(json.loads(Path(path).read_text()))


# ---------------------------------------------------------------------
# forward checks for induced maps
# ---------------------------------------------------------------------


def verify_apartment_preservation(
    spec: TransformSpec, bases: Sequence[OrthoBase], k: int
) -> VerificationReport:
    """Images of whole apartments must be whole apartments of the image base.

    With the perp flag set the expected family is the image-base apartment
    orthocomplemented elementwise.
    """
    report = VerificationReport(
        config={"check": "apartment-preservation", "k": k, "scope": REPORT_SCOPE}
    )
    form = HermitianForm(spec.n)
    for idx, base in enumerate(bases):
        with _Timer() as t:
            apartment = base.apartment(k).subspace_set()
            image_set = {induced_map(spec, s) for s in apartment}
            expected = map_base(spec, base).apartment(k).subspace_set()
            if spec.perp:
                expected = {orthocomplement(s, form) for s in expected}
            ok = image_set == expected
            witness = None
            if not ok:
                stray = sorted(
                    image_set.symmetric_difference(expected),
                    key=describe_subspace,
                )[0]
                witness = f"apartment image mismatch at {describe_subspace(stray)}"
        report.results.append(
            CheckResult(f"apartment-image[base{idx}]", ok, witness, t.millis)
        )
    return report


def _sigma_flags(
    spec: TransformSpec, scaffold: Scaffold, form: HermitianForm
) -> tuple[list[bool] | None, str | None]:
    """Per-element choice between the plain and orthocomplemented image.

    Returns (flags, None) when every table entry matches the spec's matrix
    one way or the other, else (None, witness).
    """
    plain = TransformSpec(spec.matrix, spec.conjugate, perp=False)
    flags: list[bool] = []
    for s in scaffold.subspaces:
        fs = scaffold.image(s)
        ts = induced_map(plain, s)
        if fs == ts:
            flags.append(False)
        elif fs == orthocomplement(ts, form):
            flags.append(True)
        else:
            return None, f"table image of {describe_subspace(s)} matches neither branch"
    return flags, None


def verify_dim_pattern(spec: TransformSpec, scaffold: Scaffold) -> VerificationReport:
    """Intersection-dimension behavior of a table over an n = 2k scaffold.

    For apartment pairs with dim(X & Y) = m, the images must meet in m or
    k-m dimensions, and exactly m when the table treats both elements the
    same way (both plain or both orthocomplemented); images must also
    commute with orthocomplementation: f(X^perp) = f(X)^perp.
    """
    if scaffold.n != 2 * scaffold.k:
        raise ValueError("dimension-pattern checks need n = 2k")
    form = HermitianForm(scaffold.n)
    k = scaffold.k
    report = VerificationReport(
        config={"check": "dim-pattern", "n": scaffold.n, "k": k, "scope": REPORT_SCOPE}
    )

    with _Timer() as t:
        ok = scaffold.is_perp_closed(form)
    report.results.append(
        CheckResult("perp-closure", ok, None if ok else "listed set not perp-closed", t.millis)
    )
    if not ok:
        return report

    with _Timer() as t:
        flags, witness = _sigma_flags(spec, scaffold, form)
    report.results.append(CheckResult("table-matches-spec", flags is not None, witness, t.millis))
    if flags is None:
        return report

    with _Timer() as t:
        witness = None
        for s in scaffold.subspaces:
            lhs = scaffold.image(orthocomplement(s, form))
            rhs = orthocomplement(scaffold.image(s), form)
            if lhs != rhs:
                witness = f"perp equivariance fails at {describe_subspace(s)}"
                break
    report.results.append(CheckResult("perp-equivariance", witness is None, witness, t.millis))

    with _Timer() as t:
        witness = None
        for apartment in listed_apartments(scaffold):
            images = {i: scaffold.image(scaffold.subspaces[i]) for i in apartment}
            for ai, bi in combinations(apartment, 2):
                x, y = scaffold.subspaces[ai], scaffold.subspaces[bi]
                m = dim_intersection(x, y)
                d = dim_intersection(images[ai], images[bi])
                allowed = {m} if flags[ai] == flags[bi] else {m, k - m}
                if d not in allowed:
                    witness = (
                        f"dim(f(X) & f(Y)) = {d}, expected within {sorted(allowed)} "
                        f"for X = {describe_subspace(x)}, Y = {describe_subspace(y)} (m = {m})"
                    )
                    break
            if witness:
                break
    report.results.append(CheckResult("pair-dim-pattern", witness is None, witness, t.millis))
    return report


def verify_star_pattern(spec: TransformSpec, base: OrthoBase, k: int) -> VerificationReport:
    """For n != 2k, every star of the apartment must map onto a star.

    The image family must share a common (k-1)-dimensional core (equal to
    the image of the star's core) and span the whole space, which is the
    star shape; a top would share nothing and span only k+1 dimensions.
    """
    n = base.n
    if n == 2 * k:
        raise ValueError("star images are only unambiguous for n != 2k")
    report = VerificationReport(
        config={"check": "star-pattern", "n": n, "k": k, "scope": REPORT_SCOPE}
    )
    apartment = base.apartment(k)
    with _Timer() as t:
        witness = None
        for members in combinations(range(1, n + 1), k - 1):
            core_subset = KSubset.of(n, members)
            star_elements = [
                apartment.element(KSubset.of(n, members + (extra,)))
                for extra in range(1, n + 1)
                if extra not in members
            ]
            images = [induced_map(spec, s) for s in star_elements]
            common = images[0]
            total = images[0]
            for img in images[1:]:
                common = intersect(common, img)
                total = subspace_sum(total, img)
            expected_core = induced_map(spec, base.span_of(core_subset))
            if common != expected_core or common.k != k - 1 or total.k != n:
                witness = f"star at core {members} does not map to the star at its image"
                break
    report.results.append(CheckResult("stars-to-stars", witness is None, witness, t.millis))
    return report


def verify_pairclique_level_map(spec: TransformSpec, base: OrthoBase) -> VerificationReport:
    """For n = 2k: the map induced on (k-1)-subspaces by complement-pair
    cliques must send the level-(k-1) apartment onto that of the image base.

    Each (k-1)-subspace S spanned within the base owns the clique of
    complement pairs {X, X^perp} with a member containing S; pushing those
    pairs through the table must give exactly the clique of the image
    subspace, and the assignment S -> image must cover the image base's
    level-(k-1) apartment.
    """
    n = base.n
    if n % 2:
        raise ValueError("needs n = 2k")
    k = n // 2
    plain = TransformSpec(spec.matrix, spec.conjugate, perp=False)
    form = HermitianForm(n)
    report = VerificationReport(
        config={"check": "pairclique-level-map", "n": n, "k": k, "scope": REPORT_SCOPE}
    )
    image_base = map_base(plain, base)

    def clique_of(b: OrthoBase, members: tuple[int, ...]) -> frozenset[frozenset[Subspace]]:
        out = set()
        for extra in range(1, n + 1):
            if extra in members:
                continue
            x = b.span_of(KSubset.of(n, members + (extra,)))
            out.add(frozenset({x, orthocomplement(x, form)}))
        return frozenset(out)

    image_spans = {
        image_base.span_of(KSubset.of(n, members)): members
        for members in combinations(range(1, n + 1), k - 1)
    }
    with _Timer() as t:
        witness = None
        seen_images = set()
        for members in combinations(range(1, n + 1), k - 1):
            pushed = frozenset(
                frozenset({induced_map(spec, x) for x in pair})
                for pair in clique_of(base, members)
            )
            g_image = induced_map(plain, base.span_of(KSubset.of(n, members)))
            im_members = image_spans.get(g_image)
            if im_members is None or pushed != clique_of(image_base, im_members):
                witness = f"clique image mismatch at core {members}"
                break
            seen_images.add(g_image)
        if witness is None:
            level_apartment = image_base.apartment(k - 1).subspace_set()
            if seen_images != level_apartment:
                witness = "level-(k-1) images do not cover the image apartment"
    report.results.append(CheckResult("pairclique-level-map", witness is None, witness, t.millis))
    return report


# ---------------------------------------------------------------------
# k = 1 operator recovery
# ---------------------------------------------------------------------


def recover_operator_k1(
    samples: Sequence[tuple[Subspace, Subspace]], n: int
) -> TransformSpec:
    """Rebuild a transform from its action on a projective frame of lines.

    Required samples: the n coordinate lines span(e_i), the lines
    span(e_1 + e_j) for j = 2..n, and span(e_1 + i e_2), which decides the
    conjugation flag.  The matrix is normalized so the first nonzero entry
    of its first column is 1.  Raises SampleFitError when the samples are
    missing, are not lines, or fit no semilinear operator; a consistent
    fit that is not scaled-unitary raises ScaledUnitarityError.
    """
    table: dict[Subspace, Subspace] = {}
    for src, img in samples:
        if src.n != n or img.n != n:
            raise SampleFitError("samples must live in the stated dimension")
        if src.k != 1 or img.k != 1:
            raise SampleFitError("samples must be lines")
        if table.get(src, img) != img:
            raise SampleFitError(f"conflicting images for {describe_subspace(src)}")
        table[src] = img

    def need(label: str, line: Subspace) -> Subspace:
        got = table.get(line)
        if got is None:
            raise SampleFitError(f"missing required sample for {label}")
        return got

    coord = [
        need(f"span(e_{i + 1})", Subspace.coordinate(n, [i + 1])) for i in range(n)
    ]
    w = [img.frame.entries[0] for img in coord]

    rows = [w[0]]
    for j in range(1, n):
        mix = need(
            f"span(e_1 + e_{j + 1})",
            Subspace.from_vectors(n, [[1 if c in (0, j) else 0 for c in range(n)]]),
        )
        z = mix.frame.entries[0]
        stacked = ExactMatrix.from_rows([w[0], w[j], z])
        null = stacked.transpose().kernel()
        if len(null) != 1:
            raise SampleFitError(
                f"image of span(e_1 + e_{j + 1}) is not in the span of the "
                "coordinate-line images"
            )
        c1, c2, c3 = null[0]
        if not c3 or not c1:
            raise SampleFitError(
                f"image of span(e_1 + e_{j + 1}) misses a coordinate-image direction"
            )
        alpha = -c1 / c3
        beta = -c2 / c3
        rows.append(tuple((beta / alpha) * e for e in w[j]))

    matrix = ExactMatrix.from_rows(rows)
    i_unit = gr(0, 1)
    probe_src = Subspace.from_vectors(n, [[1, i_unit] + [0] * (n - 2)])
    probe_img = need("span(e_1 + i e_2)", probe_src)
    linear_probe = Subspace.from_vectors(
        n, [tuple(a + i_unit * b for a, b in zip(rows[0], rows[1]))]
    )
    conj_probe = Subspace.from_vectors(
        n, [tuple(a - i_unit * b for a, b in zip(rows[0], rows[1]))]
    )
    if probe_img == linear_probe:
        conjugate = False
    elif probe_img == conj_probe:
        conjugate = True
    else:
        raise SampleFitError("span(e_1 + i e_2) sample matches neither branch")

    pivot = next((matrix[r, 0] for r in range(n) if matrix[r, 0]), None)
    if pivot is None:
        raise SampleFitError("recovered matrix has a zero first column")
    spec = TransformSpec(matrix.scale(gr(1) / pivot), conjugate=conjugate)

    for src, img in table.items():
        if induced_map(spec, src) != img:
            raise SampleFitError(
                f"samples are inconsistent: {describe_subspace(src)} does not "
                "round-trip through the fitted operator"
            )
    return spec


def frame_samples(spec: TransformSpec, n: int) -> list[tuple[Subspace, Subspace]]:
    """The projective-frame samples of a transform, as recovery expects."""
    i_unit = gr(0, 1)
    sources = [Subspace.coordinate(n, [i]) for i in range(1, n + 1)]
    sources += [
        Subspace.from_vectors(n, [[1 if c in (0, j) else 0 for c in range(n)]])
        for j in range(1, n)
    ]
    sources.append(Subspace.from_vectors(n, [[1, i_unit] + [0] * (n - 2)]))
    return [(s, induced_map(spec, s)) for s in sources]


# ---------------------------------------------------------------------
# non-induced detection
# ---------------------------------------------------------------------


@dataclass
class ScaffoldVerdict:
    verdict: str
    apartment: tuple[int, ...] | None = None
    pair: tuple[Subspace, Subspace] | None = None

    @property
    def witness(self) -> str | None:
        if self.pair is None:
            return None
        x, y = self.pair
        return (
            f"apartment image contains the incompatible pair "
            f"{describe_subspace(x)}, {describe_subspace(y)}"
        )


def detect_noninduced(scaffold: Scaffold) -> ScaffoldVerdict:
    """Flag tables whose apartment images cannot come from an induced map.

    Every listed apartment must map onto a mutually compatible family of
    the full apartment cardinality (such a family is itself an apartment).
    The first incompatible image pair is returned as the witness.
    """
    apartments = listed_apartments(scaffold)
    if not apartments:
        raise ScaffoldError("scaffold lacks a full apartment")
    form = HermitianForm(scaffold.n)
    apartment_sets = [
        frozenset(scaffold.subspaces[i] for i in a) for a in apartments
    ]
    for apartment, domain_set in zip(apartments, apartment_sets):
        images = [scaffold.image(scaffold.subspaces[i]) for i in apartment]
        image_set = frozenset(images)
        if any(image_set == s for s in apartment_sets):
            continue
        foreign = [s for s in images if s not in domain_set]
        ordered = foreign + [s for s in images if s in domain_set]
        pairs = [(a, b) for i, a in enumerate(ordered) for b in ordered[i + 1 :]]
        for x, y in pairs:
            if not compatible_cached(x, y, form):
                return ScaffoldVerdict(NON_INDUCED, apartment, (x, y))
    return ScaffoldVerdict(INDUCED_CONSISTENT)


# ---------------------------------------------------------------------
# scaffold builders
# ---------------------------------------------------------------------


def scaffold_from_table(
    n: int,
    k: int,
    subspaces: Sequence[Subspace],
    table: dict[Subspace, Subspace],
    apartments: Sequence[Sequence[int]] | None = None,
) -> Scaffold:
    subs = tuple(subspaces)
    index = {s: i for i, s in enumerate(subs)}
    mapping = []
    for s in subs:
        img = table.get(s, s)
        if img not in index:
            raise ScaffoldError(f"image {describe_subspace(img)} is not listed")
        mapping.append(index[img])
    ap = None if apartments is None else tuple(tuple(a) for a in apartments)
    return Scaffold(n, k, subs, tuple(mapping), ap)


def scaffold_from_stabilizing_spec(
    spec: TransformSpec,
    base: OrthoBase,
    k: int,
    flip_pairs: Iterable[Subspace] = (),
) -> Scaffold:
    """Scaffold for a spec whose induced map permutes the base's apartment.

    `flip_pairs` names elements whose {X, X^perp} pair is additionally
    swapped after the induced map (n = 2k only); each flip keeps the table
    bijective because apartments are perp-closed.
    """
    n = base.n
    apartment = base.apartment(k)
    subs = tuple(s for _, s in apartment.items())
    sub_set = set(subs)
    form = HermitianForm(n)
    table = {}
    for s in subs:
        img = induced_map(spec, s)
        if img not in sub_set:
            raise ScaffoldError(
                "spec does not stabilize the apartment; "
                f"{describe_subspace(s)} maps outside"
            )
        table[s] = img
    for x in flip_pairs:
        if n != 2 * k:
            raise ScaffoldError("pair flips need n = 2k")
        xp = orthocomplement(x, form)
        pre_x = next(s for s, img in table.items() if img == x)
        pre_xp = next(s for s, img in table.items() if img == xp)
        table[pre_x], table[pre_xp] = xp, x
    return scaffold_from_table(
        n, k, subs, table, apartments=[tuple(range(len(subs)))]
    )


def _swap_partner(n: int, k: int) -> Subspace:
    """span{e_1..e_{k-1}, e_k + e_{k+1}}: adjacent to the first apartment
    element but outside every coordinate apartment."""
    rows = [[1 if c == r else 0 for c in range(n)] for r in range(k - 1)]
    rows.append([1 if c in (k - 1, k) else 0 for c in range(n)])
    return Subspace.from_vectors(n, rows)


def adversarial_scaffolds(n: int, k: int) -> list[tuple[str, Scaffold]]:
    """The fixed negative corpus for (n, k).

    single-swap : one apartment element traded for an adjacent outsider
    base-mix    : the apartment pushed onto spans of a non-orthogonal base
    single-perp : (n = 2k) exactly one element sent to an orthocomplement,
                  cycled through an outsider to stay bijective
    """
    form = HermitianForm(n)
    base = OrthoBase.standard(n)
    apartment = base.apartment(k)
    ap_subs = tuple(s for _, s in apartment.items())
    ap_indices = tuple(range(len(ap_subs)))
    out: list[tuple[str, Scaffold]] = []

    partner = _swap_partner(n, k)
    x0 = Subspace.coordinate(n, range(1, k + 1))
    extras = [partner]
    if n == 2 * k:
        extras.append(orthocomplement(partner, form))
    listed = ap_subs + tuple(extras)
    out.append(
        (
            "single-swap",
            scaffold_from_table(
                n, k, listed, {x0: partner, partner: x0}, apartments=[ap_indices]
            ),
        )
    )

    if n == 2 * k:
        x0p = orthocomplement(x0, form)
        out.append(
            (
                "single-perp",
                scaffold_from_table(
                    n,
                    k,
                    listed,
                    {x0: x0p, x0p: partner, partner: x0},
                    apartments=[ap_indices],
                ),
            )
        )

    skew = [[1 if c == r else 0 for c in range(n)] for r in range(n)]
    skew[1][0] = 1  # second vector becomes e_1 + e_2: not orthogonal to e_1
    table = {}
    images = []
    for subset, s in apartment.items():
        img = Subspace.from_vectors(n, [skew[i - 1] for i in subset])
        table[s] = img
        images.append(img)
    foreign = [img for img in images if img not in set(ap_subs)]
    unhit = [s for s in ap_subs if s not in set(images)]
    for src, dst in zip(foreign, unhit, strict=True):
        table[src] = dst
    listed_mix = ap_subs + tuple(foreign)
    out.append(
        (
            "base-mix",
            scaffold_from_table(n, k, listed_mix, table, apartments=[ap_indices]),
        )
    )
    return out
