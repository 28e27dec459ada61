"""Exact-arithmetic toolkit for orthogonal apartments in Grassmannians.

Layers, bottom up:

    rationals / matrices   Gaussian-rational scalars and exact linear algebra
    spaces                 canonical subspaces, orthocomplements, projections
    apartments             orthogonal bases, compatibility, witness builders
    transforms             scaled-unitary operators and induced subspace maps
    subsets / kernels      the combinatorial apartment model and its hot loops
    pairgraph              complement pairs and maximal cliques for n = 2k
    harness                scaffold tables, rigidity checks, operator recovery
    suites / cli           named verification suites and the batch front end
"""

from .rationals import GaussianRational, gr
from .matrices import ExactMatrix
from .spaces import (
    HermitianForm,
    Subspace,
    intersect,
    orthocomplement,
    projection_matrix,
    subspace_sum,
)
from .apartments import (
    NumericApartment,
    OrthoBase,
    build_compatible_witnesses,
    commuting_projections,
    compatible,
    inexact_witness,
    is_orthogonal_base,
)
from .subsets import (
    CaseTag,
    ComplementaryPair,
    KSubset,
    c_formula,
    case_tag,
    classify_pair,
    complementary_adjacent,
    count_complementary_containing,
    maximal_inexact,
    star,
    top,
    triple_hull,
)
from .pairgraph import PairVertex, clique_C, enumerate_maximal_cliques, gamma_prime
from .transforms import TransformSpec, induced_map, random_transform_spec
from .harness import (
    Scaffold,
    VerificationReport,
    detect_noninduced,
    load_scaffold,
    recover_operator_k1,
    save_scaffold,
    verify_apartment_preservation,
    verify_dim_pattern,
)
from .errors import (
    ExceptionalCaseError,
    SampleFitError,
    ScaffoldError,
    ScaledUnitarityError,
    WitnessBudgetError,
)

__version__ = "0.1.0"
