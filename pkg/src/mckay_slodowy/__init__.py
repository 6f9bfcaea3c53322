"""Exact McKay-Slodowy correspondence for normal pairs of finite SU(2)
subgroups: cyclotomic character tables, affine Dynkin diagrams from fusion
data, Poincare series of tensor multiplicities, and affine exponents."""

from .characters import (
    Character,
    CharacterTable,
    ClassFunction,
    frobenius_check,
    induce,
    inner_product,
    restrict,
    table,
    table_numeric,
)
from .chebyshev import (
    ChebyshevPoly,
    ExponentData,
    c_family,
    chebyshev,
    chebyshev_identities_check,
    closed_form_check,
    exponents_catalog,
    spectrum_exponents_check,
)
from .cyclotomic import Cyclotomic, Rational, root_of_unity, sqrt2, sqrt_minus1, zeta
from .errors import CheckFailure, ClosureBoundExceeded, DomainError
from .groups import (
    FiniteGroup,
    Matrix2,
    NormalPair,
    Permutation,
    family,
    generate,
    normal_pair,
    pair_from_groups,
)
from .mckay import (
    FusionData,
    InductionBasis,
    RepresentationGraph,
    RestrictionBasis,
    characteristic_identity_check,
    eigenvector_check,
    fusion_matrices,
    graph,
    induction_basis,
    null_vector_check,
    restriction_basis,
)
from .poincare import (
    MultiplicityVector,
    RationalSeries,
    brute_force_multiplicity,
    corollary_relation_check,
    denominator_identity_check,
    denominator_product,
    invariants_series_check,
    multiplicity_vector,
    series_cramer,
    series_recursion,
)
from .polynomials import IntPoly, char_poly, det_poly
from .verify import CheckResult, verify_all, verify_pair

__version__ = "0.1.0"
