"""Exact construction, identity checks and certified roots of Krawtchouk polynomials."""
from .identities import (
    BivariatePoly,
    check_bivariate_kernel,
    check_pascal_basis,
    check_poly_recurrence,
    check_summation,
    check_symmetry_s2,
    check_value_recurrence,
)
from .krawtchouk import (
    KrawtchoukParams,
    ThreeTermCoefficients,
    k_definition,
    k_from_generating_function,
    k_three_term,
    k_value_gf,
    k_value_table,
    krawtchouk,
    krawtchouk_family,
    leading_coefficient,
    three_term_coefficients,
)
from .orthogonality import (
    WeightSequence,
    check_gram,
    check_low_degree_orthogonality,
    gram_matrix,
    inner_product,
)
from .poly import (
    UniPoly,
    binomial,
    falling_basis,
    newton_interpolate,
    poly_compose_affine,
    poly_eval,
)
from .report import VerificationReport
from .roots import (
    IsolatingInterval,
    SturmSequence,
    check_interlacing,
    check_root_isolation,
    check_root_symmetry_s2,
    count_roots,
    isolate_roots,
    sturm_sequence,
)

__version__ = "0.1.0"
