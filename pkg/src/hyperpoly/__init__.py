"""Exact evaluation of Gauss and Lauricella hypergeometric polynomials and
verification of the weighted multinomial theorem for rising factorials."""

from .compositions import Mode, composition_count, separable_terms, weak_compositions
from .exact import (
    DegenerateParameterError,
    Rational,
    TransformationUndefined,
    binomial,
    format_rational,
    multinomial,
    neg_n_pochhammer_ratio,
    parse_rational,
    rising_factorial,
    tail_pochhammer,
)
from .gauss import Gauss2F1Spec, chu_vandermonde_pair, eval_2f1, gauss_sum, transform_2f1
from .identities import (
    IdentityCase,
    VerificationReport,
    generate_cases,
    multinomial_intermediate,
    multinomial_lhs,
    multinomial_rhs,
    verify_identity,
    verify_many,
)
from .lauricella import (
    LauricellaSpec,
    eval_fd_exact,
    eval_fd_float,
    fd_sum,
    fd_term,
    fd_terms,
    reduce_to_2f1,
    toscano_transform,
)

__version__ = "0.1.0"
