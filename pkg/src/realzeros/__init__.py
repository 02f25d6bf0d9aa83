"""Exact real-zero certification and classification of rational solution families."""

from .algebra import (
    DomainError,
    Poly,
    SturmChain,
    certify_all_roots_real,
    count_real_roots,
    isolate_real_roots,
    poly_compose_affine,
    poly_derivative,
    poly_gcd,
    rational_roots,
    squarefree_part,
)
from .classify import FamilyMatch, canonicalize_K, classify, recover_frame
from .expr import format_ratfun, parse_expression, parse_ratfun
from .families import (
    Family,
    FamilySpec,
    apply_frame,
    build_bessel_truncation,
    build_f2,
    build_f3,
    build_f4,
    build_power,
    hn_by_differentiation,
    hn_coeffs,
)
from .ratfun import RatFun, compute_m, f_over_fpp, log_derivative, ratfun_derivative
from .verify import (
    HypothesisReport,
    OdeIdentity,
    bessel_truncation_residual,
    check_hypotheses,
    check_zero_locations,
    f4_eval_certified,
    f4_negative_roots,
    ode_residual,
)

__all__ = [
    "apply_frame",
    "bessel_truncation_residual",
    "build_bessel_truncation",
    "build_f2",
    "build_f3",
    "build_f4",
    "build_power",
    "canonicalize_K",
    "certify_all_roots_real",
    "check_hypotheses",
    "check_zero_locations",
    "classify",
    "compute_m",
    "count_real_roots",
    "DomainError",
    "f4_eval_certified",
    "f4_negative_roots",
    "f_over_fpp",
    "Family",
    "FamilyMatch",
    "FamilySpec",
    "format_ratfun",
    "hn_by_differentiation",
    "hn_coeffs",
    "HypothesisReport",
    "isolate_real_roots",
    "log_derivative",
    "ode_residual",
    "OdeIdentity",
    "parse_expression",
    "parse_ratfun",
    "Poly",
    "poly_compose_affine",
    "poly_derivative",
    "poly_gcd",
    "RatFun",
    "ratfun_derivative",
    "rational_roots",
    "recover_frame",
    "squarefree_part",
    "SturmChain",
]

__version__ = "0.1.0"
