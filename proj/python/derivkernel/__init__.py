"""Exact invariants of plane algebraic curves via derivation kernels."""

from ._derivkernel import (
    CurveDerivationSet,
    Derivation,
    ExprParseError,
    KernelReport,
    MathDomainError,
    Polynomial,
    Rational,
    RationalFunction,
    VarSet,
    VarsetMismatch,
    check_invariance,
    commutator,
    curve_derivation_set,
    curve_from_moduli,
    euler_weight,
    gl3_derivations,
    hyper_vars,
    hyper_weights,
    in_kernel,
    isomorphic,
    j_invariant_c3,
    joint_kernel,
    moduli_vector,
    normalize_curve,
    rational_invariant_generators,
    rf_equal,
    ternary_vars,
    transform_coeff_values,
    translation_formula,
    verify_generator_set,
    weitzenbock,
    z_invariant,
)

__all__ = [
    "CurveDerivationSet",
    "Derivation",
    "ExprParseError",
    "KernelReport",
    "MathDomainError",
    "Polynomial",
    "Rational",
    "RationalFunction",
    "VarSet",
    "VarsetMismatch",
    "check_invariance",
    "commutator",
    "curve_derivation_set",
    "curve_from_moduli",
    "euler_weight",
    "gl3_derivations",
    "hyper_vars",
    "hyper_weights",
    "in_kernel",
    "isomorphic",
    "j_invariant_c3",
    "joint_kernel",
    "moduli_vector",
    "normalize_curve",
    "rational_invariant_generators",
    "rf_equal",
    "ternary_vars",
    "transform_coeff_values",
    "translation_formula",
    "verify_generator_set",
    "weitzenbock",
    "z_invariant",
]
