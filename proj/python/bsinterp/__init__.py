"""Discretised interpolation of commuting contractions: numpy bindings."""

from ._core import (
    InputError,
    NumericalError,
    approx_error_sweep,
    bimarkov_check,
    bscr_check,
    bscr_q,
    check_semigroup_laws,
    compress_discretized,
    crabb_davie_fixture,
    egervary_dilation,
    eval_discretized,
    eval_poly,
    kappa,
    koopman_u,
    multilinear_compress,
    op_norm,
    parrott_tuple,
    power_dilation_verify,
    preservation_suite,
    projector_p,
    structure_report,
    torus_sup,
    vn_check,
    vn_search,
)

__all__ = [
    "InputError",
    "NumericalError",
    "approx_error_sweep",
    "bimarkov_check",
    "bscr_check",
    "bscr_q",
    "check_semigroup_laws",
    "compress_discretized",
    "crabb_davie_fixture",
    "egervary_dilation",
    "eval_discretized",
    "eval_poly",
    "kappa",
    "koopman_u",
    "multilinear_compress",
    "op_norm",
    "parrott_tuple",
    "power_dilation_verify",
    "preservation_suite",
    "projector_p",
    "structure_report",
    "torus_sup",
    "vn_check",
    "vn_search",
]
