"""Differential AG codes: builders, the fast interpolation decoder, and bounds.

Typical use::

    from diffag import build_hermitian, decode, d_omega_tau
    code = build_hermitian(3, -1, 18)
    d_omega_tau(code)          # (13, 6)
"""
from .field import GF, FieldError, field_of_order
from .codedata import CodeData, CodeDataError, validate
from .hermitian import build_hermitian
from .analysis import d_omega_tau, nu, params_report, tau_profiles
from .decoder import DecodingFailure, decode, run
from .goppa import GoppaCode, binary_goppa_build, goppa_build, goppa_codedata, goppa_decode
from .oracle import SplitMix64, add_errors, encode, min_distance_exhaustive, nearest_codeword

__all__ = [
    "GF", "FieldError", "field_of_order",
    "CodeData", "CodeDataError", "validate",
    "build_hermitian",
    "d_omega_tau", "nu", "params_report", "tau_profiles",
    "DecodingFailure", "decode", "run",
    "GoppaCode", "binary_goppa_build", "goppa_build", "goppa_codedata", "goppa_decode",
    "SplitMix64", "add_errors", "encode", "min_distance_exhaustive", "nearest_codeword",
]
