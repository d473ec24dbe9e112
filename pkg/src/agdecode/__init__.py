"""Unique decoding of algebraic-geometry codes on plane curves by interpolation."""

from .bounds import bound_table, du, hermitian_du, hermitian_nu, nu
from .code import Code
from .curve import Monomial, Pair, PlaneCurve, hermitian_curve
from .decoder import DecodeResult, decode, decode_trace
from .field import GF, make_field, parse_field
from .ideal import EtaBasis, hermitian_eta, interpolant, lagrange_basis, vanishing_basis

__all__ = [
    "Code",
    "DecodeResult",
    "EtaBasis",
    "GF",
    "Monomial",
    "Pair",
    "PlaneCurve",
    "bound_table",
    "decode",
    "decode_trace",
    "du",
    "hermitian_curve",
    "hermitian_du",
    "hermitian_eta",
    "hermitian_nu",
    "interpolant",
    "lagrange_basis",
    "make_field",
    "nu",
    "parse_field",
    "vanishing_basis",
]
