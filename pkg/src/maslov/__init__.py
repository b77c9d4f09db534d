"""Maslov dequantization of generalized polynomials and their Newton polytopes."""

from .dequant import (
    HSchedule,
    ProbeReport,
    dequantize_numeric,
    dequantize_probe,
    dequantize_symbolic,
    general_position_by_sampling,
    in_general_position,
    sum_hypothesis_holds,
)
from .errors import DimensionError, ParseError, ZeroPolynomialError
from .genpoly import (
    AsymptoticProduct,
    GeneralizedPolynomial,
    Term,
    eval_log_abs,
    has_nonnegative_coefficients,
    parse,
    parse_asymptotic,
    render,
)
from .maxplus import BOTTOM, MaxPlus, maslov_oplus_h
from .polytope import (
    Polytope,
    contains_point,
    hull_reduce,
    hullunion_oplus,
    minkowski_odot,
    newton_polytope,
    normal_cone_overlap,
    support_function,
)
from .sublinear import PwlSublinear, subdifferential, support_of

__version__ = "0.1.0"
