"""Exact higher continued fractions r_{i,m}(x): evaluation, enclosures, inversion."""

from .cf import CFExpansion, EventuallyPeriodic, Finite, Named, convergents, digit_stream, evaluate, expand, parse_real
from .exact import HCFError, binomial, multichoose, parse_rational
from .genfun import genfun, genfun_gap, limit_profile
from .inverse import invert
from .lambdas import cf_product, generators, lambda_matrix
from .maps import Enclosure, HCFVector, cf_vector, enclose, r, r_via_shift, reciprocal_vector

__all__ = [
    "CFExpansion", "EventuallyPeriodic", "Finite", "Named", "convergents", "digit_stream",
    "evaluate", "expand", "parse_real", "HCFError", "binomial", "multichoose", "parse_rational",
    "genfun", "genfun_gap", "limit_profile", "invert", "cf_product", "generators",
    "lambda_matrix", "Enclosure", "HCFVector", "cf_vector", "enclose", "r", "r_via_shift",
    "reciprocal_vector",
]
