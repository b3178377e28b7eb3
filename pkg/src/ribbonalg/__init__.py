"""Exact computations in automorphism groups of truncated series rings over Q(x)."""

from .errors import (
    InputError,
    InvariantViolation,
    ParseError,
    PreconditionError,
    RibbonError,
    SchemaError,
)
from .exactfield import Poly, RatFunc, rf_canonical, rf_derivative, rf_order_at, rf_regular_on
from .jet import Jet, jet_dt, jet_dx, jet_invert, jet_substitute
from .aut import (
    Automorphism,
    aut_apply,
    aut_apply_oracle,
    aut_compose,
    aut_invert,
    aut_rho,
    aut_xi,
)
from .textfmt import format_ratfunc, parse_ratfunc

__all__ = [
    "InputError", "InvariantViolation", "ParseError", "PreconditionError", "RibbonError",
    "SchemaError", "Poly", "RatFunc", "rf_canonical", "rf_derivative", "rf_order_at",
    "rf_regular_on", "Jet", "jet_dt", "jet_dx", "jet_invert", "jet_substitute", "Automorphism",
    "aut_apply", "aut_apply_oracle", "aut_compose", "aut_invert", "aut_rho", "aut_xi",
    "format_ratfunc", "parse_ratfunc",
]

__version__ = "0.1.0"
