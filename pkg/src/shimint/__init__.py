"""Exact arithmetic intersection numbers of Heegner divisors on Shimura curves."""

from .dirichlet import LogLinear, L_deriv0, L_value0
from .errors import ConsistencyError, InvalidInput, ShimintError, UnsupportedConfiguration
from .heegner import HClass, HeegnerInput, Level, eta, h_classes, validate
from .intersect import crosscheck, explicit_pair, explicit_total, repnum_total

__version__ = "0.1.0"

__all__ = [
    "ConsistencyError",
    "HClass",
    "HeegnerInput",
    "InvalidInput",
    "L_deriv0",
    "L_value0",
    "Level",
    "LogLinear",
    "ShimintError",
    "UnsupportedConfiguration",
    "crosscheck",
    "eta",
    "explicit_pair",
    "explicit_total",
    "h_classes",
    "repnum_total",
    "validate",
]
