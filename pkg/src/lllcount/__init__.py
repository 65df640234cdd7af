"""Exact and approximate average counts of (delta, eta)-LLL bases."""

from ._backend import BACKEND
from .census import (
    ReductionParams,
    Regime,
    RegimeError,
    consistency_check,
    exact_log_count_eq1,
    exact_log_count_eq2,
    normalized_log_count,
)
from .logdomain import LogReal, lr_from_value

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "LogReal",
    "ReductionParams",
    "Regime",
    "RegimeError",
    "consistency_check",
    "exact_log_count_eq1",
    "exact_log_count_eq2",
    "lr_from_value",
    "normalized_log_count",
]
