"""Exact average number of (delta, eta)-LLL bases in dimension n.

Two algebraically equal forms are evaluated independently:

* the original form, built from unit-sphere areas S_i(1), zeta(i) and the
  factors 1/(i(n-i));
* the Riemann-Xi form, 2^((n^2-3n+4)/2) eta^((n-1)(n-2)/2) prod 1/xi(i)
  times the same product of weight integrals.

Everything is returned as a natural log.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

from .secint import product_integrals_log
from .specialfn import log_zeta, sphere_surface_log, xi_inv_prod_log

__all__ = [
    "Regime",
    "ReductionParams",
    "RegimeError",
    "RESTRICTED_ETA_MAX",
    "BOUND_MIN_N",
    "exact_log_count_eq1",
    "exact_log_count_eq2",
    "prefactor_log",
    "normalized_log_count",
    "ConsistencyReport",
    "consistency_check",
]

LN_2 = math.log(2.0)
RESTRICTED_ETA_MAX = 3.0 / (4.0 * math.sqrt(2.0))
BOUND_MIN_N = 22


class RegimeError(ValueError):
    """Parameters fall outside the regime an operation requires."""


class Regime(enum.Enum):
    GENERAL = "general"
    DEFINITION = "definition"
    BOUND = "bound"
    RESTRICTED = "restricted"


@dataclass(frozen=True)
class ReductionParams:
    """Dimension and LLL parameters.

    Any ``n >= 2`` and ``0 < eta < delta`` is accepted (the formulas make
    sense there); :attr:`regime` says which of the narrower parameter
    regimes the point falls in.
    """

    n: int
    eta: float
    delta: float
    warnings: tuple = field(default=(), compare=False)

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 2:
            raise ValueError(f"n must be an integer >= 2, got {self.n!r}")
        object.__setattr__(self, "n", int(self.n))
        if not (self.eta > 0 and self.delta > 0 and self.eta < self.delta):
            raise ValueError(f"need 0 < eta < delta, got eta={self.eta!r}, delta={self.delta!r}")
        if not self.in_definition_regime:
            msg = (
                f"(eta, delta) = ({self.eta}, {self.delta}) is outside "
                "1/2 < delta < 1, 1/2 < eta < delta"
            )
            object.__setattr__(self, "warnings", self.warnings + (msg,))

    @property
    def in_definition_regime(self) -> bool:
        return 0.5 < self.delta < 1.0 and 0.5 < self.eta < self.delta

    @property
    def in_bound_regime(self) -> bool:
        return self.in_definition_regime and self.n >= BOUND_MIN_N

    @property
    def in_restricted_regime(self) -> bool:
        return (
            self.in_bound_regime
            and self.eta < RESTRICTED_ETA_MAX
            and self.delta > 0.75
        )

    @property
    def regime(self) -> Regime:
        if self.in_restricted_regime:
            return Regime.RESTRICTED
        if self.in_bound_regime:
            return Regime.BOUND
        if self.in_definition_regime:
            return Regime.DEFINITION
        return Regime.GENERAL

    def require(self, regime: Regime) -> None:
        ok = {
            Regime.GENERAL: True,
            Regime.DEFINITION: self.in_definition_regime,
            Regime.BOUND: self.in_bound_regime,
            Regime.RESTRICTED: self.in_restricted_regime,
        }[regime]
        if not ok:
            raise RegimeError(
                f"n={self.n}, eta={self.eta}, delta={self.delta} is in regime "
                f"{self.regime.value!r}, operation needs {regime.value!r}"
            )


def exact_log_count_eq1(p: ReductionParams) -> float:
    """ln of 2 (2 eta)^((n-1)(n-2)/2) prod_{i=2}^n S_i(1)/zeta(i)
    * (1/n) prod_{i=1}^{n-1} 1/(i(n-i)) * prod of weight integrals."""
    n = p.n
    terms = [LN_2, 0.5 * (n - 1) * (n - 2) * math.log(2.0 * p.eta), -math.log(n)]
    terms.extend(sphere_surface_log(i) - log_zeta(i) for i in range(2, n + 1))
    terms.extend(-math.log(i * (n - i)) for i in range(1, n))
    terms.append(product_integrals_log(n, p.eta, p.delta))
    return math.fsum(terms)


def prefactor_log(n: int, eta: float) -> float:
    """ln of 2^((n^2-3n+4)/2) eta^((n-1)(n-2)/2) prod_{s=2}^n 1/xi(s)."""
    return math.fsum(
        [
            0.5 * (n * n - 3 * n + 4) * LN_2,
            0.5 * (n - 1) * (n - 2) * math.log(eta),
            xi_inv_prod_log(n),
        ]
    )


def exact_log_count_eq2(p: ReductionParams) -> float:
    return prefactor_log(p.n, p.eta) + product_integrals_log(p.n, p.eta, p.delta)


def normalized_log_count(p: ReductionParams) -> float:
    """The count divided by 2^n (sign symmetry of shortest vectors)."""
    return exact_log_count_eq2(p) - p.n * LN_2


@dataclass(frozen=True)
class ConsistencyReport:
    n: int
    eta: float
    delta: float
    eq1_ln: float
    eq2_ln: float
    difference: float
    tol: float
    passed: bool


def consistency_check(p: ReductionParams, tol: float = 1e-6) -> ConsistencyReport:
    """Compare both forms; a mismatch is reported, never raised."""
    a = exact_log_count_eq1(p)
    b = exact_log_count_eq2(p)
    diff = abs(a - b)
    return ConsistencyReport(p.n, p.eta, p.delta, a, b, diff, tol, bool(diff <= tol))
