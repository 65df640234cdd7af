"""Secant-power integrals and the weight integrals of the counting formula.

Substituting x = delta sin(theta) turns each weight integral into a
secant-power integral:

    int_{-eta}^{eta} (delta^2 - x^2)^(-k/2) dx = 2 delta^(1-k) int_0^phi sec^(k-1),

with phi = arcsin(eta/delta).  The secant integrals I_m are evaluated exactly
by the reduction recurrence

    I_m = sec^(m-2)(phi) tan(phi) / (m-1) + (m-2)/(m-1) I_{m-2},

run upward from I_0, I_1, I_2.  Both addends are positive, so the recurrence
is carried out in the log domain without cancellation.  The quadrature
routines at the bottom are independent oracles for tests.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import integrate

from ._backend import BACKEND, sec_log_table

__all__ = [
    "DerivedParams",
    "derive_params",
    "sec_log_table",
    "sec_integral_log",
    "quadrature_oracle_log",
    "weight_integral_log",
    "weight_quadrature_oracle_log",
    "secant_exponents",
    "secant_product_log",
    "product_integrals_log",
    "BACKEND",
]

MIN_T = 1e-8
ORACLE_MAX_M = 500


@dataclass(frozen=True)
class DerivedParams:
    """Geometry constants for a dimension n and ratio eta/delta.

    ``phi = arcsin(eta/delta)``, ``t = cos(phi)``, ``a = t**n``.  ``ln_t`` and
    ``ln_a`` are kept as well because ``a`` underflows for large n.
    """

    n: int
    ratio: float
    phi: float
    t: float
    ln_t: float
    ln_a: float

    @property
    def a(self) -> float:
        return math.exp(self.ln_a)

    @property
    def ln_sec(self) -> float:
        return -self.ln_t

    @property
    def ln_tan(self) -> float:
        return math.log(self.ratio) - self.ln_t


def _check_eta_delta(eta, delta):
    if not (eta > 0 and delta > 0):
        raise ValueError(f"eta and delta must be positive, got eta={eta!r}, delta={delta!r}")
    if not eta < delta:
        raise ValueError(f"need eta < delta, got eta={eta!r}, delta={delta!r}")


def derive_params(n: int, eta: float, delta: float) -> DerivedParams:
    _check_eta_delta(eta, delta)
    r = eta / delta
    ln_t = 0.5 * math.log1p(-r * r)
    t = math.exp(ln_t)
    if t < MIN_T:
        raise ValueError(f"eta/delta = {r!r} too close to 1 (t = {t:.3g})")
    return DerivedParams(n=n, ratio=r, phi=math.asin(r), t=t, ln_t=ln_t, ln_a=n * ln_t)


def _check_phi(phi):
    if not 0 < phi < math.pi / 2:
        raise ValueError(f"phi must lie in (0, pi/2), got {phi!r}")
    if math.cos(phi) < MIN_T:
        raise ValueError(f"phi = {phi!r} too close to pi/2")


def sec_integral_log(m: int, phi: float) -> float:
    """ln int_0^phi sec^m(theta) d theta."""
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m!r}")
    _check_phi(phi)
    return float(sec_log_table(m, phi)[m])


def quadrature_oracle_log(m: int, phi: float) -> float:
    """Same quantity as :func:`sec_integral_log` by adaptive quadrature.

    The integrand is rescaled by its maximum sec^m(phi) so that it stays in
    [0, 1]; the scale is added back in the log domain.
    """
    _check_phi(phi)
    if m < 0 or m > ORACLE_MAX_M:
        raise ValueError(f"oracle is certified for 0 <= m <= {ORACLE_MAX_M}, got {m!r}")
    if m == 0:
        return math.log(phi)
    ln_sec_phi = -math.log(math.cos(phi))

    def f(theta):
        return math.exp(-m * (math.log(math.cos(theta)) + ln_sec_phi))

    val, _ = integrate.quad(f, 0.0, phi, epsabs=0.0, epsrel=1e-13, limit=500)
    return math.log(val) + m * ln_sec_phi


def weight_integral_log(m_exp: int, eta: float, delta: float) -> float:
    """ln int_{-eta}^{eta} (delta^2 - x^2)^(-m_exp/2) dx."""
    if m_exp < 1:
        raise ValueError(f"m_exp must be >= 1, got {m_exp!r}")
    p = derive_params(1, eta, delta)
    return math.log(2.0) + (1 - m_exp) * math.log(delta) + sec_integral_log(m_exp - 1, p.phi)


def weight_quadrature_oracle_log(m_exp: int, eta: float, delta: float) -> float:
    """x-domain quadrature of the weight integral, rescaled by its value at x = eta."""
    _check_eta_delta(eta, delta)
    if m_exp < 0 or m_exp > ORACLE_MAX_M:
        raise ValueError(f"oracle is certified for 0 <= m_exp <= {ORACLE_MAX_M}, got {m_exp!r}")
    d2 = delta * delta
    ln_edge = math.log(d2 - eta * eta)

    def f(x):
        return math.exp(-0.5 * m_exp * (math.log(d2 - x * x) - ln_edge))

    val, _ = integrate.quad(f, 0.0, eta, epsabs=0.0, epsrel=1e-13, limit=500)
    return math.log(2.0 * val) - 0.5 * m_exp * ln_edge


def secant_exponents(n: int) -> np.ndarray:
    """m_i = i(n-i) - 1 for i = 1 .. n-1."""
    i = np.arange(1, n, dtype=np.int64)
    return i * (n - i) - 1


def _secant_factor_logs(n, phi):
    ms = secant_exponents(n)
    table = sec_log_table(int(ms.max()), phi)
    return ms, table[ms]


def secant_product_log(n: int, eta: float, delta: float) -> float:
    """ln prod_{i=1}^{n-1} int_0^phi sec^(i(n-i)-1)."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n!r}")
    p = derive_params(n, eta, delta)
    _, logs = _secant_factor_logs(n, p.phi)
    return math.fsum(logs)


def product_integrals_log(n: int, eta: float, delta: float) -> float:
    """ln prod_{i=1}^{n-1} int_{-eta}^{eta} (delta^2 - x^2)^(-i(n-i)/2) dx.

    One recurrence pass up to max_i i(n-i) - 1 serves every factor.
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n!r}")
    p = derive_params(n, eta, delta)
    ms, logs = _secant_factor_logs(n, p.phi)
    ln_delta = math.log(delta)
    # 2 delta^(1 - k) with k = m + 1
    jac = math.log(2.0) - ms * ln_delta
    return math.fsum((jac + logs).tolist())
