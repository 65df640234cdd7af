"""Closed-form bounds and approximations for the LLL basis count.

Every bound is returned as a :class:`BoundsReport` that also carries the
exactly computed quantity it claims to bracket, so the claim can be checked
at the evaluation point.  The numeric constants are used exactly as printed
in the source derivation; :func:`constant_audit` recomputes them separately.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .census import (
    ReductionParams,
    Regime,
    RegimeError,
    exact_log_count_eq2,
    prefactor_log,
)
from .logdomain import LogReal, lr_cmp, lr_from_log
from .secint import derive_params, secant_product_log
from .specialfn import SandwichPair, log_gamma, xi_inv_prod_log

__all__ = [
    "PRINTED",
    "BoundsReport",
    "AuditEntry",
    "AuditReport",
    "product_one_minus_pow_lower",
    "lemma_even_holds",
    "lemma_even_original_holds",
    "xi_product_bounds_log",
    "xi_prefactor_bounds_log",
    "upper_step_remainder",
    "int_product_bounds_log",
    "int_product_bounds_simplified_log",
    "combined_bounds_log",
    "restricted_bounds_log",
    "rough_approx_log",
    "tight_approx_log",
    "asymptotic_ratio",
    "constant_audit",
    "DEFAULT_C",
    "SANDWICH_N",
    "SANDWICH_ETA_DELTA",
]

LN_2 = math.log(2.0)
LN_3 = math.log(3.0)
LN_5 = math.log(5.0)
LN_PI = math.log(math.pi)

# verbatim from the derivation
PRINTED = {
    "lower_int_tail": 13.0284,
    "upper_int_tail": 2.08647,
    "lower_prefactor": 0.9924,
    "upper_prefactor": 11.4495,
    "lower_lemma": 2.8515,
    "upper_lemma": 9.5903,
    "xi_prod_2_5": 1.85914510535951,
}

DEFAULT_C = 2.0
C_RANGE = (0.5, 4.0)
AUDIT_FLAG_THRESHOLD = 1e-2

# evaluation grid for the bound suites
SANDWICH_N = (22, 30, 40, 60, 80, 120)
SANDWICH_ETA_DELTA = ((0.505, 0.99), (0.51, 0.99), (0.52, 0.9), (0.52, 0.8))


@dataclass(frozen=True)
class BoundsReport:
    """lower < exact < upper, with the verdict evaluated at one point.

    ``target`` names the quantity ``exact`` holds.  For the combined and
    restricted theorems ``diagnostics`` also records the secant-form product
    (the quantity the lemma chain actually composes to) and the
    change-of-variables factor separating it from the full count.
    """

    name: str
    n: int
    eta: float
    delta: float | None
    lower: LogReal
    upper: LogReal
    exact: LogReal | None
    target: str
    regime: Regime
    sandwich_ok: bool
    notes: tuple = ()
    diagnostics: dict = field(default_factory=dict)

    @property
    def lower_gap(self) -> float:
        """ln exact - ln lower (positive when the lower bound holds)."""
        return self.exact.ln_abs - self.lower.ln_abs

    @property
    def upper_gap(self) -> float:
        """ln upper - ln exact (positive when the upper bound holds)."""
        return self.upper.ln_abs - self.exact.ln_abs


def _pt(p):
    return p.n, p.eta, p.delta


def _brackets(lower: float, exact: float, upper: float) -> bool:
    lo, ex, up = lr_from_log(lower), lr_from_log(exact), lr_from_log(upper)
    return lr_cmp(lo, ex) < 0 and lr_cmp(ex, up) < 0


def _report(name, point, lower, exact, upper, target, regime, notes=(), diagnostics=None):
    n, eta, delta = point
    return BoundsReport(
        name=name,
        n=n,
        eta=eta,
        delta=delta,
        lower=lr_from_log(lower),
        upper=lr_from_log(upper),
        exact=lr_from_log(exact),
        target=target,
        regime=regime,
        sandwich_ok=_brackets(lower, exact, upper),
        notes=tuple(notes),
        diagnostics=diagnostics or {},
    )


# ---------------------------------------------------------------- elementary


def product_one_minus_pow_lower(x: float, n: int) -> tuple[float, float]:
    """Both sides of  prod_{k=1}^n (1 - x^k) >= exp(x(1-x^n)/(1-x) (ln(1-x) - 1)).

    Returns ``(lhs_log, rhs_log)``; the lhs is summed term by term.
    """
    if not 0 < x < 1:
        raise ValueError(f"x must lie in (0, 1), got {x!r}")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n!r}")
    ln_x = math.log(x)
    lhs = math.fsum(math.log1p(-math.exp(k * ln_x)) for k in range(1, n + 1))
    geo = x * -math.expm1(n * ln_x) / -math.expm1(ln_x)
    rhs = geo * (math.log1p(-x) - 1.0)
    return lhs, rhs


def _check_lemma_domain(x, l):
    if not 0 < x < math.sqrt(3.0) / 2.0:
        raise ValueError(f"x must lie in (0, sqrt(3)/2), got {x!r}")
    if l < 2:
        raise ValueError(f"l must be >= 2, got {l!r}")


def lemma_even_holds(x: float, l: int) -> bool:
    """(l+2) x^(l-2) - l x^(l+2) < 2."""
    _check_lemma_domain(x, l)
    return (l + 2) * x ** (l - 2) - l * x ** (l + 2) < 2.0


def lemma_even_original_holds(x: float, l: int) -> bool:
    """(1 - x^(l-2)) / l > (1 - x^(l+2)) / (l+2), the form the polynomial one rewrites."""
    _check_lemma_domain(x, l)
    return (1.0 - x ** (l - 2)) / l > (1.0 - x ** (l + 2)) / (l + 2)


# ------------------------------------------------------------- Xi product


def xi_product_bounds_log(n: int) -> SandwichPair:
    """Bounds on prod_{s=2}^n 1/xi(s) before simplification.

    The s = 2..5 factors are exact; s >= 6 uses the weakened Xi bounds and
    integral-test estimates of prod (s-1)^(-(s+3)/2), prod (s-2)^(-(s+3)/2).
    """
    if n < 6:
        raise ValueError(f"n must be >= 6, got {n!r}")
    head = xi_inv_prod_log(5)
    common = head + (n - 5) * (LN_2 + 0.5 * LN_PI) + 0.25 * (n * n - 3 * n - 10) * (
        LN_2 + LN_PI + 1.0
    )
    lower = common - 0.25 * n * (n + 8) * math.log(n) + n * (n + 16) / 8.0 + PRINTED["lower_int_tail"]
    upper = (
        common
        - 0.25 * (n + 8) * (n - 2) * math.log(n - 2)
        + (n + 18) * (n - 2) / 8.0
        + PRINTED["upper_int_tail"]
    )
    return SandwichPair(lr_from_log(lower), lr_from_log(upper))


def _quadratic_part(n, eta):
    # -1/4 n^2 ln n + n^2 (3/4 ln 2 + 1/4 ln pi + 1/2 ln eta + 3/8)
    return -0.25 * n * n * math.log(n) + n * n * (
        0.75 * LN_2 + 0.25 * LN_PI + 0.5 * math.log(eta) + 0.375
    )


def _linear_coeff(eta, tail):
    return -1.25 * LN_2 - 0.25 * LN_PI - 1.5 * math.log(eta) + tail


def _prefactor_lower(n, eta):
    return (
        _quadratic_part(n, eta)
        - 2.0 * n * math.log(n)
        + n * _linear_coeff(eta, 1.25)
        + PRINTED["lower_lemma"]
        + math.log(eta)
    )


def _prefactor_upper(n, eta):
    return (
        _quadratic_part(n, eta)
        - 1.5 * n * math.log(n)
        + n * _linear_coeff(eta, 1.75)
        + 4.0 * math.log(n)
        - PRINTED["upper_lemma"]
        + math.log(eta)
    )


def xi_prefactor_bounds_log(n: int, eta: float) -> BoundsReport:
    """Simplified bounds on 2^((n^2-3n+4)/2) eta^((n-1)(n-2)/2) prod 1/xi(s)."""
    if n < 22:
        raise RegimeError(f"prefactor bounds are gated at n >= 22, got n={n}")
    if not 0 < eta < 1:
        raise ValueError(f"eta must lie in (0, 1), got {eta!r}")
    return _report(
        "xi_prefactor",
        (n, eta, None),
        _prefactor_lower(n, eta),
        prefactor_log(n, eta),
        _prefactor_upper(n, eta),
        "prefactor",
        Regime.BOUND if 0.5 < eta else Regime.GENERAL,
    )


def upper_step_remainder(n: int) -> float:
    """Exact constant left over when ln(n-2) is traded for ln n in the upper chain.

    Returns E(n) such that
      -1/4 n^2 ln(n-2) + n^2/8 - 3/2 n ln(n-2) + 2n + 4 ln(n-2) - 9/2
        = -1/4 n^2 ln n + n^2/8 - 3/2 n ln n + 5/2 n + 4 ln n + E(n).
    The derivation takes E(n) < -3/2; E(n) actually increases toward -1.
    """
    if n < 3:
        raise ValueError(f"n must be >= 3, got {n!r}")
    gap = -math.log1p(-2.0 / n)  # ln n - ln(n-2)
    return 0.25 * n * n * gap + 1.5 * n * gap - 4.0 * gap - 0.5 * n - 4.5


# --------------------------------------------------------- integral product


def _int_geometry(p):
    d = derive_params(p.n, p.eta, p.delta)
    return d, math.log(p.eta / p.delta)


def _a_correction(n, ln_a):
    """a(1 - a^(n-1))/(1 - a) (ln(1-a) - 1), safe as a -> 0."""
    a = math.exp(ln_a)
    if a == 0.0:
        return 0.0
    geo = a * -math.expm1((n - 1) * ln_a) / -math.expm1(ln_a)
    return geo * (math.log1p(-a) - 1.0)


def int_product_bounds_log(p: ReductionParams) -> BoundsReport:
    """Bounds on prod_{i=1}^{n-1} int_0^phi sec^(i(n-i)-1)."""
    p.require(Regime.BOUND)
    n = p.n
    d, ln_ratio = _int_geometry(p)
    cubic = (n - 1) * (n - 3) * (n + 4) / 6.0
    lower = (
        -(n - 1) * ln_ratio
        - log_gamma(n)
        - (n - 1) * math.log(n)
        - cubic * d.ln_t
        + _a_correction(n, d.ln_a)
    )
    upper = (n - 1) * ln_ratio - cubic * d.ln_t
    exact = secant_product_log(n, p.eta, p.delta)
    return _report("int_product", _pt(p), lower, exact, upper, "secant_product", p.regime)


def int_product_bounds_simplified_log(p: ReductionParams) -> BoundsReport:
    """The same product bounded through a = t^n only."""
    p.require(Regime.BOUND)
    n = p.n
    d, ln_ratio = _int_geometry(p)
    lower = (
        -(n - 1) * ln_ratio
        - 2.0 * (n - 1) * math.log(n)
        + _a_correction(n, d.ln_a)
        + (3.0 - n * n / 6.0) * d.ln_a
    )
    upper = (n - 1) * ln_ratio - n * n / 6.0 * d.ln_a
    exact = secant_product_log(n, p.eta, p.delta)
    return _report("int_product_simplified", _pt(p), lower, exact, upper, "secant_product", p.regime)


# ------------------------------------------------------------- full count


def _change_of_variables_log(p):
    """ln prod_i 2 delta^(1 - i(n-i)), the factor between weight and secant integrals."""
    n = p.n
    return (n - 1) * LN_2 + ((n - 1) - n * (n * n - 1) / 6.0) * math.log(p.delta)


def _attribute(p, lower, exact, upper, secant_form, upper_const_slack):
    """Explain a failed bracket of the full count, if one explanation suffices."""
    notes = []
    if _brackets(lower, exact, upper):
        return notes
    if upper_const_slack and _brackets(lower, exact, upper + upper_const_slack):
        notes.append(
            "fails only through the printed upper constant 9.5903; "
            f"the tightened constant (+{upper_const_slack:g} in ln) restores the bracket"
        )
    if _brackets(lower, secant_form, upper):
        notes.append(
            "bounds bracket prefactor * prod int_0^phi sec^(i(n-i)-1) but not the full count; "
            "the change-of-variables factor prod 2 delta^(1-i(n-i)) "
            f"(ln = {exact - secant_form:.6g}) is absent from the bound"
        )
    if not notes:
        notes.append("no single-cause attribution found")
    return notes


def combined_bounds_log(p: ReductionParams) -> BoundsReport:
    """Closed-form lower and upper bounds on the full count (n >= 22)."""
    p.require(Regime.BOUND)
    n, eta = p.n, p.eta
    d, ln_ratio = _int_geometry(p)
    ln_a = d.ln_a
    lower = (
        -(n - 1) * ln_ratio
        + _quadratic_part(n, eta)
        - n * n / 6.0 * ln_a
        - 4.0 * n * math.log(n)
        + n * _linear_coeff(eta, 1.25)
        + PRINTED["lower_lemma"]
        + math.log(eta)
        + _a_correction(n, ln_a)
        + 3.0 * ln_a
    )
    upper = (
        (n - 1) * ln_ratio
        + _quadratic_part(n, eta)
        - n * n / 6.0 * ln_a
        - 1.5 * n * math.log(n)
        + n * _linear_coeff(eta, 1.75)
        + 4.0 * math.log(n)
        - PRINTED["upper_lemma"]
        + math.log(eta)
    )
    exact = exact_log_count_eq2(p)
    secant_form = prefactor_log(n, eta) + secant_product_log(n, eta, p.delta)
    slack = PRINTED["upper_prefactor"] - _tight_upper_prefactor()
    notes = _attribute(p, lower, exact, upper, secant_form, slack)
    diag = {
        "secant_form_ln": secant_form,
        "change_of_variables_ln": _change_of_variables_log(p),
        "secant_form_ok": _brackets(lower, secant_form, upper),
    }
    return _report("combined", _pt(p), lower, exact, upper, "count", p.regime, notes, diag)


def _restricted_quadratic(p, ln_a):
    return _quadratic_part(p.n, p.eta) - p.n * p.n / 6.0 * ln_a


def restricted_bounds_log(p: ReductionParams) -> BoundsReport:
    """Bounds for 1/2 < eta < 3/(4 sqrt 2), 3/4 < delta < 1, n >= 22."""
    p.require(Regime.RESTRICTED)
    n = p.n
    d = derive_params(n, p.eta, p.delta)
    q = _restricted_quadratic(p, d.ln_a)
    lower = q - 4.0 * n * math.log(n)
    upper = q - 0.5 * n * math.log(n)
    exact = exact_log_count_eq2(p)
    secant_form = prefactor_log(n, p.eta) + secant_product_log(n, p.eta, p.delta)
    notes = _attribute(p, lower, exact, upper, secant_form, 0.0)
    diag = {
        "secant_form_ln": secant_form,
        "change_of_variables_ln": _change_of_variables_log(p),
        "secant_form_ok": _brackets(lower, secant_form, upper),
    }
    return _report("restricted", _pt(p), lower, exact, upper, "count", p.regime, notes, diag)


# ----------------------------------------------------------- approximations


def rough_approx_log(p: ReductionParams, check_regime: bool = True) -> float:
    """ln t^(-n^3/6) with t = cos(arcsin(eta/delta))."""
    if check_regime:
        p.require(Regime.RESTRICTED)
    d = derive_params(p.n, p.eta, p.delta)
    return -(p.n ** 3) / 6.0 * d.ln_t


def tight_approx_log(p: ReductionParams, c: float = DEFAULT_C, check_regime: bool = True) -> float:
    """Rough approximation times exp(quadratic part - c n ln n), 1/2 <= c <= 4."""
    if not C_RANGE[0] <= c <= C_RANGE[1]:
        raise ValueError(f"c must lie in [1/2, 4], got {c!r}")
    rough = rough_approx_log(p, check_regime=check_regime)
    return rough + _quadratic_part(p.n, p.eta) - c * p.n * math.log(p.n)


def asymptotic_ratio(p: ReductionParams, check_regime: bool = True) -> float:
    """ln(rough approximation) / ln(count)."""
    rough = rough_approx_log(p, check_regime=check_regime)
    exact = exact_log_count_eq2(p)
    if exact == 0.0:
        raise ZeroDivisionError("ln count is zero")
    return rough / exact


# ------------------------------------------------------------------- audit


@dataclass(frozen=True)
class AuditEntry:
    name: str
    printed_value: float
    recomputed_value: float
    deviation: float
    tolerance: float
    expression: str

    @property
    def within_tolerance(self) -> bool:
        return self.deviation <= self.tolerance

    @property
    def flagged(self) -> bool:
        return self.deviation > AUDIT_FLAG_THRESHOLD


@dataclass(frozen=True)
class AuditReport:
    entries: tuple

    def __getitem__(self, name):
        for e in self.entries:
            if e.name == name:
                return e
        raise KeyError(name)

    @property
    def flagged(self):
        return [e for e in self.entries if e.flagged]


def _lower_int_tail():
    return 25 / 4 * LN_5 - 25 / 8 + 10 * LN_5 - 10


def _upper_int_tail():
    return 9 / 4 * LN_3 - 9 / 8 + 15 / 2 * LN_3 - 15 / 2


def _identity_constant():
    # constant term of (2 sqrt pi)^(n-5) (2 pi e)^((n^2-3n-10)/4) 2^((n^2-3n+4)/2) / eta
    return -5.5 * LN_2 - 5.0 * LN_PI - 2.5


def _upper_prefactor(step_constant):
    return -(step_constant + _upper_int_tail() + _identity_constant())


def _tight_upper_prefactor():
    # sup_{n >= 22} upper_step_remainder(n) is its limit -1
    return _upper_prefactor(-1.0)


def constant_audit() -> AuditReport:
    """Recompute each printed constant from the expression it abbreviates."""
    xi25 = xi_inv_prod_log(5)
    lower_pref = _lower_int_tail() + _identity_constant()
    upper_pref = _upper_prefactor(-1.5)
    tight_pref = _tight_upper_prefactor()
    rows = [
        ("lower_int_tail", "lower_int_tail", _lower_int_tail(), 5e-4,
         "25/4 ln5 - 25/8 + 10 ln5 - 10"),
        ("upper_int_tail", "upper_int_tail", _upper_int_tail(), 5e-5,
         "9/4 ln3 - 9/8 + 15/2 ln3 - 15/2"),
        ("lower_prefactor", "lower_prefactor", lower_pref, AUDIT_FLAG_THRESHOLD,
         "lower_int_tail - 11/2 ln2 - 5 ln pi - 5/2"),
        ("lower_lemma", "lower_lemma", lower_pref + xi25, AUDIT_FLAG_THRESHOLD,
         "lower_prefactor + xi_prod_2_5"),
        ("upper_prefactor", "upper_prefactor", upper_pref, AUDIT_FLAG_THRESHOLD,
         "-(-3/2 + upper_int_tail - 11/2 ln2 - 5 ln pi - 5/2)"),
        ("upper_lemma", "upper_lemma", upper_pref - xi25, AUDIT_FLAG_THRESHOLD,
         "upper_prefactor - xi_prod_2_5"),
        ("upper_prefactor_tight_step", "upper_prefactor", tight_pref, AUDIT_FLAG_THRESHOLD,
         "as upper_prefactor with the ln n vs ln(n-2) step constant -3/2 replaced by "
         "sup_n E(n) = -1"),
        ("upper_lemma_tight_step", "upper_lemma", tight_pref - xi25, AUDIT_FLAG_THRESHOLD,
         "upper_prefactor_tight_step - xi_prod_2_5"),
        ("xi_prod_2_5", "xi_prod_2_5", xi25, 1e-9,
         "sum_{s=2}^{5} -ln xi(s) = ln 8 - ln zeta(3) - ln zeta(5)"),
    ]
    entries = tuple(
        AuditEntry(name, PRINTED[key], value, abs(PRINTED[key] - value), tol, expr)
        for name, key, value, tol, expr in rows
    )
    return AuditReport(entries)
