"""Signed real numbers stored as (sign, natural log of magnitude).

Counts in this package reach magnitudes like e^(10^5), so every quantity is
carried in the log domain.  Products, quotients and powers become sums and
scalings of ``ln_abs``; positive sums use the usual log-sum-exp trick.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import total_ordering

__all__ = [
    "LogReal",
    "ZERO",
    "ONE",
    "lr_from_value",
    "lr_from_log",
    "lr_mul",
    "lr_div",
    "lr_pow",
    "lr_add_pos",
    "lr_cmp",
    "log_add",
    "log1m_exp",
    "log_sub",
]

NEG_INF = float("-inf")


@total_ordering
@dataclass(frozen=True)
class LogReal:
    """A real value ``sign * exp(ln_abs)``.

    ``sign`` is -1, 0 or +1.  Zero is stored as ``(0, -inf)``.
    """

    sign: int
    ln_abs: float

    def __post_init__(self):
        if self.sign not in (-1, 0, 1):
            raise ValueError(f"sign must be -1, 0 or 1, got {self.sign!r}")
        if self.sign == 0:
            if self.ln_abs != NEG_INF:
                object.__setattr__(self, "ln_abs", NEG_INF)
        elif not math.isfinite(self.ln_abs):
            raise ValueError(f"ln_abs must be finite for a nonzero value, got {self.ln_abs!r}")

    @property
    def is_zero(self) -> bool:
        return self.sign == 0

    def to_float(self) -> float:
        """Back to an ordinary float; overflows to +-inf and underflows to 0."""
        if self.sign == 0:
            return 0.0
        try:
            return self.sign * math.exp(self.ln_abs)
        except OverflowError:
            return self.sign * math.inf

    @property
    def log10_exponent(self) -> int:
        """floor(log10 |value|), handy for printing astronomically large counts."""
        if self.sign == 0:
            raise ValueError("zero has no decimal exponent")
        return math.floor(self.ln_abs / math.log(10.0))

    def __mul__(self, other: LogReal) -> LogReal:
        return lr_mul(self, other)

    def __truediv__(self, other: LogReal) -> LogReal:
        return lr_div(self, other)

    def __pow__(self, p: float) -> LogReal:
        return lr_pow(self, p)

    def __eq__(self, other):
        if not isinstance(other, LogReal):
            return NotImplemented
        return lr_cmp(self, other) == 0

    def __lt__(self, other):
        if not isinstance(other, LogReal):
            return NotImplemented
        return lr_cmp(self, other) < 0

    def __hash__(self):
        return hash((self.sign, self.ln_abs))

    def __repr__(self):
        return f"LogReal(sign={self.sign}, ln_abs={self.ln_abs!r})"


ZERO = LogReal(0, NEG_INF)
ONE = LogReal(1, 0.0)


def lr_from_value(v: float) -> LogReal:
    v = float(v)
    if not math.isfinite(v):
        raise ValueError(f"cannot represent non-finite value {v!r}")
    if v == 0.0:
        return ZERO
    return LogReal(1 if v > 0 else -1, math.log(abs(v)))


def lr_from_log(ln_abs: float, sign: int = 1) -> LogReal:
    """Wrap an already-computed natural log.  ``-inf`` maps to zero."""
    if ln_abs == NEG_INF:
        return ZERO
    return LogReal(sign, float(ln_abs))


def lr_mul(a: LogReal, b: LogReal) -> LogReal:
    if a.sign == 0 or b.sign == 0:
        return ZERO
    return LogReal(a.sign * b.sign, a.ln_abs + b.ln_abs)


def lr_div(a: LogReal, b: LogReal) -> LogReal:
    if b.sign == 0:
        raise ZeroDivisionError("LogReal division by zero")
    if a.sign == 0:
        return ZERO
    return LogReal(a.sign * b.sign, a.ln_abs - b.ln_abs)


def lr_pow(a: LogReal, p: float) -> LogReal:
    if p == 0:
        return ONE
    if a.sign == 1:
        return LogReal(1, p * a.ln_abs)
    integral = float(p).is_integer()
    if not integral or p < 0:
        raise ValueError(
            f"non-positive base {a!r} needs a nonnegative integer exponent, got {p!r}"
        )
    if a.sign == 0:
        return ZERO
    sign = -1 if int(p) % 2 else 1
    return LogReal(sign, p * a.ln_abs)


def log_add(x: float, y: float) -> float:
    """ln(e^x + e^y) without overflow."""
    if x < y:
        x, y = y, x
    if y == NEG_INF:
        return x
    return x + math.log1p(math.exp(y - x))


def log1m_exp(x: float) -> float:
    """ln(1 - e^x) for x < 0."""
    if x >= 0:
        raise ValueError(f"log1m_exp needs x < 0, got {x!r}")
    # switch point -ln 2 keeps both branches accurate
    if x > -0.6931471805599453:
        return math.log(-math.expm1(x))
    return math.log1p(-math.exp(x))


def log_sub(x: float, y: float) -> float:
    """ln(e^x - e^y) for x > y."""
    if y == NEG_INF:
        return x
    if not x > y:
        raise ValueError(f"log_sub needs x > y, got x={x!r}, y={y!r}")
    return x + log1m_exp(y - x)


def lr_add_pos(a: LogReal, b: LogReal) -> LogReal:
    if a.sign < 0 or b.sign < 0:
        raise ValueError("lr_add_pos only adds nonnegative values")
    if a.sign == 0:
        return b
    if b.sign == 0:
        return a
    return LogReal(1, log_add(a.ln_abs, b.ln_abs))


def lr_cmp(a: LogReal, b: LogReal) -> int:
    """-1, 0 or +1 as a <, ==, > b (exact, no tolerance)."""
    if a.sign != b.sign:
        return -1 if a.sign < b.sign else 1
    if a.sign == 0 or a.ln_abs == b.ln_abs:
        return 0
    bigger = a.ln_abs > b.ln_abs
    if a.sign > 0:
        return 1 if bigger else -1
    return -1 if bigger else 1
