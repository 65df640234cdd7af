"""Pure-Python secant-power recurrence, used when the compiled module is absent."""

import math

import numpy as np


def sec_log_table(m_max, phi):
    """ln of int_0^phi sec^m for m = 0 .. m_max, as a float64 array."""
    if m_max < 0:
        raise ValueError("m_max must be >= 0")
    ln_sec = -math.log(math.cos(phi))
    ln_tan = math.log(math.tan(phi))
    out = [math.log(phi)]
    if m_max >= 1:
        # ln(sec + tan) == asinh(tan), stable for small phi
        out.append(math.log(math.asinh(math.tan(phi))))
    if m_max >= 2:
        out.append(ln_tan)
    log, log1p, exp = math.log, math.log1p, math.exp
    for m in range(3, m_max + 1):
        head = (m - 2) * ln_sec + ln_tan - log(m - 1)
        rest = log1p(-1.0 / (m - 1)) + out[m - 2]
        if head < rest:
            head, rest = rest, head
        out.append(head + log1p(exp(rest - head)))
    return np.asarray(out, dtype=np.float64)
