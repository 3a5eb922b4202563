"""Vectorized numpy fallback for the Birkhoff-sum kernel.

Mirrors the arithmetic of the compiled kernel term by term so both
backends agree to the last few ulps: per point, the step loop runs
sequentially and each trig term is added in declaration order.
"""

from __future__ import annotations

import numpy as np

TWO_PI = 2.0 * np.pi


def birkhoff_sums(
    num1,
    num2,
    den,
    a11,
    a12,
    a21,
    a22,
    steps,
    roof_const,
    rk1,
    rk2,
    rcos,
    rsin,
    g_const,
    gk1,
    gk2,
    gcos,
    gsin,
    tau,
    out,
    start,
    stop,
):
    """Accumulate ``sum_i roof(A^i x) * (1 + tau*g(A^i x))`` into ``out``.

    ``num1, num2`` are numerators of rational points with common
    denominator ``den``; iteration is exact int64 arithmetic mod ``den``.
    """
    x1 = num1[start:stop].copy()
    x2 = num2[start:stop].copy()
    acc = np.zeros(stop - start, dtype=np.float64)
    has_g = tau != 0.0 and (g_const != 0.0 or len(gk1) > 0)
    for _ in range(steps):
        r = np.full_like(acc, roof_const)
        for t in range(len(rk1)):
            ph = (TWO_PI / den) * ((rk1[t] * x1 + rk2[t] * x2) % den)
            r += rcos[t] * np.cos(ph) + rsin[t] * np.sin(ph)
        if has_g:
            g = np.full_like(acc, g_const)
            for t in range(len(gk1)):
                ph = (TWO_PI / den) * ((gk1[t] * x1 + gk2[t] * x2) % den)
                g += gcos[t] * np.cos(ph) + gsin[t] * np.sin(ph)
            acc += r * (1.0 + tau * g)
        else:
            acc += r
        x1, x2 = (a11 * x1 + a12 * x2) % den, (a21 * x1 + a22 * x2) % den
    out[start:stop] = acc
