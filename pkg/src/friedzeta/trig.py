"""Real trigonometric polynomials on the 2-torus.

Roof functions and time changes are finite sums

    f(x) = c0 + sum_t  a_t * cos(2*pi*<k_t, x>) + b_t * sin(2*pi*<k_t, x>)

with integer frequency vectors k_t.  Rational points are evaluated through
the residue of <k, num> modulo the common denominator, which keeps the
phase argument in [0, 2*pi) and makes evaluation independent of which lift
of the point is supplied.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

__all__ = ["TrigPolynomial"]


@dataclass(frozen=True)
class TrigPolynomial:
    """Finite trigonometric polynomial on the 2-torus.

    Parameters
    ----------
    constant : float
        Constant Fourier term.
    terms : tuple of (int, int, float, float)
        Nonconstant terms ``(k1, k2, cos_coef, sin_coef)``.  A term with
        ``k = (0, 0)`` is rejected; fold it into ``constant``.
    """

    constant: float = 0.0
    terms: tuple[tuple[int, int, float, float], ...] = field(default_factory=tuple)

    def __post_init__(self):
        for k1, k2, _, _ in self.terms:
            if k1 == 0 and k2 == 0:
                raise ValueError("constant term must go in 'constant', not terms")
            if not (isinstance(k1, int) and isinstance(k2, int)):
                raise TypeError("frequencies must be integers")

    @classmethod
    def const(cls, value: float) -> "TrigPolynomial":
        return cls(constant=float(value))

    @classmethod
    def cosine(cls, k: tuple[int, int], amplitude: float, constant: float = 0.0) -> "TrigPolynomial":
        """Shorthand for ``constant + amplitude*cos(2*pi*<k, x>)``."""
        return cls(constant=float(constant), terms=((int(k[0]), int(k[1]), float(amplitude), 0.0),))

    @property
    def is_constant(self) -> bool:
        return not self.terms

    def lower_bound(self) -> float:
        """Certified lower bound: constant minus the l1 norm of the rest."""
        return self.constant - sum(abs(a) + abs(b) for _, _, a, b in self.terms)

    def value(self, x1: float, x2: float) -> float:
        v = self.constant
        for k1, k2, a, b in self.terms:
            ph = 2.0 * math.pi * (k1 * x1 + k2 * x2)
            v += a * math.cos(ph) + b * math.sin(ph)
        return v

    def value_at_rational(self, num1: int, num2: int, den: int) -> float:
        v = self.constant
        for k1, k2, a, b in self.terms:
            ph = 2.0 * math.pi * ((k1 * num1 + k2 * num2) % den) / den
            v += a * math.cos(ph) + b * math.sin(ph)
        return v

    def arrays(self):
        """Coefficient arrays ``(constant, k1, k2, cos, sin)`` for the kernels."""
        n = len(self.terms)
        k1 = np.empty(n, dtype=np.int64)
        k2 = np.empty(n, dtype=np.int64)
        ca = np.empty(n, dtype=np.float64)
        sa = np.empty(n, dtype=np.float64)
        for i, (f1, f2, a, b) in enumerate(self.terms):
            k1[i], k2[i], ca[i], sa[i] = f1, f2, a, b
        return self.constant, k1, k2, ca, sa

    def __mul__(self, scalar: float) -> "TrigPolynomial":
        return TrigPolynomial(
            constant=self.constant * scalar,
            terms=tuple((k1, k2, a * scalar, b * scalar) for k1, k2, a, b in self.terms),
        )

    __rmul__ = __mul__
