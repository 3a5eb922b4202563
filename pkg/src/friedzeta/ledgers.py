"""Exact bookkeeping at the spectral point 0.

Enumerates which shifted Selberg factors can reach 0, the resonance
multiplicities on hyperbolic 3-manifolds from cohomology dimensions, and
the vanishing orders of Selberg zetas on trace-free symmetric tensors
from user-supplied kernel dimensions.
"""

from __future__ import annotations

from .errors import ValidationError

__all__ = [
    "condition_enumerate",
    "resonance_multiplicity_ledger",
    "selberg_order_ledger",
]


def condition_enumerate(k: int, n0: int = 2) -> list[tuple[int, int, int]]:
    """Triples ``(l, q, p)`` with ``2(q - l) + p + k <= 0`` and ``l <= k``.

    These index the Selberg factors whose shifted argument can contribute
    a zero or pole at 0; the list is finite and exact.
    """
    if k < 0 or n0 < 1:
        raise ValidationError("need k >= 0 and n0 >= 1")
    out = []
    for l in range(0, min(k, n0) + 1):
        for q in range(0, l + 1):
            p_top = 2 * (l - q) - k
            for p in range(0, p_top + 1):
                out.append((l, q, p))
    return sorted(out)


def resonance_multiplicity_ledger(h0: int, h1: int) -> dict[int, int]:
    """Multiplicity of 0 as a resonance in each form degree, dimension 5.

    ``m_0 = h0``, ``m_1 = 2 h1``, ``m_2 = 2(h1 + h0)`` and the duality
    ``m_{4-k} = m_k``; inputs are twisted cohomology dimensions.
    """
    if h0 < 0 or h1 < 0:
        raise ValidationError("cohomology dimensions must be nonnegative")
    m = {0: h0, 1: 2 * h1, 2: 2 * (h1 + h0)}
    m[3] = m[1]
    m[4] = m[0]
    return m


def selberg_order_ledger(n: int, m: int, s0: float, kernel_dim: int) -> int:
    """Zero order of the symmetric-tensor Selberg zeta at ``s0``.

    ``kernel_dim`` if ``s0 != n/2`` and twice that at the symmetric point
    ``s0 = n/2``; requires even ``n`` and ``m >= 1``.
    """
    if n < 2 or n % 2:
        raise ValidationError("n must be even and >= 2")
    if m < 1:
        raise ValidationError("tensor order m must be >= 1")
    if kernel_dim < 0:
        raise ValidationError("kernel dimension must be nonnegative")
    return 2 * kernel_dim if float(s0) == n / 2.0 else kernel_dim
