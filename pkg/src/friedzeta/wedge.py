"""Compound (wedge power) matrices and their parameter derivatives."""

from __future__ import annotations

from itertools import combinations

import numpy as np

__all__ = ["compound_matrix", "compound_derivative", "subset_basis"]


def subset_basis(n: int, k: int) -> list[tuple[int, ...]]:
    """Lexicographic basis of k-subsets of range(n)."""
    return list(combinations(range(n), k))


def compound_matrix(m, k: int) -> np.ndarray:
    """Matrix of the induced map on the k-th exterior power.

    Entry ``(I, J)`` is the minor ``det(m[I, J])`` over the lexicographic
    subset basis; ``k = 0`` gives the 1x1 identity.
    """
    m = np.asarray(m)
    n = m.shape[0]
    basis = subset_basis(n, k)
    if k == 0:
        return np.ones((1, 1), dtype=m.dtype)
    out = np.empty((len(basis), len(basis)), dtype=np.result_type(m.dtype, float))
    for a, rows in enumerate(basis):
        for b, cols in enumerate(basis):
            out[a, b] = np.linalg.det(m[np.ix_(rows, cols)])
    return out


def _det_derivative(b, db) -> complex:
    """d/dt det(B(t)) given B and dB: sum of single-column replacements."""
    k = b.shape[0]
    if k == 0:
        return 0.0
    total = 0.0
    for c in range(k):
        m = b.copy()
        m[:, c] = db[:, c]
        total += np.linalg.det(m)
    return total


def compound_derivative(s, ds, k: int) -> np.ndarray:
    """Derivative of the compound matrix: entries ``d/dt det(S[I, J])``."""
    s = np.asarray(s)
    ds = np.asarray(ds)
    n = s.shape[0]
    basis = subset_basis(n, k)
    if k == 0:
        return np.zeros((1, 1), dtype=np.result_type(s.dtype, float))
    out = np.empty((len(basis), len(basis)), dtype=np.result_type(s.dtype, ds.dtype, float))
    for a, rows in enumerate(basis):
        for b, cols in enumerate(basis):
            sub = s[np.ix_(rows, cols)]
            dsub = ds[np.ix_(rows, cols)]
            out[a, b] = _det_derivative(sub, dsub)
    return out
