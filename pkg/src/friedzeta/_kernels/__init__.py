"""Birkhoff-sum kernels: compiled core with a numpy fallback.

The compiled extension is preferred when importable; set the environment
variable ``FRIEDZETA_PURE_PYTHON=1`` to force the numpy backend.  Both
backends produce identical block outputs, and the driver's block structure
is fixed by the data size, so results do not depend on the worker count.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import _birkhoff_np

if os.environ.get("FRIEDZETA_PURE_PYTHON"):
    _impl = _birkhoff_np
    BACKEND = "python"
else:
    try:
        from . import _birkhoff as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        _impl = _birkhoff_np
        BACKEND = "python"

_KERNEL_BLOCK = 1 << 14

__all__ = ["BACKEND", "birkhoff_sums", "available_backends", "get_backend"]


def available_backends() -> dict[str, object]:
    """Importable kernel implementations, keyed by name."""
    impls: dict[str, object] = {"python": _birkhoff_np}
    try:
        from . import _birkhoff  # type: ignore[attr-defined]

        impls["cython"] = _birkhoff
    except ImportError:
        pass
    return impls


def get_backend(name: str | None = None):
    if name is None:
        return _impl
    return available_backends()[name]


def birkhoff_sums(
    num1: np.ndarray,
    num2: np.ndarray,
    den: int,
    matrix,
    steps: int,
    roof,
    time_change=None,
    tau: float = 0.0,
    workers: int | None = None,
    backend: str | None = None,
) -> np.ndarray:
    """Birkhoff sums of the effective roof over ``steps`` iterates.

    Parameters
    ----------
    num1, num2 : int64 arrays
        Numerators of the rational base points.
    den : int
        Common denominator (positive).
    matrix : 2x2 integer matrix
        Iterated map; reduced mod ``den`` before dispatch.
    steps : int
        Number of iterates in each Birkhoff sum.
    roof, time_change : TrigPolynomial
        Effective roof is ``roof * (1 + tau*time_change)``.
    workers : int, optional
        Thread count for block dispatch; the result is identical for any
        value because blocks are disjoint output slices.
    """
    n = len(num1)
    out = np.empty(n, dtype=np.float64)
    if n == 0:
        return out
    den = int(den)
    if den <= 0:
        raise ValueError("denominator must be positive")
    a11, a12 = int(matrix[0][0]) % den, int(matrix[0][1]) % den
    a21, a22 = int(matrix[1][0]) % den, int(matrix[1][1]) % den
    rconst, rk1, rk2, rcos, rsin = roof.arrays()
    if time_change is None or tau == 0.0:
        gconst = 0.0
        gk1 = np.empty(0, dtype=np.int64)
        gk2 = np.empty(0, dtype=np.int64)
        gcos = np.empty(0, dtype=np.float64)
        gsin = np.empty(0, dtype=np.float64)
        tau = 0.0
    else:
        gconst, gk1, gk2, gcos, gsin = time_change.arrays()
    impl = get_backend(backend)
    args = (
        np.ascontiguousarray(num1, dtype=np.int64),
        np.ascontiguousarray(num2, dtype=np.int64),
        den,
        a11,
        a12,
        a21,
        a22,
        int(steps),
        float(rconst),
        rk1,
        rk2,
        rcos,
        rsin,
        float(gconst),
        gk1,
        gk2,
        gcos,
        gsin,
        float(tau),
        out,
    )
    blocks = [(i, min(i + _KERNEL_BLOCK, n)) for i in range(0, n, _KERNEL_BLOCK)]
    if workers is None:
        workers = min(len(blocks), os.cpu_count() or 1)
    workers = max(1, int(workers))
    if impl is _birkhoff_np:
        # the fallback holds the GIL between ufunc calls, so thread dispatch
        # only adds contention; results are block-identical either way
        workers = 1
    if workers == 1 or len(blocks) == 1:
        for lo, hi in blocks:
            impl.birkhoff_sums(*args, lo, hi)
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(impl.birkhoff_sums, *args, lo, hi) for lo, hi in blocks]
            for f in futures:
                f.result()
    return out
