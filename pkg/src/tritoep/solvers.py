"""Exact O(order) direct solvers for tridiagonal Toeplitz systems.

Two banded eliminations are provided. ``thomas_solve`` is the classic
scalar forward-elimination / back-substitution pass; its pivot recurrence
is s_1 = diag, s_k = diag - sub*sup/s_{k-1}, and it breaks down whenever a
pivot vanishes (for instance on any matrix with a zero diagonal).
``block_lu_solve`` eliminates 2x2 blocks instead, with one trailing 1x1
block at odd order, and only requires the block pivots to be nonsingular,
so it handles zero-diagonal matrices the scalar pass cannot.

Neither routine swaps rows: pivoting would destroy the O(1) band
description. Inputs that genuinely need pivoting belong to
``dense_gepp_solve``, the dense Gaussian-elimination oracle used by the
test suite for cross-checking.

All solvers are pure: right-hand sides are copied, never mutated, and the
columns of a multi-column right-hand side are eliminated independently, so
solving a block of columns is bit-identical to solving them one by one.
"""

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .core import TridiagToeplitz
from .errors import SingularMatrix, SingularPivotBlock, ZeroPivot

# Pivots at or below SINGULARITY_RTOL times the band scale are treated as
# exact breakdown. The factor is tiny on purpose: ill-conditioned systems
# must still be solved (and their error observed), not rejected.
SINGULARITY_RTOL = 1e-300


@dataclass(frozen=True)
class PivotFactorization:
    """Pivot data of a banded elimination.

    mode "scalar": pivots holds the order scalar pivots s_1..s_n.
    mode "block2x2": pivots holds four entries (p_k, sup, sub, diag) per
    2x2 block, row-major, followed by the trailing 1x1 pivot when the
    order is odd. Only p_k varies from block to block.
    """

    order: int
    mode: str
    pivots: np.ndarray


def _as_work_rhs(order: int, rhs) -> tuple[np.ndarray, bool]:
    """Validate and copy a right-hand side into (n, k) Fortran order."""
    r = np.array(rhs, dtype=np.float64, order="F")
    if r.ndim not in (1, 2):
        raise ValueError(f"right-hand side must be 1-D or 2-D, got ndim={r.ndim}")
    if r.shape[0] != order:
        raise ValueError(f"right-hand side has {r.shape[0]} rows, matrix order is {order}")
    if r.ndim == 1:
        return r.reshape((-1, 1), order="F"), True
    return r, False


def _scalar_pivots(t: TridiagToeplitz) -> np.ndarray:
    s = np.empty(t.order)
    code = _kernels.thomas_pivots(t.diag, t.sub, t.sup, s,
                                  SINGULARITY_RTOL * t.band_scale)
    if code:
        raise ZeroPivot(code)
    return s


def _block_pivots(t: TridiagToeplitz) -> tuple[np.ndarray, np.ndarray, float]:
    """Block pivot (1,1) entries and determinants, plus the trailing 1x1 pivot
    (0.0 when the order is even; unused in that case)."""
    thr = SINGULARITY_RTOL * t.band_scale
    n = t.order
    K = n // 2
    if K == 0:  # order 1: a single 1x1 block
        if abs(t.diag) <= thr:
            raise SingularPivotBlock(1)
        return np.empty(0), np.empty(0), t.diag
    p = np.empty(K)
    det = np.empty(K)
    code = _kernels.block_pivots(t.diag, t.sub, t.sup, p, det, thr)
    if code:
        raise SingularPivotBlock(code)
    plast = 0.0
    if n % 2:
        plast = t.diag - t.sup * t.sub * p[K - 1] / det[K - 1]
        if abs(plast) <= thr:
            raise SingularPivotBlock(K + 1)
    return p, det, plast


def factorize(t: TridiagToeplitz, mode: str = "block2x2") -> PivotFactorization:
    """Compute and package the pivot sequence of the requested elimination.

    Raises ZeroPivot (scalar mode) or SingularPivotBlock (block mode) when
    the elimination breaks down.
    """
    if mode == "scalar":
        return PivotFactorization(t.order, mode, _scalar_pivots(t))
    if mode == "block2x2":
        p, det, plast = _block_pivots(t)
        entries = np.empty(4 * p.size + (t.order % 2))
        entries[0::4][: p.size] = p
        entries[1::4][: p.size] = t.sup
        entries[2::4][: p.size] = t.sub
        entries[3::4][: p.size] = t.diag
        if t.order % 2:
            entries[-1] = plast
        return PivotFactorization(t.order, mode, entries)
    raise ValueError(f"unknown factorization mode {mode!r}")


def thomas_solve(t: TridiagToeplitz, rhs) -> np.ndarray:
    """Solve t @ X = rhs by scalar elimination in O(order * cols).

    Raises ZeroPivot when a scalar pivot vanishes; the 2x2 block solver is
    the fallback for such matrices.
    """
    r, squeeze = _as_work_rhs(t.order, rhs)
    s = _scalar_pivots(t)
    if r.shape[1]:
        _kernels.thomas_sweeps(t.sub, t.sup, s, r)
    return r[:, 0] if squeeze else r


def block_lu_solve(t: TridiagToeplitz, rhs) -> np.ndarray:
    """Solve t @ X = rhs by non-pivoting 2x2 block elimination.

    Succeeds whenever every 2x2 pivot block (and the trailing 1x1 block at
    odd order) is nonsingular, which covers zero-diagonal matrices; raises
    SingularPivotBlock otherwise. O(order * cols).
    """
    r, squeeze = _as_work_rhs(t.order, rhs)
    p, det, plast = _block_pivots(t)
    if r.shape[1]:
        if t.order == 1:
            r /= plast
        else:
            _kernels.block_sweeps(t.diag, t.sub, t.sup, p, det, plast, r)
    return r[:, 0] if squeeze else r


def solve_transpose(t: TridiagToeplitz, rhs) -> np.ndarray:
    """Solve t.T @ Y = rhs, i.e. block_lu_solve on the band-swapped matrix."""
    return block_lu_solve(t.transposed(), rhs)


def dense_gepp_solve(a: np.ndarray, rhs) -> np.ndarray:
    """Gaussian elimination with partial pivoting on a dense square matrix.

    This is the reference oracle for the banded solvers; it is meant for
    modest orders (a few hundred), not production solves. Raises
    SingularMatrix when no usable pivot exists in some column.
    """
    a = np.array(a, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"matrix must be square, got shape {a.shape}")
    n = a.shape[0]
    x, squeeze = _as_work_rhs(n, rhs)
    thr = SINGULARITY_RTOL * max(1.0, np.abs(a).max())
    for k in range(n):
        piv = k + int(np.argmax(np.abs(a[k:, k])))
        if abs(a[piv, k]) <= thr:
            raise SingularMatrix(f"no pivot in column {k + 1}")
        if piv != k:
            a[[k, piv], k:] = a[[piv, k], k:]
            x[[k, piv]] = x[[piv, k]]
        mult = a[k + 1:, k] / a[k, k]
        a[k + 1:, k + 1:] -= np.outer(mult, a[k, k + 1:])
        x[k + 1:] -= np.outer(mult, x[k])
    for k in range(n - 1, -1, -1):
        x[k] = (x[k] - a[k, k + 1:] @ x[k + 1:]) / a[k, k]
    return x[:, 0] if squeeze else x
