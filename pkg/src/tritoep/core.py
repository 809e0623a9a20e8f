"""Tridiagonal Toeplitz domain types and band-level primitives.

A tridiagonal Toeplitz matrix is fully described by three band values and
an order, so the scalar triple (diag, sup, sub) is the working
representation everywhere; dense assembly exists for oracles and tests.
Matrices of numbers (right-hand sides, solutions) are plain float64
numpy arrays stored column-major, which makes column stacking a zero-copy
reshape. Indices in messages and reports are 1-based, matching the usual
linear-algebra convention; array code is 0-based internally.
"""

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class TridiagToeplitz:
    """Constant-banded tridiagonal matrix: diag on the main diagonal,
    sup on the first superdiagonal, sub on the first subdiagonal."""

    order: int
    diag: float
    sup: float
    sub: float

    def __post_init__(self):
        if self.order < 1:
            raise ValueError(f"order must be >= 1, got {self.order}")
        object.__setattr__(self, "diag", float(self.diag))
        object.__setattr__(self, "sup", float(self.sup))
        object.__setattr__(self, "sub", float(self.sub))

    @property
    def band_scale(self) -> float:
        """Scale used for singularity thresholds: max(1, |diag|+|sub|+|sup|)."""
        return max(1.0, abs(self.diag) + abs(self.sub) + abs(self.sup))

    def transposed(self) -> "TridiagToeplitz":
        """The transpose, i.e. the same matrix with sub and sup swapped."""
        return TridiagToeplitz(order=self.order, diag=self.diag,
                               sup=self.sub, sub=self.sup)


def assemble_dense(t: TridiagToeplitz) -> np.ndarray:
    """Dense (order, order) array with t's three bands and zeros elsewhere."""
    n = t.order
    out = np.zeros((n, n), order="F")
    np.fill_diagonal(out, t.diag)
    for i in range(n - 1):
        out[i, i + 1] = t.sup
        out[i + 1, i] = t.sub
    return out


def tt_apply(t: TridiagToeplitz, x: np.ndarray) -> np.ndarray:
    """Product of t with a vector or matrix, computed bandwise in O(order * cols)."""
    x = np.asarray(x, dtype=np.float64)
    if x.ndim not in (1, 2):
        raise ValueError(f"operand must be 1-D or 2-D, got ndim={x.ndim}")
    if x.shape[0] != t.order:
        raise ValueError(f"operand has {x.shape[0]} rows, matrix order is {t.order}")
    y = t.diag * x
    if t.order > 1:
        y[:-1] += t.sup * x[1:]
        y[1:] += t.sub * x[:-1]
    return y


def vec(x: np.ndarray) -> np.ndarray:
    """Stack the columns of a matrix into one vector (zero-copy when x is
    already column-major)."""
    x = np.asarray(x, dtype=np.float64)
    if x.ndim != 2:
        raise ValueError(f"vec expects a 2-D array, got ndim={x.ndim}")
    return np.asfortranarray(x).reshape(-1, order="F")


def unvec(v: np.ndarray, rows: int, cols: int) -> np.ndarray:
    """Inverse of vec: reshape a length rows*cols vector back into a matrix."""
    v = np.asarray(v, dtype=np.float64)
    if v.ndim != 1:
        raise ValueError(f"unvec expects a 1-D array, got ndim={v.ndim}")
    if v.size != rows * cols:
        raise ValueError(f"length {v.size} does not match {rows}x{cols}")
    return v.reshape((rows, cols), order="F")


def grcar(n: int) -> TridiagToeplitz:
    """Tridiagonal Grcar test matrix: diagonal 1, superdiagonal 1, subdiagonal -1."""
    return TridiagToeplitz(order=n, diag=1.0, sup=1.0, sub=-1.0)


def from_symbol(c_sub: float, c_diag: float, c_sup: float, n: int) -> TridiagToeplitz:
    """Tridiagonal Toeplitz matrix from its three generating coefficients,
    given in subdiagonal, diagonal, superdiagonal order."""
    return TridiagToeplitz(order=n, diag=c_diag, sup=c_sup, sub=c_sub)
