"""JIT-compiled inner loops for the banded eliminations.

Everything here works on plain float64 scalars and arrays so the kernels
stay allocation-free; validation, copying and error raising live in
``solvers``. Right-hand sides are (n, k) Fortran-ordered and are
overwritten with the solution column by column, which keeps each column's
operation sequence identical whether it is solved alone or in a batch.
"""

import numpy as np
from numba import njit


@njit(cache=True)
def thomas_pivots(diag, sub, sup, s, thr):
    """Fill s with the scalar pivot sequence s[0]=diag, s[i]=diag-sub*sup/s[i-1].

    Returns 0 on success, or the 1-based index of the first pivot whose
    magnitude is <= thr.
    """
    n = s.shape[0]
    s[0] = diag
    if abs(s[0]) <= thr:
        return 1
    for i in range(1, n):
        s[i] = diag - sub * sup / s[i - 1]
        if abs(s[i]) <= thr:
            return i + 1
    return 0


@njit(cache=True)
def thomas_sweeps(sub, sup, s, r):
    """Forward eliminate and back substitute r (n, k) in place using pivots s."""
    n, k = r.shape
    for j in range(k):
        for i in range(1, n):
            r[i, j] -= (sub / s[i - 1]) * r[i - 1, j]
        r[n - 1, j] /= s[n - 1]
        for i in range(n - 2, -1, -1):
            r[i, j] = (r[i, j] - sup * r[i + 1, j]) / s[i]


@njit(cache=True)
def block_pivots(diag, sub, sup, p, det, thr):
    """Fill the 2x2 block pivot data for blocks 1..K.

    Every block pivot has the form [[p[k], sup], [sub, diag]]; only the
    (1,1) entry changes during elimination, so p and det capture the whole
    factorization. Returns 0 on success, or the 1-based index of the first
    block whose determinant magnitude is <= thr.
    """
    K = p.shape[0]
    p[0] = diag
    det[0] = p[0] * diag - sup * sub
    if abs(det[0]) <= thr:
        return 1
    for k in range(1, K):
        p[k] = diag - sup * sub * p[k - 1] / det[k - 1]
        det[k] = p[k] * diag - sup * sub
        if abs(det[k]) <= thr:
            return k + 1
    return 0


@njit(cache=True)
def block_sweeps(diag, sub, sup, p, det, plast, r):
    """Solve with the 2x2 block factorization, overwriting r (n, k) in place.

    p and det come from block_pivots; plast is the trailing 1x1 pivot and
    is only read when n is odd.
    """
    n, kc = r.shape
    K = p.shape[0]
    odd = n != 2 * K
    for j in range(kc):
        # forward elimination: block k's first row couples to block k-1
        for k in range(1, K):
            l1 = -sub * sub / det[k - 1]
            l2 = sub * p[k - 1] / det[k - 1]
            i = 2 * k
            r[i, j] -= l1 * r[i - 2, j] + l2 * r[i - 1, j]
        if odd:
            l1 = -sub * sub / det[K - 1]
            l2 = sub * p[K - 1] / det[K - 1]
            r[n - 1, j] -= l1 * r[n - 3, j] + l2 * r[n - 2, j]
            r[n - 1, j] /= plast
        # back substitution: invert [[p, sup], [sub, diag]] by its adjugate
        for k in range(K - 1, -1, -1):
            i = 2 * k
            t1 = r[i, j]
            if i + 2 < n:
                t2 = r[i + 1, j] - sup * r[i + 2, j]
            else:
                t2 = r[i + 1, j]
            r[i, j] = (diag * t1 - sup * t2) / det[k]
            r[i + 1, j] = (-sub * t1 + p[k] * t2) / det[k]
