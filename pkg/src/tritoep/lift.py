"""Lifting a multi-column system to one long banded system.

Solving T @ X = B column by column is the same as solving the
block-diagonal system (I_m kron T) vec(X) = vec(B). That block-diagonal
matrix is *almost* tridiagonal Toeplitz of order m*n: the only difference
is the 2(m-1) zero entries sitting on its inner bands at the block seams.
Filling each seam with the band values (sup above, sub below) yields a
genuine tridiagonal Toeplitz matrix of order m*n, described here by
``ExpandedSystem`` together with the list of seam corrections that relate
the two matrices. The solve path only ever touches the three band scalars
and the correction list; dense assembly exists for tests.
"""

from dataclasses import dataclass

import numpy as np

from .core import TridiagToeplitz, assemble_dense

# Dense block-diagonal assembly is a test oracle; cap it so an accidental
# production-size call fails fast instead of allocating gigabytes.
DENSE_ASSEMBLY_MAX_ORDER = 2048


@dataclass(frozen=True)
class JunctionCorrection:
    """One seam fill: the pair of entries added at block boundary j.

    Positions are 1-based (row, col) in the lifted m*n order matrix; the
    superdiagonal entry sits at (j*n, j*n+1) and the subdiagonal entry at
    (j*n+1, j*n).
    """

    j: int
    sup_pos: tuple[int, int]
    sup_val: float
    sub_pos: tuple[int, int]
    sub_val: float


@dataclass(frozen=True)
class ExpandedSystem:
    """The lifted matrix plus the seam corrections tying it to I_m kron T."""

    lifted: TridiagToeplitz
    corrections: tuple[JunctionCorrection, ...]
    n: int
    m: int


def junction_indices(n: int, m: int) -> tuple[tuple[int, int], ...]:
    """1-based positions of the 2(m-1) seam entries, superdiagonal first
    per seam: (jn, jn+1) then (jn+1, jn) for j = 1..m-1."""
    if n < 1 or m < 1:
        raise ValueError(f"need n >= 1 and m >= 1, got n={n}, m={m}")
    out = []
    for j in range(1, m):
        out.append((j * n, j * n + 1))
        out.append((j * n + 1, j * n))
    return tuple(out)


def expand(t: TridiagToeplitz, m: int) -> ExpandedSystem:
    """Build the order m*n lifted matrix (same bands as t) and its seam
    corrections."""
    if m < 1:
        raise ValueError(f"need m >= 1, got m={m}")
    n = t.order
    lifted = TridiagToeplitz(order=m * n, diag=t.diag, sup=t.sup, sub=t.sub)
    corrections = tuple(
        JunctionCorrection(
            j=j,
            sup_pos=(j * n, j * n + 1),
            sup_val=t.sup,
            sub_pos=(j * n + 1, j * n),
            sub_val=t.sub,
        )
        for j in range(1, m)
    )
    return ExpandedSystem(lifted=lifted, corrections=corrections, n=n, m=m)


def assemble_block_diag(t: TridiagToeplitz, m: int) -> np.ndarray:
    """Dense I_m kron T: m copies of T on the diagonal, zeros elsewhere
    (including the seam positions)."""
    if m < 1:
        raise ValueError(f"need m >= 1, got m={m}")
    n = t.order
    if m * n > DENSE_ASSEMBLY_MAX_ORDER:
        raise ValueError(
            f"dense assembly capped at order {DENSE_ASSEMBLY_MAX_ORDER}, got {m * n}")
    out = np.zeros((m * n, m * n), order="F")
    block = assemble_dense(t)
    for k in range(m):
        out[k * n:(k + 1) * n, k * n:(k + 1) * n] = block
    return out
