"""Multi-column solve via the lifted system and a low-rank correction.

The lifted banded matrix equals the block-diagonal system plus 2(m-1)
rank-one seam terms, so the block-diagonal inverse can be recovered from
the lifted one with the Sherman-Morrison-Woodbury identity. Writing the
seam terms as u_k v_k^T, where each u_k is a negated band value at a
single position and each v_k is the solution of a transposed unit-vector
system, the correction reads

    (I + sum_k u_k v_k^T)^(-1) = I - U M^(-1) V^T,

with M = I + V^T U the dense capacitance matrix of order N = 2(m-1).

The driver ``solve_mrhs`` runs the whole pipeline: 2(m-1) transposed
dual solves against the lifted matrix, capacitance assembly, one
application of the corrected inverse to the stacked right-hand side, and
a final banded solve. No stabilization (scaling, refinement) is applied:
when the lifted matrix or the capacitance matrix is ill-conditioned the
error is allowed to surface, and only an exactly singular capacitance
matrix raises ``CapacitanceSingular``.
"""

from dataclasses import dataclass

import numpy as np

from .core import TridiagToeplitz, unvec, vec
from .errors import CapacitanceSingular, SingularMatrix
from .lift import ExpandedSystem, expand
from .solvers import block_lu_solve, dense_gepp_solve, solve_transpose


@dataclass(frozen=True)
class CapacitanceSystem:
    """Factors of the low-rank correction.

    u_positions/u_values describe the N sparse correction columns (one
    nonzero each, 0-based row index); duals holds the N dense dual
    solutions as columns of an (m*n, N) array; matrix is the N x N
    capacitance matrix I + V^T U.
    """

    n: int
    m: int
    u_positions: np.ndarray
    u_values: np.ndarray
    duals: np.ndarray
    matrix: np.ndarray


@dataclass(frozen=True)
class SolveDiagnostics:
    """Bookkeeping reported alongside a multi-column solve."""

    dual_solves: int
    forward_solves: int
    capacitance_condition: float


@dataclass(frozen=True)
class SolveOutcome:
    """Solution matrix, the corrected stacked right-hand side that produced
    it, and solve diagnostics."""

    X: np.ndarray
    corrected_rhs: np.ndarray
    diagnostics: SolveDiagnostics


def _seam_unit_indices(n: int, m: int) -> np.ndarray:
    """0-based indices (jn, jn-1 interleaved) of the dual unit vectors:
    for seam j the pair is e_{jn+1} then e_{jn} in 1-based terms."""
    idx = np.empty(2 * (m - 1), dtype=np.intp)
    for j in range(1, m):
        idx[2 * (j - 1)] = j * n          # e_{jn+1}
        idx[2 * (j - 1) + 1] = j * n - 1  # e_{jn}
    return idx


def dual_solves(sys: ExpandedSystem) -> np.ndarray:
    """Solve the 2(m-1) transposed unit-vector systems against the lifted
    matrix; column pairs are (y_{jn+1}, y_{jn}) for each seam j."""
    mn = sys.lifted.order
    N = 2 * (sys.m - 1)
    if N == 0:
        return np.zeros((mn, 0), order="F")
    E = np.zeros((mn, N), order="F")
    E[_seam_unit_indices(sys.n, sys.m), np.arange(N)] = 1.0
    return solve_transpose(sys.lifted, E)


def build_capacitance(sys: ExpandedSystem, duals: np.ndarray) -> CapacitanceSystem:
    """Assemble the capacitance matrix I + V^T U from the dual solutions.

    Each correction column has a single nonzero, so every entry of V^T U
    is one dual value times one band value; no long dot products occur.
    """
    n, m = sys.n, sys.m
    N = 2 * (m - 1)
    if duals.shape != (m * n, N):
        raise ValueError(f"dual block has shape {duals.shape}, expected {(m * n, N)}")
    u_pos = np.empty(N, dtype=np.intp)
    u_val = np.empty(N)
    for j in range(1, m):
        u_pos[2 * (j - 1)] = j * n - 1      # 1-based position jn
        u_val[2 * (j - 1)] = -sys.lifted.sup
        u_pos[2 * (j - 1) + 1] = j * n      # 1-based position jn+1
        u_val[2 * (j - 1) + 1] = -sys.lifted.sub
    M = np.eye(N) + duals[u_pos, :].T * u_val[np.newaxis, :]
    return CapacitanceSystem(n=n, m=m, u_positions=u_pos, u_values=u_val,
                             duals=duals, matrix=M)


def apply_woodbury_inverse(cap: CapacitanceSystem, b: np.ndarray) -> np.ndarray:
    """Apply the corrected inverse: b - U (M^(-1) (V^T b)).

    The capacitance system is solved by dense elimination; raises
    CapacitanceSingular when M has no usable pivot.
    """
    b = np.asarray(b, dtype=np.float64)
    mn = cap.n * cap.m
    if b.ndim != 1 or b.size != mn:
        raise ValueError(f"stacked right-hand side must have length {mn}")
    if cap.u_positions.size == 0:
        return b.copy()
    vtb = cap.duals.T @ b
    try:
        w = dense_gepp_solve(cap.matrix, vtb)
    except SingularMatrix as exc:
        raise CapacitanceSingular(str(exc)) from exc
    phi = b.copy()
    # u columns may share a position when n == 1, so accumulate
    np.add.at(phi, cap.u_positions, -(cap.u_values * w))
    return phi


def _capacitance_condition(M: np.ndarray) -> float:
    if M.shape[0] == 0:
        return 1.0
    try:
        return float(np.linalg.cond(M, 1))
    except np.linalg.LinAlgError:
        return float("inf")


def solve_mrhs(t: TridiagToeplitz, B) -> SolveOutcome:
    """Solve T @ X = B for all columns of B at once via the lifted system.

    Pipeline: lift, dual solves, capacitance assembly, corrected
    right-hand side, one banded solve of order m*n, unstack. For m == 1
    the correction is empty and the result is identical to a single
    ``block_lu_solve``.
    """
    B = np.asarray(B, dtype=np.float64)
    if B.ndim == 1:
        B = B.reshape((-1, 1), order="F")
    if B.ndim != 2:
        raise ValueError(f"right-hand side must be 1-D or 2-D, got ndim={B.ndim}")
    if B.shape[0] != t.order:
        raise ValueError(f"right-hand side has {B.shape[0]} rows, matrix order is {t.order}")
    if B.shape[1] < 1:
        raise ValueError("right-hand side must have at least one column")
    m = B.shape[1]
    sys = expand(t, m)
    Y = dual_solves(sys)
    cap = build_capacitance(sys, Y)
    phi = apply_woodbury_inverse(cap, vec(B))
    x = block_lu_solve(sys.lifted, phi)
    diagnostics = SolveDiagnostics(
        dual_solves=2 * (m - 1),
        forward_solves=1,
        capacitance_condition=_capacitance_condition(cap.matrix),
    )
    return SolveOutcome(X=unvec(x, t.order, m), corrected_rhs=phi,
                        diagnostics=diagnostics)
