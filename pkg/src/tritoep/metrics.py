"""Reference column-wise solver, residual metric, and timing protocol."""

import time
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .core import TridiagToeplitz, tt_apply
from .errors import DegenerateRHS
from .solvers import block_lu_solve
from .woodbury import SolveDiagnostics

METHODS = ("alg1", "columnwise", "dense_oracle")


@dataclass(frozen=True)
class SolveReport:
    """One solve's accuracy and timing summary."""

    method: str
    n: int
    m: int
    relative_residual: float
    time_mean_s: float
    reps: int
    diagnostics: Optional[SolveDiagnostics] = None

    def __post_init__(self):
        if self.method not in METHODS:
            raise ValueError(f"method must be one of {METHODS}, got {self.method!r}")
        if not self.relative_residual >= 0.0:
            raise ValueError("relative_residual must be >= 0")
        if self.time_mean_s < 0.0:
            raise ValueError("time_mean_s must be >= 0")
        if self.reps < 1:
            raise ValueError("reps must be >= 1")


def columnwise_solve(t: TridiagToeplitz, B) -> np.ndarray:
    """Baseline: m independent order-n banded solves, one per column of B."""
    return block_lu_solve(t, B)


def relative_residual(t: TridiagToeplitz, X, B) -> float:
    """Frobenius-norm relative residual ||B - T X|| / ||B||."""
    B = np.asarray(B, dtype=np.float64)
    norm_b = float(np.linalg.norm(B))
    if norm_b == 0.0:
        raise DegenerateRHS("right-hand side has zero norm")
    return float(np.linalg.norm(B - tt_apply(t, X))) / norm_b


def timed_run(task: Callable[[], object], reps: int = 10) -> tuple[float, list[float]]:
    """Run task reps times on identical inputs; return the mean wall time in
    seconds and the raw per-repetition samples.

    Repetitions run strictly sequentially on a monotonic clock, with no
    warm-up discarded.
    """
    if reps < 1:
        raise ValueError(f"reps must be >= 1, got {reps}")
    samples = []
    for _ in range(reps):
        start = time.perf_counter()
        task()
        samples.append(time.perf_counter() - start)
    return sum(samples) / reps, samples
