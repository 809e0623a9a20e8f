"""Direct O(n) solvers for tridiagonal Toeplitz systems, a lifted
multi-column solve with a low-rank seam correction, and benchmarking
helpers around them."""

from .core import (
    TridiagToeplitz,
    assemble_dense,
    from_symbol,
    grcar,
    tt_apply,
    unvec,
    vec,
)
from .errors import (
    CapacitanceSingular,
    DegenerateRHS,
    SingularMatrix,
    SingularPivotBlock,
    SolverBreakdown,
    ZeroPivot,
)
from .lift import (
    ExpandedSystem,
    JunctionCorrection,
    assemble_block_diag,
    expand,
    junction_indices,
)
from .metrics import SolveReport, columnwise_solve, relative_residual, timed_run
from .solvers import (
    PivotFactorization,
    block_lu_solve,
    dense_gepp_solve,
    factorize,
    solve_transpose,
    thomas_solve,
)
from .woodbury import (
    CapacitanceSystem,
    SolveDiagnostics,
    SolveOutcome,
    apply_woodbury_inverse,
    build_capacitance,
    dual_solves,
    solve_mrhs,
)

__version__ = "0.1.0"

__all__ = [
    "TridiagToeplitz",
    "assemble_dense",
    "tt_apply",
    "vec",
    "unvec",
    "grcar",
    "from_symbol",
    "PivotFactorization",
    "factorize",
    "thomas_solve",
    "block_lu_solve",
    "solve_transpose",
    "dense_gepp_solve",
    "JunctionCorrection",
    "ExpandedSystem",
    "junction_indices",
    "expand",
    "assemble_block_diag",
    "CapacitanceSystem",
    "SolveDiagnostics",
    "SolveOutcome",
    "dual_solves",
    "build_capacitance",
    "apply_woodbury_inverse",
    "solve_mrhs",
    "SolveReport",
    "columnwise_solve",
    "relative_residual",
    "timed_run",
    "SolverBreakdown",
    "ZeroPivot",
    "SingularPivotBlock",
    "SingularMatrix",
    "CapacitanceSingular",
    "DegenerateRHS",
]
