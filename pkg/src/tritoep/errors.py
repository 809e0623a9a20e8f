"""Exception types raised when a factorization or solve breaks down."""


class SolverBreakdown(Exception):
    """Base class for structural solver failures.

    These signal that the requested method cannot produce a solution for
    this particular matrix (zero pivots, singular pivot blocks, singular
    capacitance matrix). Usage errors such as shape mismatches raise
    ValueError instead.
    """


class ZeroPivot(SolverBreakdown):
    """Scalar elimination hit a zero pivot; the 2x2-block path may still work."""

    def __init__(self, index: int):
        self.index = index  # 1-based row of the offending pivot
        super().__init__(f"zero pivot at row {index}")


class SingularPivotBlock(SolverBreakdown):
    """A 2x2 pivot block (or the trailing 1x1 block) is singular."""

    def __init__(self, block: int):
        self.block = block  # 1-based block index
        super().__init__(f"singular pivot block {block}")


class SingularMatrix(SolverBreakdown):
    """Dense elimination found no usable pivot in some column."""


class CapacitanceSingular(SolverBreakdown):
    """The capacitance matrix is singular; the low-rank correction breaks down."""


class DegenerateRHS(ValueError):
    """The right-hand side has zero norm, so a relative residual is undefined."""
