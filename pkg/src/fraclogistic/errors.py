"""Exception types shared across the package."""


class ConvergenceError(ValueError):
    """The geometric-series ratio left the convergence region |q| < 1.

    The offending ratio is kept on the ``ratio`` attribute.
    """

    def __init__(self, message: str, ratio: float):
        super().__init__(message)
        self.ratio = ratio


class SolverError(RuntimeError):
    """A time stepper failed to produce a usable value.

    ``step`` holds the index of the grid node at which the corrector
    diverged or produced a non-finite value.
    """

    def __init__(self, message: str, step: int):
        super().__init__(message)
        self.step = step


class SingularParameterError(ValueError):
    """A parameter combination makes a closed-form expression undefined."""
