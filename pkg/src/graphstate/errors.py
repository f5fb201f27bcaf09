"""Exception types shared by every graphstate module."""


class GraphStateError(Exception):
    """Base class for all domain errors raised by this package."""


class DimensionMismatch(GraphStateError):
    pass


class ConventionMismatch(GraphStateError):
    pass


class InvalidPermutation(GraphStateError):
    pass


class NoConvergence(GraphStateError):
    """Jacobi sweep cap exceeded before the off-diagonal target was met."""


class NotAState(GraphStateError):
    """A matrix failed the density-matrix invariants (hermiticity, trace, PSD)."""


class ZeroDegreeSum(GraphStateError):
    """The graph's degree sum vanishes, so sigma = Q/d is undefined."""


class NotPSD(GraphStateError):
    """Laplacian is not positive semidefinite; carries the offending eigenvalue."""

    def __init__(self, message: str, min_eigenvalue: float):
        super().__init__(f"{message} (min eigenvalue {min_eigenvalue:.6e})")
        self.min_eigenvalue = min_eigenvalue


class BadWeights(GraphStateError):
    pass


class HasLoops(GraphStateError):
    pass


class NoSuchEdge(GraphStateError):
    pass


class EdgeExists(GraphStateError):
    pass


class NoSuchLoop(GraphStateError):
    pass


class LoopExists(GraphStateError):
    pass


class ComplexNotSupported(GraphStateError):
    """Operation is defined for real-signed graphs only."""


class FileFormatError(GraphStateError):
    pass


class DegreeAdditivityWarning(UserWarning):
    """Complex edge union changed a modulus sum non-additively (phase mixing)."""
