"""Exception hierarchy shared by all modules."""


class KgonError(Exception):
    """Base class for every error raised by this package."""


class InvalidParams(KgonError, ValueError):
    """Raised when (k, n) or another numeric argument is out of range."""


class MalformedRotation(KgonError, ValueError):
    """Raised when a rotation system is not a simple, symmetric, connected graph."""


class NotTwoConnected(KgonError, ValueError):
    """Raised when a face boundary walk repeats a vertex."""


class InternalInvariantViolation(KgonError, RuntimeError):
    """A construction produced an object violating its own invariants (a bug)."""


class BudgetExceeded(KgonError, RuntimeError):
    """The exhaustive search hit its node cap before finishing."""

    def __init__(self, message, nodes=None):
        super().__init__(message)
        self.nodes = nodes


class NoConvergence(KgonError, RuntimeError):
    """The circle packing solver ran out of sweeps.

    ``best`` holds the best-so-far :class:`~kgon_extremal.circlepack.Packing`.
    """

    def __init__(self, message, best=None):
        super().__init__(message)
        self.best = best


class DegenerateRadius(KgonError, ArithmeticError):
    """A radius fell below the configured floor during packing."""


class AdjacencyMismatch(KgonError, RuntimeError):
    """Tangencies reconstructed from a packing disagree with the graph."""

    def __init__(self, message, missing=(), extra=()):
        super().__init__(message)
        self.missing = tuple(missing)
        self.extra = tuple(extra)


class MalformedInput(KgonError, ValueError):
    """A JSON document does not match the expected schema."""
