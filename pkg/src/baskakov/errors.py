"""Exception types shared across the package."""


class BaskakovError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(BaskakovError, ValueError):
    """An argument lies outside the domain of the requested function."""


class PoleError(DomainError):
    """Evaluation requested at a pole of a rational function."""


class NonConvergenceError(BaskakovError, ArithmeticError):
    """An iterative or series method exhausted its budget."""


class CostCapError(BaskakovError, ValueError):
    """A quadrature request exceeds the evaluation budget."""
