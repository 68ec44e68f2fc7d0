"""Exception hierarchy shared by the numerical modules and the CLI."""


class QuarticError(Exception):
    """Base class for every error raised by this package."""


class DomainError(QuarticError, ValueError):
    """An argument lies outside the domain an operation is defined on."""


class ConvergenceError(QuarticError, RuntimeError):
    """An iterative method ran out of iterations before reaching tolerance."""

    def __init__(self, message, off_norm=None):
        super().__init__(message)
        self.off_norm = off_norm
