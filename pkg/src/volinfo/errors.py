"""Exception types shared across the package."""


class VolinfoError(Exception):
    """Base class for all package errors."""


class BranchDegenerate(VolinfoError):
    """The zeta coefficient of the variance transform is at (or too close to) its pole."""


class DegreeUnsupported(VolinfoError):
    """Requested Stehfest degree outside the double-precision-safe range."""


class AbscissaInvalid(VolinfoError):
    """Laplace inversion requested at a non-positive abscissa."""


class MassDefect(VolinfoError):
    """A reconstructed density failed its mass or clipped-mass budget."""


class Unstable(VolinfoError):
    """The finite-difference solver lost too much mass or positivity."""


class TooFewSamples(VolinfoError):
    """Not enough samples for a meaningful histogram estimate."""


class DegenerateRatio(VolinfoError):
    """The flow ratio denominator is numerically zero."""


class NotPSD(VolinfoError):
    """A kernel Gram matrix could not be factorized even after jitter escalation."""


class NoConvergence(VolinfoError):
    """Newton iteration for the posterior mode did not converge."""

    def __init__(self, message, grad_norm=None):
        super().__init__(message)
        self.grad_norm = grad_norm


class AllRestartsFailed(VolinfoError):
    """Every hyperparameter-optimization restart failed."""


class ParseError(VolinfoError):
    """Malformed input data file."""


class EmptySeries(VolinfoError):
    """A price or return series with no usable rows."""
