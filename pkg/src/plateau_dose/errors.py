"""Exception types shared across the package."""


class ConfigurationError(ValueError):
    """A grid, prior, or design configuration is invalid."""


class InferenceError(RuntimeError):
    """Posterior computation failed (e.g. all quadrature weights underflowed).

    Carries a ``diagnostics`` dict describing the failing model and data.
    """

    def __init__(self, message, diagnostics=None):
        super().__init__(message)
        self.diagnostics = dict(diagnostics or {})


class TrialStateError(RuntimeError):
    """A trial transition was requested from an incompatible phase."""
