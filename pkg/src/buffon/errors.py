"""Exception types shared across the package."""


class UnsupportedConfigurationError(ValueError):
    """Raised when a requested configuration is outside the model's scope.

    The triangle estimator is derived only for triangle side equal to the
    grid spacing; other ratios are rejected rather than silently mis-scaled.
    """


class DegenerateSampleError(RuntimeError):
    """Raised when a sample contains no crossings/hits, so the reciprocal
    estimate would divide by zero."""
