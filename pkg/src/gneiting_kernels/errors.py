"""Exception types shared across the package."""


class DomainError(ValueError):
    """Evaluation requested outside a function's domain (pole, negative distance, ...)."""


class ParameterError(ValueError):
    """Invalid construction parameters, preconditions, or configuration."""


class SamplingError(RuntimeError):
    """Rejection sampling exhausted its budget without producing a valid configuration."""


class ConvergenceError(RuntimeError):
    """An iterative numerical routine failed to reach its stopping criterion."""
