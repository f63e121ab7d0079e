"""Exception types shared across the library."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class ValidityError(ValueError):
    """The requested evaluation is outside the regime where the formula is valid.

    The main case is the strongest-association closed forms, which are only
    probabilities for SIR thresholds >= 1.
    """


class NumericFailure(RuntimeError):
    """A numerical procedure (quadrature, series) failed to converge."""


class UsageError(ValueError):
    """Invalid combination of CLI / sweep inputs."""
