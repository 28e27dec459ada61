"""Exception types shared across the package."""


class ExceptionalCaseError(ValueError):
    """Raised when a query is provably unanswerable at (n, k) = (6, 2) or (6, 4).

    At these parameters every pair statistic the classifier relies on is
    constant across pair types, so the intersection dimension cannot be
    recovered from complementary-subset data.
    """


class ScaledUnitarityError(ValueError):
    """Raised when a matrix fails the M*M = c*I test required of transforms."""


class WitnessBudgetError(ValueError):
    """Raised when the ambient dimension cannot host the requested number of
    mutually orthogonal witness lines."""


class SampleFitError(ValueError):
    """Raised when line-image samples cannot be realized by any semilinear
    operator, or when required samples are missing."""


class ScaffoldError(ValueError):
    """Raised for malformed scaffolds (bad bijection, missing apartment, ...)."""
