"""Exception and warning types shared across the package."""


class CatcorrError(Exception):
    """Base class for all errors raised by catcorr."""


class DataError(CatcorrError, ValueError):
    """Invalid or unusable input data (empty columns, malformed records,
    unknown categories, no ties to correct, ...)."""


class NumericalError(CatcorrError, ArithmeticError):
    """A computation is undefined or numerically degenerate (singular
    system, zero-variance variable, degenerate table margin, ...)."""


class LowExpectedFrequencyWarning(UserWarning):
    """Expected frequencies below 5 make the chi-square approximation weak."""


class IllConditionedWarning(UserWarning):
    """The pivot-ratio heuristic suggests an ill-conditioned linear system."""
