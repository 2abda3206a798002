"""Exception types raised by the dglomax package.

Every error message names the mathematical condition that was violated,
so callers (and the CLI) can surface actionable diagnostics.
"""


class DglomaxError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(DglomaxError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class ExistenceError(DglomaxError):
    """The requested quantity does not exist (e.g. a divergent moment)."""


class DivergenceError(DglomaxError):
    """The requested series or transform diverges on the given input."""


class TruncationError(DglomaxError):
    """A certified truncation bound could not be driven below tolerance."""


class SaturationError(DglomaxError):
    """A denominator underflowed to zero (e.g. survival mass exhausted)."""


class HorizonError(DglomaxError):
    """A comparison horizon fails to cover the required probability mass."""


class DegenerateDataError(DglomaxError, ValueError):
    """The data set cannot identify the model (e.g. a single distinct value)."""


class DataFormatError(DglomaxError, ValueError):
    """An input file is malformed; ``line`` carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        super().__init__(message)
        self.line = line
