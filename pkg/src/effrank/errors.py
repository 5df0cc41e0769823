"""Exception hierarchy shared across the package."""

from __future__ import annotations


class EffrankError(Exception):
    """Base class for all errors raised by effrank."""


class DatasetError(EffrankError, ValueError):
    """A measurement file failed to parse or validate."""


class MalformedHeader(DatasetError):
    pass


class NonNumericValue(DatasetError):
    def __init__(self, row: int, column: str, raw: str):
        super().__init__(f"row {row}, column {column!r}: not a finite number: {raw!r}")
        self.row = row
        self.column = column
        self.raw = raw

    def __reduce__(self):
        return (type(self), (self.row, self.column, self.raw))


class NonPositiveInput(DatasetError):
    pass


class UnevenRepeats(DatasetError):
    pass


class TooFewSetups(DatasetError):
    pass


class DimensionMismatch(EffrankError, ValueError):
    pass


class NumericalFailure(EffrankError, ArithmeticError):
    """The simplex engine gave up (cycling guard or overflow); rescale the instance."""


class SolverFailure(EffrankError):
    """An efficiency LP did not reach an optimum.

    Carries the setup name, the bootstrap replicate (if any) and the offending
    linear program so callers can dump it for a bug report.
    """

    def __init__(self, message: str, setup: str | None = None,
                 replicate: int | None = None, lp=None):
        where = []
        if setup is not None:
            where.append(f"setup {setup!r}")
        if replicate is not None:
            where.append(f"replicate {replicate}")
        full = f"{message} ({', '.join(where)})" if where else message
        super().__init__(full)
        self.message = message
        self.setup = setup
        self.replicate = replicate
        self.lp = lp

    def __reduce__(self):
        return (type(self), (self.message, self.setup, self.replicate, self.lp))


class EmptySample(EffrankError, ValueError):
    pass


class UnequalSampleCounts(EffrankError, ValueError):
    pass


class InconsistentSetups(EffrankError, ValueError):
    pass
