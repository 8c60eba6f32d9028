"""Exceptions raised by fsdaudit."""


class FsdAuditError(Exception):
    """Base class for all fsdaudit errors."""


class InputError(FsdAuditError):
    """A fault in user supplied data or configuration."""


class ParseError(InputError):
    """A row or value of an input file could not be parsed.

    Args:
        message: What went wrong.
        row: 1-based line number in the source, counting the header as line 1.
        source: Name of the file or stream being parsed.
    """

    def __init__(self, message: str, row: int | None = None, source: str | None = None) -> None:
        self.message = message
        self.row = row
        self.source = source
        super().__init__(str(self))

    def __str__(self) -> str:
        """Render as ``source:row: message``."""
        location = ":".join(str(x) for x in (self.source, self.row) if x is not None)
        return f"{location}: {self.message}" if location else self.message


class SchemaError(InputError):
    """The panel schema does not match the input header."""


class SectorMismatchError(InputError):
    """Return series from different sectors were pooled together."""


class ScreeningError(InputError):
    """A repetition flag does not match the panel it is applied to."""


class AnalysisError(FsdAuditError):
    """A statistical precondition does not hold."""


class EmptyDistributionError(AnalysisError):
    """No value in the sample has a first significant digit."""


class EmptySampleError(AnalysisError):
    """The sample holds no values."""


class NonFiniteValueError(AnalysisError):
    """A value is NaN or infinite."""


class ReportError(FsdAuditError):
    """A report cannot be rendered from an incomplete bundle."""
