"""Exception types shared across the package.

Division by a zero field element raises the builtin ZeroDivisionError;
everything else domain-specific derives from AlgvecError so callers (and
the CLI) can catch one base class.
"""


class AlgvecError(Exception):
    """Base class for all algvec-specific errors."""


class IncompatibleInput(AlgvecError):
    """Mixed fields, mixed index kinds, or a value outside the domain."""


class IncompatibleIndexKind(IncompatibleInput):
    """Two index labels of different kinds were compared or combined."""


class ExactFieldPrune(AlgvecError):
    """prune_below was called on a vector over an exact field."""


class OutOfRangeIndex(AlgvecError):
    """A label falls outside 1..dim when densifying a vector."""


class DimensionMismatch(AlgvecError):
    """Entrywise operation on dense vectors of different lengths."""


class VectorSyntaxError(AlgvecError):
    """A text line does not conform to the vector grammar.

    Carries 1-based line/column positions when known.
    """

    def __init__(self, message, line=None, column=None):
        self.message = message
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where += f" at line {line}"
        if column is not None:
            where += f"{',' if where else ' at'} column {column}"
        super().__init__(message + where)


class InvalidScenario(AlgvecError):
    """A benchmark scenario with unsatisfiable parameters."""
