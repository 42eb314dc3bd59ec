"""
Exception hierarchy for the toolkit.

Every error kind a caller can act on has its own class; ``code`` is the
kebab-case name used in JSON error payloads and CLI messages.
Verification failures are reported as data and never raised.
"""


class ToolkitError(Exception):
    """Base class for all toolkit errors."""

    code = "toolkit-error"


class InvalidParameterError(ToolkitError, ValueError):
    code = "invalid-parameter"


class UnsupportedGenusError(InvalidParameterError):
    code = "unsupported-genus"


class DimensionError(ToolkitError, ValueError):
    code = "dimension-error"


class NoClassError(ToolkitError, KeyError):
    code = "no-class-error"


class MissingAssignmentError(ToolkitError, KeyError):
    code = "missing-assignment"


class InvalidAssignmentError(ToolkitError, ValueError):
    code = "invalid-assignment"


class NonIntegralSolutionError(ToolkitError, ArithmeticError):
    code = "non-integral-solution"


class AlphabetMismatchError(ToolkitError, ValueError):
    code = "alphabet-mismatch"


class ParseError(ToolkitError, ValueError):
    code = "parse-error"


class ConstantsCorruptedError(ToolkitError, AssertionError):
    code = "constants-corrupted"


class InconsistentTableError(ToolkitError, AssertionError):
    code = "inconsistent-table"
