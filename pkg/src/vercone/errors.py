"""Exception hierarchy shared by every module.

The CLI maps these onto exit codes, so the split between a usage problem,
a resource problem and a mathematical mismatch matters.
"""


class VeroneseError(Exception):
    """Base class for all errors raised by this package."""


class WeightError(VeroneseError, ValueError):
    """A vector is not a valid (dominant) weight or partition."""


class WindowError(VeroneseError, ValueError):
    """A query falls outside the window in which a character is complete."""


class NotACharacterError(VeroneseError, ValueError):
    """A polynomial is not the character of a genuine representation."""

    def __init__(self, message, weight=None):
        super().__init__(message)
        self.weight = weight


class ResourceCapExceeded(VeroneseError):
    """An enumeration would exceed its configured size cap."""


class VerificationFailure(VeroneseError):
    """Two routes that must agree did not, or a proven sign condition failed.

    ``witness`` carries the first offending weight (or other datum).
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness
