"""Exception types shared across the toolkit.

The classes double as the CLI's exit-code taxonomy: ValidationError maps to
exit code 1, the builtin OSError to exit code 2, and DataError to exit code 3.
"""


class EafkitError(Exception):
    """Base class for all toolkit-specific errors."""


class ValidationError(EafkitError, ValueError):
    """Arguments, configuration, or call contracts violated by the caller."""


class DataError(EafkitError, ValueError):
    """Input values the computations cannot accept (NaN, non-finite, ...)."""


class FormatError(DataError):
    """Interchange file whose structure does not match its schema."""


class VersionError(FormatError):
    """Interchange file declaring a schema version this build cannot read."""
