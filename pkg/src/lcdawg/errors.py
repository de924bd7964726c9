"""Exception types shared across the package."""


class LcdawgError(Exception):
    """Base class for all errors raised by this package."""


class UsageError(LcdawgError):
    """A call or command was malformed (e.g. empty pattern)."""


class InputValidationError(LcdawgError):
    """Input bytes violate a precondition (e.g. sentinel byte in text or pattern)."""


class BoundsError(LcdawgError):
    """A position or length argument is out of range."""


class InternalConsistencyError(LcdawgError):
    """A structural invariant failed during construction; indicates a bug, not bad input."""


class IndexFormatError(LcdawgError):
    """Base class for errors while reading a serialized index."""


class BadMagicError(IndexFormatError):
    """The file does not start with the expected magic bytes."""


class UnsupportedVersionError(IndexFormatError):
    """The file declares a format version this build cannot read."""


class TruncatedIndexError(IndexFormatError):
    """The file ended before all declared tables were read."""


class CorruptIndexError(IndexFormatError):
    """A table entry is out of range or a structural invariant does not hold."""
