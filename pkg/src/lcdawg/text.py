"""Input text wrapper: raw bytes plus the appended sentinel.

The alphabet is raw bytes 1..255; byte 0 is reserved as the terminator and may
not occur in user input. All reported positions are 1-based into the original
text (the sentinel is never part of a reported occurrence or extraction).
"""

from __future__ import annotations

from .errors import InputValidationError

SENTINEL = 0


class Text:
    """A validated input text. `padded` is `raw` with the sentinel appended."""

    __slots__ = ("raw", "padded", "n")

    def __init__(self, raw: bytes | bytearray | memoryview):
        raw = bytes(raw)
        if SENTINEL in raw:
            raise InputValidationError(
                "input contains reserved byte 0x00 (used internally as terminator)"
            )
        self.raw = raw
        self.padded = raw + bytes([SENTINEL])
        self.n = len(raw)

    @property
    def sigma(self) -> int:
        """Number of distinct symbols in the raw text."""
        return len(set(self.raw))

    def reversed(self) -> "Text":
        return Text(self.raw[::-1])

    def __len__(self) -> int:
        return self.n

    def __eq__(self, other) -> bool:
        return isinstance(other, Text) and self.raw == other.raw

    def __hash__(self) -> int:
        return hash(self.raw)

    def __repr__(self) -> str:
        head = self.raw[:16]
        tail = b"..." if self.n > 16 else b""
        return f"Text({head!r}{tail.decode()}, n={self.n})"


def check_pattern(pattern: bytes) -> bytes:
    """Validate a query pattern: nonempty, no sentinel byte."""
    pattern = bytes(pattern)
    if not pattern:
        raise UsageErrorFromPattern()
    if SENTINEL in pattern:
        raise InputValidationError("pattern contains reserved byte 0x00")
    return pattern


def UsageErrorFromPattern():
    from .errors import UsageError

    return UsageError("pattern must be nonempty")
