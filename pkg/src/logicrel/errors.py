"""Exception hierarchy shared by every module."""

from __future__ import annotations


class LogicError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(LogicError):
    """Malformed formula text.

    Carries the UTF-8 byte offset of the offending token and the set of
    token spellings that would have been accepted there.
    """

    def __init__(self, message: str, offset: int, expected: frozenset[str] = frozenset()):
        self.offset = offset
        self.expected = expected
        if expected:
            message = f"{message} at offset {offset}, expected one of {', '.join(sorted(expected))}"
        else:
            message = f"{message} at offset {offset}"
        super().__init__(message)


class LimitError(LogicError):
    """A configured resource limit (letter count, lattice size) was exceeded."""


class UniverseMismatch(LogicError):
    """A formula mentions a letter outside the universe it is evaluated over."""
