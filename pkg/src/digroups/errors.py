"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class DigroupError(Exception):
    """Base class for every error raised by this package."""


class StructureError(DigroupError, ValueError):
    """Malformed input: size mismatch, out-of-range entry, empty carrier."""


class InvalidDigroupError(DigroupError):
    """Well-formed tables that do not satisfy the digroup axioms."""

    def __init__(self, report, message: str | None = None):
        self.report = report
        if message is None:
            first = report.violations[0] if report.violations else None
            message = f"not a digroup ({len(report.violations)} violations; first: {first})"
        super().__init__(message)


class NotABarUnitError(DigroupError, ValueError):
    pass


class GuardError(DigroupError):
    """Requested size exceeds a configured tractability guard."""


class NotAHomomorphismError(DigroupError):
    pass


class InvariantViolation(DigroupError, AssertionError):
    """A structural claim failed on a concrete input.

    Raised instead of silently continuing, so that a counterexample to one of
    the theorems being exercised is always surfaced with its witness.
    """


class VerificationError(DigroupError):
    def __init__(self, check: str, witness, message: str | None = None):
        self.check = check
        self.witness = witness
        super().__init__(message or f"{check} failed at {witness!r}")


class ParseError(StructureError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
