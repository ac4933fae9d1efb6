"""
Exception hierarchy for monomial ideal computations.

Every error raised by the library derives from MonomialIdealError so callers
(and the CLI) can map whole families of failures to one exit status.
"""

from __future__ import annotations


class MonomialIdealError(Exception):
    """Base class for all library errors."""


class InputError(MonomialIdealError):
    """Malformed user input (ideal files, JSON documents, flags)."""


class ParseError(InputError):
    """Text or JSON that does not follow the ideal exchange format."""

    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ConfigurationError(InputError):
    """Invalid budget configuration."""


class UnitIdeal(MonomialIdealError):
    """The monomial 1 was offered as a generator."""


class ZeroIdeal(MonomialIdealError):
    """The operation is undefined on the zero ideal."""


class BudgetExceeded(MonomialIdealError):
    """An exhaustive search would exceed its configured budget."""

    def __init__(self, budget_name: str, limit: int, required: int) -> None:
        self.budget_name = budget_name
        self.limit = limit
        self.required = required
        super().__init__(
            f"{budget_name} budget exceeded: needs {required}, limit is {limit}"
        )


class PreconditionViolated(MonomialIdealError):
    """Hypotheses of a closed-form transform or transfer check do not hold."""

    def __init__(self, condition: str, message: str = "") -> None:
        self.condition = condition
        super().__init__(f"precondition ({condition}) failed" + (f": {message}" if message else ""))


class OracleMismatch(MonomialIdealError):
    """Two independent computations of the same object disagree."""


class NotEmbedded(MonomialIdealError):
    """The prime handed to the embedded decomposition is minimal."""


class NoDecomposition(MonomialIdealError):
    """An embedded prime has no minimal-prime plus star-neighbor labeling."""


class VerificationFailed(MonomialIdealError):
    """A comparison between a closed formula and an oracle failed."""
