"""Exception hierarchy.

Every domain failure derives from :class:`DomainError`; the CLI maps those to
exit code 2 and serializes them through :meth:`DomainError.to_json`.
"""

from __future__ import annotations


class DomainError(Exception):
    code = "DomainError"

    def __init__(self, message: str, **details):
        super().__init__(message)
        self.details = details

    def to_json(self) -> dict:
        return {"error": self.code, "message": str(self), "details": self.details}


class GroupMismatch(DomainError):
    code = "GroupMismatch"


class NotDivisible(DomainError):
    code = "NotDivisible"


class BlockViolation(DomainError):
    code = "BlockViolation"


class NotDominant(DomainError):
    code = "NotDominant"


class NotSinglyAtypical(DomainError):
    code = "NotSinglyAtypical"


class UnsupportedAtypical(DomainError):
    code = "UnsupportedAtypical"


class NegativeCoefficient(DomainError):
    """A reconstructed irreducible character produced a negative multiplicity."""

    code = "NegativeCoefficient"


class NonDominantLeadingTerm(DomainError):
    code = "NonDominantLeadingTerm"


class NonTermination(DomainError):
    code = "NonTermination"


class OddCosetUnsupported(DomainError):
    code = "OddCosetUnsupported"


class UnstableTruncation(DomainError):
    code = "UnstableTruncation"


class NoSolutionInBox(DomainError):
    code = "NoSolutionInBox"


class ParseError(DomainError):
    """Malformed group, weight or module literal (a usage error at the CLI)."""

    code = "ParseError"
