"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class BenfordError(Exception):
    """Base class for every error raised by citebenford."""


class DomainError(BenfordError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class ContractError(BenfordError, ValueError):
    """Two arguments are individually valid but inconsistent with each other."""


class ValidationError(BenfordError, ValueError):
    """A snapshot, series or file failed validation.

    ``errors`` holds every violation found, not only the first one.
    """

    def __init__(self, errors: list[str], subject: str = ""):
        self.errors = list(errors)
        self.subject = subject
        head = f"{subject}: " if subject else ""
        super().__init__(head + "; ".join(self.errors))


class FormatError(BenfordError, ValueError):
    """An input file could not be parsed. The message names the line or field."""
