"""Shared exception hierarchy.

ValidationError marks bad input (CLI exit code 2); MathViolation marks a
mathematical claim that failed verification on otherwise valid input
(CLI exit code 1).
"""


class FeqlabError(Exception):
    """Base class for all workbench errors."""


class ValidationError(FeqlabError):
    """Input failed structural validation."""


class MathViolation(FeqlabError):
    """A verified mathematical property failed to hold."""
