"""Exception types shared across the package."""

__all__ = ["ContractViolation", "VerificationError"]


class ContractViolation(RuntimeError):
    """An input violated a documented precondition of an operation."""


class VerificationError(RuntimeError):
    """A closed-form claim failed its numerical cross-check."""
