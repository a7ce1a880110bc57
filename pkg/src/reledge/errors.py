"""Exception types shared across the package."""


class ReledgeError(Exception):
    """Base class for all package errors."""


class ParseError(ReledgeError):
    """Malformed DIMACS input. Carries the 1-based line number when known."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ContractViolation(ReledgeError):
    """A documented precondition was violated by the caller."""


class ResourceLimitExceeded(ReledgeError):
    """A search or enumeration ran past its configured budget.

    Deliberately distinct from a negative decision: callers must never
    confuse "gave up" with "no".
    """
