"""
Exception hierarchy for the quasi-invariants toolkit.

All errors raised on purpose by the package derive from ``QinvError`` so the
CLI and the HTTP layer can translate them into exit status 2 / HTTP 400.
Where a builtin exception has the same meaning the class inherits it too,
so callers catching ``ValueError`` or ``ZeroDivisionError`` keep working.
"""


class QinvError(Exception):
    """Base class for every error raised deliberately by qinv."""


class DivisionByZeroError(QinvError, ZeroDivisionError):
    """Inverse of zero requested in a field, or a zero denominator."""


class DomainMismatchError(QinvError, TypeError):
    """Operands live over different coefficient rings."""


class CoefficientError(QinvError, ValueError):
    """A coefficient cannot be represented in the requested ring."""


class PolynomialParseError(QinvError, ValueError):
    """
    Polynomial text does not match the grammar.

    Attributes:
        position: Zero-based column of the offending character.
    """

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} at position {position}")
        self.position = position


class QuasiOrderError(QinvError, ValueError):
    """Invalid quasi-invariance order for the characteristic."""


class UndefinedOrderError(QinvError, ValueError):
    """The quasi-invariance order of the zero polynomial is undefined."""


class ContractViolationError(QinvError, RuntimeError):
    """An internal invariant failed; signals a bug rather than bad input."""


class UnsupportedOperationError(QinvError, ValueError):
    """The request makes no sense in this characteristic."""


class BudgetExceededError(QinvError):
    """The request would exceed a configured computation budget."""


class UnclassifiedModuleError(QinvError):
    """
    The cyclic module fingerprint is not in the classification table.

    Attributes:
        fingerprint: The computed fingerprint.
    """

    def __init__(self, fingerprint: object) -> None:
        super().__init__(f"no label for module fingerprint {fingerprint}")
        self.fingerprint = fingerprint
