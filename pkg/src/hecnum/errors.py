"""Exception hierarchy.

Every library error derives from :class:`HecnumError` and carries the CLI
exit code of its category: 1 for domain errors (bad parameters, impossible
requests), 2 for resource limits (enumeration caps, oracle budgets), 3 for
a formula-vs-oracle verification mismatch.
"""


class HecnumError(Exception):
    exit_code = 1


class DomainError(HecnumError):
    """Invalid mathematical input (wrong prime, reducible modulus, ...)."""

    exit_code = 1


class ResourceError(HecnumError):
    """Request exceeds a configured enumeration cap or budget."""

    exit_code = 2


class NotPrime(DomainError):
    pass


class NotIrreducible(DomainError):
    pass


class ZeroElement(DomainError):
    pass


class IncompatibleFields(DomainError):
    pass


class OrderMismatch(DomainError):
    pass


class InvalidCharacterBase(DomainError):
    pass


class IndexOutOfRange(DomainError):
    pass


class Divisible(DomainError):
    pass


class GenusZero(DomainError):
    pass


class NonIntegralCoefficient(DomainError):
    """A Newton step did not divide exactly; upstream trace data is wrong."""

    def __init__(self, t, message=""):
        self.t = t
        super().__init__(message or f"coefficient index {t}: inexact division")


class UnsupportedM(DomainError):
    pass


class UnsupportedEll(DomainError):
    pass


class ZeroRhs(DomainError):
    pass


class FieldTooLarge(ResourceError):
    pass


class BudgetExceeded(ResourceError):
    pass


class VerificationMismatch(HecnumError):
    exit_code = 3
