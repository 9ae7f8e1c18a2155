"""Exceptions raised by LIEWB."""


class LiewbError(Exception):
    """Base class for every error raised by the workbench."""


class DomainError(LiewbError, ValueError):
    """An argument lies outside the domain of the operation."""


class IntegralityError(LiewbError, ArithmeticError):
    """A quantity that must be integral came out fractional."""


class InvalidRep(LiewbError, ValueError):
    """A matrix does not define a representation of the cyclic group."""


class NegativeCoords(LiewbError, ValueError):
    """A virtual Green-ring element was used where a module is required."""


class BudgetExceeded(LiewbError):
    """A tensor space would exceed the configured dimension budget."""


class InternalError(LiewbError, RuntimeError):
    """An internal consistency check failed."""
