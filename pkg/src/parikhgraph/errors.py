"""Exception types shared across the package."""


class ParikhError(Exception):
    """Base class for all errors raised by parikhgraph."""


class DomainError(ParikhError, ValueError):
    """An argument lies outside the domain of an operation."""


class CapacityError(ParikhError):
    """An exhaustive search was asked to run above its configured vertex cap."""


class NotRepresentableError(ParikhError):
    """The graph has no strong ordering, hence no representing word."""
