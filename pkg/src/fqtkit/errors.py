"""Exception types raised by fqtkit."""


class FQTError(Exception):
    """Base class for all library errors."""


class SizeError(FQTError, ValueError):
    """Input length or matrix order is incompatible with the operation."""


class DomainError(FQTError, ValueError):
    """Argument outside the operation's domain (bad variant, non-finite sample, ...)."""


class DegenerateInputError(FQTError, ValueError):
    """Input is valid but carries no information the operation can use."""
