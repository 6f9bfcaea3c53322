class DomainError(ValueError):
    """Bad user input: unknown family/pair name, parameter out of range."""


class ClosureBoundExceeded(DomainError):
    """Group closure exceeded the configured element bound."""


class CheckFailure(RuntimeError):
    """A structural identity that must hold exactly failed to hold."""
