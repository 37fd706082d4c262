"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain an operation is defined on."""


class OutOfRangeError(DomainError):
    """A complex argument falls outside the supported evaluation box."""


class RootNotFoundError(RuntimeError):
    """A bracketed root search found no sign change.

    ``table`` holds the diagnostic sweep as ``(x, f(x))`` pairs.
    """

    def __init__(self, message, table=()):
        super().__init__(message)
        self.table = list(table)
