"""Exceptions shared across the package."""


class ParseError(ValueError):
    """Input text is not a valid binary word.

    ``position`` is the 0-based index of the first offending character,
    or None when the problem is not tied to a single position.
    """

    def __init__(self, message: str, position: int | None = None):
        super().__init__(message)
        self.position = position


class ContractError(ValueError):
    """An operation was called outside its documented domain."""


class CapExceeded(RuntimeError):
    """An enumeration request exceeds the configured size cap."""
