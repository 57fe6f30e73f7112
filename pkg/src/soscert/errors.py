"""Error types shared across the package.

Both inherit from ValueError so callers that do not care about the
distinction can catch a single class.
"""


class InputError(ValueError):
    """Malformed or ill-typed arguments: arity mismatches, bad parameters."""


class DomainError(ValueError):
    """Well-formed arguments outside an operation's mathematical domain."""
