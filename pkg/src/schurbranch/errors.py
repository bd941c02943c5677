"""Exception types shared by the engines and mapped to CLI exit codes."""


class InvalidInput(ValueError):
    """Input rejected before any computation (exit status 1)."""


class ResourceLimitError(RuntimeError):
    """A configured size cap would be exceeded (exit status 2)."""


class ConsistencyError(AssertionError):
    """Two computation paths disagreed or an invariant broke (exit status 3)."""
