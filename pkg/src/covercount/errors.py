"""Shared exception types; the CLI maps them to exit codes."""


class DomainError(ValueError):
    """Invalid input data (bad covering spec, out-of-domain argument)."""


class BudgetExceeded(RuntimeError):
    """A search or table was refused because it exceeds the configured budget."""


class ConsistencyError(AssertionError):
    """Two independent exact routes disagreed; this falsifies an identity
    the artifact relies on and is never recoverable."""
