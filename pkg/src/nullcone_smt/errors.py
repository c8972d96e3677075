"""Exception hierarchy shared by every module.

Each class maps to one CLI exit code (see ``cli.EXIT_CODES``).
"""

import os

DEFAULT_GUARD = 10**7


class NullconeError(Exception):
    """Base class for all errors raised by this package."""


class ParameterError(NullconeError, ValueError):
    """Arguments are malformed or refer to mismatched ambients."""


class DomainError(NullconeError, ValueError):
    """Arguments are well formed but outside the operation's domain."""


class ResourceError(NullconeError, RuntimeError):
    """An exhaustive enumeration would exceed the configured guard."""


class InvariantViolation(NullconeError, RuntimeError):
    """An internal consistency check failed; this signals a bug."""


def guard_limit(guard: int | None = None) -> int:
    """Resolve the enumeration guard: explicit value, then ``NULLCONE_GUARD``, then default."""
    if guard is not None:
        return guard
    env = os.environ.get("NULLCONE_GUARD")
    if env:
        try:
            return int(env)
        except ValueError:
            raise ParameterError(f"NULLCONE_GUARD must be an integer, got {env!r}") from None
    return DEFAULT_GUARD
