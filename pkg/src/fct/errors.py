"""Error types shared across the package.

The command line tool maps these onto process exit codes:

* ``UsageError``             -> 2 (bad arguments, unsupported combination)
* ``InternalInvariantError`` -> 3 (a structural self-check failed)
* ``ResourceLimitError``     -> 4 (an enumeration exceeded its safety bound)

Verification failures (an identity that does not hold) are ordinary return
values, not exceptions; the CLI turns them into exit code 1.
"""
from __future__ import annotations


class UsageError(ValueError):
    """Raised when an operation is called outside its contract."""


class InternalInvariantError(AssertionError):
    """Raised when a structural invariant of the package itself fails."""


class ResourceLimitError(RuntimeError):
    """Raised when an enumeration would exceed a configured safety bound."""
