"""Exception types shared across the package."""


class DomainError(ValueError):
    """An operation was called outside its stated domain."""


class MixedRingError(DomainError):
    """Two classes from different rings were combined."""


class ConsistencyError(RuntimeError):
    """Two internal derivations of the same quantity disagree.

    This always signals an implementation bug, never bad input, and maps
    to exit code 3 on the command line.
    """
