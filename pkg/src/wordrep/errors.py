"""Exception types shared across the package."""


class CapExceeded(RuntimeError):
    """An enumeration guard tripped before the search space was exhausted.

    Raised instead of silently hanging when an exhaustive search would be
    larger than the configured resource cap.
    """


class DomainError(Exception):
    """Operands are well-formed but outside an operation's mathematical domain.

    Example: asking for the permutation-representation number of a graph
    that admits no transitive orientation.
    """
