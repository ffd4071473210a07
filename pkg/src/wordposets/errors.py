"""Exceptions shared across the package."""


class GraphParseError(ValueError):
    """A graph or alphabet description file is malformed."""


class NotReducedError(ValueError):
    """A word that must be reduced is not."""


class SignToleranceError(ArithmeticError):
    """A root-vector sign could not be decided.

    Raised when a root's coordinates all sit within tolerance of zero, or
    carry both signs (which the theory forbids, so it signals accumulated
    floating-point error).  Never resolved silently: callers must shorten
    the word or switch to a label set with exact arithmetic.
    """


class BudgetError(RuntimeError):
    """A configured cap (positions, closure size, memo entries, search nodes)
    was exceeded.  The partial computation is discarded, never truncated."""
