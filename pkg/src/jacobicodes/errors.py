"""Exception types shared across the library."""


class JacobiCodesError(Exception):
    """Base class for library-specific failures."""


class IntegrityError(JacobiCodesError):
    """A mathematical identity that must hold for valid inputs failed.

    Raised when a cross-check breaks: a congruence system inconsistent with
    its certified root, a determinant identity that fails, a solution count
    different from what the theory guarantees, or a selection that is not
    unique.  Signals a bad (input, generator) pairing or an upstream bug,
    never a recoverable condition.
    """


class BudgetError(JacobiCodesError):
    """A configured resource limit (table size, deadline) was exceeded."""
