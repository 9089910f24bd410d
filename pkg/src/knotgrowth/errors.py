"""Exception types shared across the package.

The CLI maps these onto distinct exit codes, so library code should raise
the most specific one that applies.
"""


class KnotgrowthError(Exception):
    """Base class for all errors raised by this package."""


class ParameterError(KnotgrowthError, ValueError):
    """A caller-supplied parameter is malformed or out of range."""


class DomainError(KnotgrowthError, ValueError):
    """A value lies outside the domain an operation is defined on."""


class NotRepresentableError(KnotgrowthError, ValueError):
    """The requested element has no word of the requested shape."""


class MoveError(KnotgrowthError, ValueError):
    """A diagram rewrite does not apply at the given site."""


class ResourceBudgetError(KnotgrowthError, RuntimeError):
    """An enumeration would exceed the configured word budget."""

    def __init__(self, required: int, budget: int):
        self.required = required
        self.budget = budget
        super().__init__(
            f"word universe needs {required} words but the budget is {budget}; "
            f"raise the budget to at least {required}"
        )


class InternalConsistencyError(KnotgrowthError, RuntimeError):
    """An invariant the implementation guarantees was violated; a bug."""
