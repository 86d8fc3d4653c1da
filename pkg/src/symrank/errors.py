"""Exceptions shared across the toolkit."""

__all__ = ["BudgetExceeded", "ConstructionError"]


class BudgetExceeded(Exception):
    """An enumeration was refused because its size exceeds the stated budget.

    Raised eagerly, before any work is done.  Carries the requested size
    and the budget so callers can report the refusal precisely.
    """

    def __init__(self, what: str, size: int, budget: int):
        self.what = what
        self.size = size
        self.budget = budget
        super().__init__(f"{what}: size {size} exceeds budget {budget}")


class ConstructionError(Exception):
    """A code construction produced structurally invalid output."""
