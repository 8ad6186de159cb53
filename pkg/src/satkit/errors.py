"""Exceptions shared across modules."""


class BudgetExceededError(RuntimeError):
    """An exhaustive search was refused because the instance exceeds its size guard."""
