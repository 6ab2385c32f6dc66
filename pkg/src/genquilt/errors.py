"""Shared exception types."""


class BudgetExceededError(RuntimeError):
    """An enumeration, simulation, or table request exceeds its configured budget."""

    def __init__(self, what: str, requested, limit):
        super().__init__(f"{what}: requested {requested}, budget is {limit}")
        self.requested = requested
        self.limit = limit
