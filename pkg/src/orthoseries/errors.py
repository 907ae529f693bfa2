"""Exception types shared across the package."""


class StructuralError(ValueError):
    """An object does not conform to the measure space / fiber layout it is used with."""


class ContractError(ValueError):
    """An input violates a documented precondition (e.g. non-monotone weights)."""


class BudgetError(RuntimeError):
    """A computation would exceed its documented resource budget."""
