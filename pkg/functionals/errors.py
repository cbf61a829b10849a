from spaces.errors import ChainscopeError


class BudgetInvalid(ChainscopeError):
    code = "budget_invalid"

    def __init__(self, name: str, value):
        super().__init__(f"Budget {name} must be a positive integer or inf, got {value}",
                         budget=name, value=str(value))


class ExactTooLarge(ChainscopeError):
    code = "exact_too_large"

    def __init__(self, size: int, bound: int):
        super().__init__(
            f"Exact solver accepts subsets of at most {bound} points, got {size}; use greedy mode",
            size=size, bound=bound,
        )
