class NormTraceError(ValueError):
    """Invalid input for a norm-trace computation."""


class FieldError(NormTraceError):
    """Bad field parameters or mixed-field arithmetic."""


class CurveError(NormTraceError):
    """Curve parameters violate u | (q^s - 1)/(q - 1)."""


class MonomialError(NormTraceError):
    """Monomial set outside the box, not decreasing, or badly nested."""


class CodeError(NormTraceError):
    """Linear code construction failure."""


class BudgetExceededError(RuntimeError):
    """An enumeration would exceed its configured budget."""

    def __init__(self, what: str, needed: int, budget: int):
        super().__init__(f"{what}: {needed} exceeds budget {budget}")
        self.what = what
        self.needed = needed
        self.budget = budget
