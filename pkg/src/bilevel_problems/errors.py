"""Exception types shared across the package."""


class BilevelError(Exception):
    """Base class for all package errors."""


class DimensionMismatch(BilevelError, ValueError):
    pass


class DomainViolation(BilevelError, ValueError):
    """Point lies outside the region where the problem's formulas are finite."""


class UnknownProblem(BilevelError, KeyError):
    pass


class ParameterOutOfRange(BilevelError, ValueError):
    pass


class NotCheckable(BilevelError):
    pass


class NotSmooth(BilevelError):
    pass


class NoFeasiblePoint(BilevelError):
    pass


class BudgetExhausted(BilevelError):
    pass
