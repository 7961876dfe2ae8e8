"""Exception hierarchy shared by every module of the toolkit."""


class FordToolkitError(Exception):
    """Base class for all errors raised by fordtunnels."""


class NonFiniteValue(FordToolkitError, ValueError):
    pass


class SingularMatrix(FordToolkitError, ValueError):
    pass


class NotUpperParabolic(FordToolkitError, ValueError):
    pass


class DegenerateHeight(FordToolkitError, ArithmeticError):
    pass


class FixesInfinity(FordToolkitError, ValueError):
    pass


class OutsideFootprint(FordToolkitError, ValueError):
    pass


class CoincidentHoroballs(FordToolkitError, ValueError):
    pass


class OutOfRange(FordToolkitError, ValueError):
    pass


class BudgetExceeded(FordToolkitError, RuntimeError):
    pass


class HypothesisViolated(FordToolkitError, ValueError):
    pass


class DegenerateConfiguration(FordToolkitError, ValueError):
    pass


class NoSignChange(FordToolkitError, ValueError):
    pass


class TooFarApart(FordToolkitError, ValueError):
    pass


class ParseError(FordToolkitError, ValueError):
    pass


class ValidationError(FordToolkitError, ValueError):
    pass
