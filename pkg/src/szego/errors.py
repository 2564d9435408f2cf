"""Exception hierarchy shared by all evaluators."""


class SzegoError(Exception):
    """Base class for numerical failures raised by this package."""


class InvalidArgument(SzegoError, ValueError):
    pass


class DivisionByZeroFactor(SzegoError, ZeroDivisionError):
    """A denominator factor of a negative-order q-Pochhammer symbol vanishes."""


class DivergentProduct(SzegoError, ValueError):
    """An infinite q-product was requested with |q| >= 1."""


class ConvergenceRegionViolated(SzegoError, ValueError):
    """Arguments lie outside the open region where a bilateral series converges."""


class PoleHit(SzegoError, ZeroDivisionError):
    """A denominator factor is numerically zero (|factor| < POLE_TOL)."""


class DomainViolation(SzegoError, ValueError):
    pass


class SingularSystem(SzegoError, ArithmeticError):
    pass


class LengthMismatch(SzegoError, ValueError):
    pass
