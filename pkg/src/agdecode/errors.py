"""Exception types raised by agdecode."""


class AGCodeError(Exception):
    """Base class for all library errors."""


class NonPrimeP(AGCodeError, ValueError):
    pass


class ReducibleModulus(AGCodeError, ValueError):
    pass


class DegreeMismatch(AGCodeError, ValueError):
    pass


class DivisionByZero(AGCodeError, ZeroDivisionError):
    pass


class FieldOrderMismatch(AGCodeError, ValueError):
    pass


class GapValue(AGCodeError, ValueError):
    """Raised when a weighted degree is not in the semigroup."""


class ZeroElement(AGCodeError, ValueError):
    pass


class DuplicatePoint(AGCodeError, ValueError):
    pass


class LengthMismatch(AGCodeError, ValueError):
    pass


class OutOfRange(AGCodeError, ValueError):
    pass


class BadConfig(AGCodeError, ValueError):
    pass


class InternalPivotZero(AGCodeError, RuntimeError):
    """A pivot scalar vanished during rebasing; the basis invariants were broken."""
