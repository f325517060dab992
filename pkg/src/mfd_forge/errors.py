"""Exception hierarchy shared by all modules."""


class MFDError(Exception):
    """Base class for every error raised by mfd_forge."""


# field
class NotPrime(MFDError, ValueError):
    pass


class ReducibleModulus(MFDError, ValueError):
    pass


class DegreeMismatch(MFDError, ValueError):
    pass


class SpecMismatch(MFDError, ValueError):
    pass


class DivisionByZero(MFDError, ZeroDivisionError):
    pass


# ferrers
class NotNondecreasing(MFDError, ValueError):
    pass


class ColumnExceedsOrder(MFDError, ValueError):
    pass


class NotTopRightJustified(MFDError, ValueError):
    pass


class OutOfRange(MFDError, ValueError):
    pass


class NotStrictlyPMonotone(MFDError, ValueError):
    pass


# skewflag
class NotPrimePowerOrder(MFDError, ValueError):
    pass


class CoordinateNotInSubfield(MFDError, ArithmeticError):
    pass


class OrderMismatch(MFDError, ValueError):
    pass


# codes
class NotPMonotone(MFDError, ValueError):
    pass


class OrderNotPowerOfChar(MFDError, ValueError):
    pass


class InvalidBasis(MFDError, ValueError):
    pass


class NotStrictlyMonotone(MFDError, ValueError):
    pass


class NotInitiallyConvex(MFDError, ValueError):
    pass


class NotMdsConstructible(MFDError, ValueError):
    pass


class NotSubdiagram(MFDError, ValueError):
    pass


class UnsupportedDiagramClass(MFDError, ValueError):
    pass


# verify
class CapExceeded(MFDError, RuntimeError):
    pass


class NoNonzeroCodewords(MFDError, ValueError):
    pass
