"""Exception hierarchy shared by all modules."""


class DihedralCodesError(Exception):
    """Base class for every error raised by this package."""


class PreconditionError(DihedralCodesError, ValueError):
    """An input violates a documented precondition."""


class NonPrimeCharacteristic(PreconditionError):
    pass


class ReducibleModulus(PreconditionError):
    pass


class FieldMismatch(PreconditionError):
    pass


class CharacteristicMismatch(PreconditionError):
    pass


class DivisionByZero(DihedralCodesError, ZeroDivisionError):
    pass


class ZeroElement(PreconditionError):
    pass


class OrderNotDivisible(PreconditionError):
    pass


class BaseNotCoprime(PreconditionError):
    pass


class NotCoprime(PreconditionError):
    pass


class CoefficientNotInSubfield(DihedralCodesError, ArithmeticError):
    """A value expected to lie in an embedded subfield did not. Indicates a bug."""


class OddLength(PreconditionError):
    pass


class ZeroGenerator(PreconditionError):
    pass


class DeltaOutOfRange(PreconditionError):
    pass


class DegenerateGenerator(PreconditionError):
    """The requested generator is x^m - 1, i.e. the zero code."""


class EvenModulus(PreconditionError):
    pass


class ConditionFails(PreconditionError):
    pass


class NotCharTwo(PreconditionError):
    pass


class LengthTooShort(PreconditionError):
    pass


class DimensionExceedsCap(PreconditionError):
    pass


class EmptyCode(PreconditionError):
    pass


class ParseError(DihedralCodesError, ValueError):
    """Malformed text input. ``position`` is the 0-based character offset."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
