"""Exception hierarchy.

Input-validation errors derive from :class:`InvalidInput` so the CLI can map
them to exit code 2 in one place.
"""


class PDSGraphError(Exception):
    pass


class InvalidInput(PDSGraphError, ValueError):
    pass


class NotPrime(InvalidInput):
    pass


class NotOddPrime(InvalidInput):
    pass


class NotPrimePower(InvalidInput):
    pass


class DegreeOutOfRange(InvalidInput):
    pass


class NotCoprime(InvalidInput):
    pass


class ModulusMismatch(InvalidInput):
    pass


class OddQ(InvalidInput):
    pass


class ZeroAlpha(InvalidInput):
    pass


class InvalidPDS(InvalidInput):
    pass


class FieldMismatch(PDSGraphError, TypeError):
    pass


class TowerMismatch(PDSGraphError, TypeError):
    pass


class DivisionByZero(PDSGraphError, ZeroDivisionError):
    pass


class WrongCharacteristic(PDSGraphError, ValueError):
    pass


class NoSpecialCubic(PDSGraphError):
    pass


class ZeroElement(PDSGraphError, ValueError):
    pass


class IndexOutOfRange(PDSGraphError, IndexError):
    pass


class DegenerateA(PDSGraphError, ArithmeticError):
    pass


class VerificationFailed(PDSGraphError):
    pass


class BudgetExceeded(PDSGraphError):
    pass
