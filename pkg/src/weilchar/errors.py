"""Exception types raised across the package."""


class NotPrime(ValueError):
    pass


class EvenCharacteristic(ValueError):
    pass


class FieldTooLarge(ValueError):
    pass


class MixedFields(TypeError):
    pass


class DivisionByZero(ZeroDivisionError):
    pass


class NotASubfield(ValueError):
    pass


class NotInGaussRing(ValueError):
    """A cyclotomic integer is not of the form a + b*rho with a, b integers."""


class NonIntegralResult(ArithmeticError):
    pass


class NonIntegralMultiplicity(ArithmeticError):
    """An inner product of characters did not come out as a nonnegative integer."""


class NonIntegralCount(ArithmeticError):
    pass


class SingularMember(ArithmeticError):
    pass


class DimensionMismatch(ValueError):
    pass


class NotSymmetric(ValueError):
    pass


class EnumerationTooLarge(RuntimeError):
    """Raised when a brute-force path would exceed its enumeration budget."""

    def __init__(self, what: str, size: int, limit: int):
        super().__init__(f"{what}: {size} exceeds enumeration limit {limit}")
        self.what = what
        self.size = size
        self.limit = limit


def check_budget(what: str, size: int, limit: int) -> None:
    if size > limit:
        raise EnumerationTooLarge(what, size, limit)
