"""Exception types shared across the package."""


class NotCoprime(ValueError):
    """Arguments required to be coprime share a factor."""


class EvenModulus(ValueError):
    """Jacobi symbol modulus must be odd."""


class EvenInput(ValueError):
    """Operation defined for odd integers only."""


class EvenOrder(ValueError):
    """Invariant order r must be odd."""


class OrderOne(ValueError):
    """Invariant order r must exceed 1."""


class NonPositiveP(ValueError):
    """Lens space parameter p must be a positive integer."""


class NotInSubfield(ValueError):
    """Cyclotomic value does not lie in the requested subfield."""


class NotInvertible(ZeroDivisionError):
    """Power series denominator has no invertible unit part."""


class IntegralityFailure(ArithmeticError):
    """A root-of-unity bracket failed to reduce to the expected subfield.

    This signals an implementation or sign-convention bug, never a
    legitimate input condition.
    """
