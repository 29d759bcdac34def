"""
Exception types raised by the curve birationality toolkit.
"""


class AlgebraError(ValueError):
    """Base class for every error raised by this package."""


class DivisionByZero(AlgebraError, ZeroDivisionError):
    """Inversion of zero in a coefficient field."""


class NotPrime(AlgebraError):
    """A prime field was requested for a composite modulus."""


class OutOfRange(AlgebraError):
    """A prime field modulus outside [2, 2**31)."""


class FieldSpecError(AlgebraError):
    """A field selection string that is neither `Q` nor `F<p>`."""


class FieldMismatch(AlgebraError):
    """Operands live over different coefficient fields."""


class ZeroPolynomial(AlgebraError):
    """An operation that needs a nonzero polynomial received zero."""


class AllZero(AlgebraError):
    """Every input of a gcd computation is zero."""


class AllZeroGenerators(AlgebraError):
    """An ideal was given only zero generators."""


class WrongArity(AlgebraError):
    """The Abhyankar-Moh check was called with other than two polynomials."""


class ConstantInput(AlgebraError):
    """A degree-based check received a constant polynomial."""


class DegenerateImage(AlgebraError):
    """Every component is constant, so the image is a point."""


class PreconditionFailed(AlgebraError):
    """A decision procedure was called on an instance that does not pass its guard."""


class PolySyntaxError(AlgebraError):
    """Polynomial text that does not match the input grammar."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset
