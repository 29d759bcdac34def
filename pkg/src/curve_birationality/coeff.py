"""
Exact coefficient fields: the rationals and prime fields F_p.

Polynomial code never inspects coefficients directly; it goes through a
field descriptor (``RationalField`` or ``PrimeField``) and the Python
operators of the element type, so every algorithm is field-generic.
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import ClassVar

from .errors import DivisionByZero, FieldMismatch, FieldSpecError, NotPrime, OutOfRange

# Rationals are stored by ``fractions.Fraction``: always reduced, positive
# denominator, zero is 0/1.
Rational = Fraction

MAX_MODULUS = 2**31

# Deterministic Miller-Rabin witnesses, valid for every n < 3_215_031_751.
_MR_WITNESSES = (2, 3, 5, 7)

_FIELD_PATTERN = re.compile(r"^\s*(?:(Q)|F(\d+))\s*$")


def is_prime(n: int) -> bool:
    """Deterministic primality test for n < 2**31."""
    if n < 2:
        return False
    for small in (2, 3, 5, 7, 11, 13):
        if n % small == 0:
            return n == small
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class PrimeFieldElement:
    """A residue in [0, p) of the prime field F_p."""

    __slots__ = ("modulus", "value")

    def __init__(self, value: int, modulus: int):
        self.modulus = modulus
        self.value = value % modulus

    def _coerce(self, other: object) -> "PrimeFieldElement | None":
        if isinstance(other, PrimeFieldElement):
            if other.modulus != self.modulus:
                msg = f"Cannot mix F_{self.modulus} and F_{other.modulus}"
                raise FieldMismatch(msg)
            return other
        if isinstance(other, int):
            return PrimeFieldElement(other, self.modulus)
        return None

    def __add__(self, other: object) -> "PrimeFieldElement":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElement(self.value + o.value, self.modulus)

    __radd__ = __add__

    def __sub__(self, other: object) -> "PrimeFieldElement":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElement(self.value - o.value, self.modulus)

    def __rsub__(self, other: object) -> "PrimeFieldElement":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElement(o.value - self.value, self.modulus)

    def __mul__(self, other: object) -> "PrimeFieldElement":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElement(self.value * o.value, self.modulus)

    __rmul__ = __mul__

    def __neg__(self) -> "PrimeFieldElement":
        return PrimeFieldElement(-self.value, self.modulus)

    def inverse(self) -> "PrimeFieldElement":
        if self.value == 0:
            msg = f"Cannot invert 0 in F_{self.modulus}"
            raise DivisionByZero(msg)
        return PrimeFieldElement(pow(self.value, -1, self.modulus), self.modulus)

    def __truediv__(self, other: object) -> "PrimeFieldElement":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: object) -> "PrimeFieldElement":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __bool__(self) -> bool:
        return self.value != 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, PrimeFieldElement):
            return self.modulus == other.modulus and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.modulus
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.value, self.modulus))

    def __repr__(self) -> str:
        return f"PrimeFieldElement({self.value}, {self.modulus})"

    def __str__(self) -> str:
        return str(self.value)


Coefficient = Fraction | PrimeFieldElement


class Field:
    """Descriptor of a coefficient field; subclasses fix the element type."""

    characteristic: int
    name: str

    @property
    def zero(self) -> Coefficient:
        return self.element(0)

    @property
    def one(self) -> Coefficient:
        return self.element(1)

    def element(self, value: int) -> Coefficient:
        raise NotImplementedError

    def from_fraction(self, value: Fraction) -> Coefficient:
        raise NotImplementedError

    def add(self, a: Coefficient, b: Coefficient) -> Coefficient:
        return a + b

    def sub(self, a: Coefficient, b: Coefficient) -> Coefficient:
        return a - b

    def mul(self, a: Coefficient, b: Coefficient) -> Coefficient:
        return a * b

    def neg(self, a: Coefficient) -> Coefficient:
        return -a

    def inv(self, a: Coefficient) -> Coefficient:
        raise NotImplementedError

    def div(self, a: Coefficient, b: Coefficient) -> Coefficient:
        return a * self.inv(b)

    def format(self, c: Coefficient) -> str:
        return str(c)

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class RationalField(Field):
    """The field Q of arbitrary precision rationals."""

    characteristic: ClassVar[int] = 0
    name: ClassVar[str] = "Q"

    def element(self, value: int) -> Fraction:
        return Fraction(value)

    def from_fraction(self, value: Fraction) -> Fraction:
        return Fraction(value)

    def inv(self, a: Coefficient) -> Fraction:
        if not a:
            msg = "Cannot invert 0 in Q"
            raise DivisionByZero(msg)
        return 1 / Fraction(a)


@dataclass(frozen=True)
class PrimeField(Field):
    """The prime field F_p; build it with ``make_prime_field``."""

    modulus: int

    @property
    def characteristic(self) -> int:  # type: ignore[override]
        return self.modulus

    @property
    def name(self) -> str:  # type: ignore[override]
        return f"F{self.modulus}"

    def element(self, value: int) -> PrimeFieldElement:
        return PrimeFieldElement(value, self.modulus)

    def from_fraction(self, value: Fraction) -> PrimeFieldElement:
        if value.denominator % self.modulus == 0:
            msg = f"Denominator {value.denominator} vanishes in F_{self.modulus}"
            raise DivisionByZero(msg)
        return self.element(value.numerator) / self.element(value.denominator)

    def inv(self, a: Coefficient) -> PrimeFieldElement:
        if not isinstance(a, PrimeFieldElement) or a.modulus != self.modulus:
            msg = f"{a!r} is not an element of F_{self.modulus}"
            raise FieldMismatch(msg)
        return a.inverse()


QQ = RationalField()


def make_prime_field(p: int) -> PrimeField:
    """Return F_p after checking 2 <= p < 2**31 and primality."""
    if not 2 <= p < MAX_MODULUS:
        msg = f"Modulus {p} outside [2, 2^31)"
        raise OutOfRange(msg)
    if not is_prime(p):
        msg = f"Modulus {p} is not prime"
        raise NotPrime(msg)
    return PrimeField(p)


def parse_field(spec: str) -> Field:
    """Resolve a field selection string: ``Q`` or ``F<p>`` such as ``F101``."""
    match = _FIELD_PATTERN.match(spec)
    if not match:
        msg = f"Invalid field '{spec}'. Use Q or F<p>, e.g. F101"
        raise FieldSpecError(msg)
    if match.group(1):
        return QQ
    return make_prime_field(int(match.group(2)))
