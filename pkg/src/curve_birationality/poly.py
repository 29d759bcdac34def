"""
Univariate polynomials in t, sparse bivariate polynomials in (s, t),
term orders, and the divided-difference construction.
"""

import enum
import math
from collections.abc import Callable, Iterable, Iterator, Mapping
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Literal, NamedTuple

from .coeff import Coefficient, Field
from .errors import AllZero, FieldMismatch, ZeroPolynomial


class Degree(enum.Enum):
    """Degree sentinel of the zero polynomial."""

    NEG_INFINITY = "-inf"

    def __str__(self) -> str:
        return "-∞"


NEG_INFINITY = Degree.NEG_INFINITY


def _check_same_field(a: Field, b: Field) -> None:
    if a != b:
        msg = f"Field mismatch: {a} vs {b}"
        raise FieldMismatch(msg)


class UniPoly:
    """A polynomial in one variable, stored as exponent -> nonzero coefficient."""

    __slots__ = ("coeffs", "field")

    def __init__(self, coeffs: Mapping[int, Coefficient] | None, field: Field):
        self.field = field
        self.coeffs: dict[int, Coefficient] = (
            {e: c for e, c in coeffs.items() if c} if coeffs else {}
        )

    @classmethod
    def zero(cls, field: Field) -> "UniPoly":
        return cls(None, field)

    @classmethod
    def constant(cls, c: Coefficient | int, field: Field) -> "UniPoly":
        return cls({0: field.element(c) if isinstance(c, int) else c}, field)

    @classmethod
    def monomial(cls, exp: int, c: Coefficient | int, field: Field) -> "UniPoly":
        return cls({exp: field.element(c) if isinstance(c, int) else c}, field)

    @classmethod
    def variable(cls, field: Field) -> "UniPoly":
        return cls.monomial(1, 1, field)

    @classmethod
    def from_ints(cls, coefficients: Iterable[int], field: Field) -> "UniPoly":
        """Build from integer coefficients listed from the constant term up."""
        return cls(
            {e: field.element(c) for e, c in enumerate(coefficients)}, field
        )

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int | Degree:
        return max(self.coeffs) if self.coeffs else NEG_INFINITY

    @property
    def is_constant(self) -> bool:
        return not self.coeffs or max(self.coeffs) == 0

    @property
    def leading_coefficient(self) -> Coefficient:
        if not self.coeffs:
            msg = "Zero polynomial has no leading coefficient"
            raise ZeroPolynomial(msg)
        return self.coeffs[max(self.coeffs)]

    def terms(self) -> list[tuple[int, Coefficient]]:
        """Terms by decreasing exponent."""
        return sorted(self.coeffs.items(), reverse=True)

    def _same(self, other: "UniPoly") -> None:
        _check_same_field(self.field, other.field)

    def __add__(self, other: "UniPoly") -> "UniPoly":
        self._same(other)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out[e] + c if e in out else c
        return UniPoly(out, self.field)

    def __neg__(self) -> "UniPoly":
        return UniPoly({e: -c for e, c in self.coeffs.items()}, self.field)

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def __mul__(self, other: "UniPoly | Coefficient | int") -> "UniPoly":
        if not isinstance(other, UniPoly):
            return self.scale(other)
        self._same(other)
        out: dict[int, Coefficient] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                out[e] = out[e] + c1 * c2 if e in out else c1 * c2
        return UniPoly(out, self.field)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "UniPoly":
        result = UniPoly.constant(1, self.field)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c: Coefficient | int) -> "UniPoly":
        return UniPoly({e: v * c for e, v in self.coeffs.items()}, self.field)

    def shift(self, k: int) -> "UniPoly":
        """Multiply by the k-th power of the variable."""
        return UniPoly({e + k: c for e, c in self.coeffs.items()}, self.field)

    def monic(self) -> "UniPoly":
        if not self.coeffs:
            return self
        return self.scale(self.field.inv(self.leading_coefficient))

    def derivative(self) -> "UniPoly":
        return UniPoly(
            {e - 1: c * e for e, c in self.coeffs.items() if e > 0}, self.field
        )

    def evaluate(self, x: Coefficient | int) -> Coefficient:
        result = self.field.zero
        if not self.coeffs:
            return result
        for e in range(max(self.coeffs), -1, -1):
            result = result * x + self.coeffs.get(e, self.field.zero)
        return result

    def compose(self, inner: "UniPoly") -> "UniPoly":
        """Return self(inner) by Horner's rule."""
        self._same(inner)
        result = UniPoly.zero(self.field)
        if not self.coeffs:
            return result
        for e in range(max(self.coeffs), -1, -1):
            result = result * inner
            if e in self.coeffs:
                result = result + UniPoly.constant(self.coeffs[e], self.field)
        return result

    def __divmod__(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        self._same(other)
        if other.is_zero:
            msg = "Polynomial division by zero"
            raise ZeroPolynomial(msg)
        db = max(other.coeffs)
        inv_lc = self.field.inv(other.coeffs[db])
        rem = dict(self.coeffs)
        quot: dict[int, Coefficient] = {}
        while rem and max(rem) >= db:
            dr = max(rem)
            factor = rem[dr] * inv_lc
            quot[dr - db] = factor
            for e, c in other.coeffs.items():
                k = e + dr - db
                v = rem.get(k, self.field.zero) - factor * c
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
        return UniPoly(quot, self.field), UniPoly(rem, self.field)

    def gcd(self, other: "UniPoly") -> "UniPoly":
        """Monic gcd over the coefficient field (zero if both are zero)."""
        a, b = self, other
        while not b.is_zero:
            a, b = b, divmod(a, b)[1]
        return a.monic()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.field, frozenset(self.coeffs.items())))

    def __repr__(self) -> str:
        return f"UniPoly({dict(sorted(self.coeffs.items()))}, {self.field})"


class Monomial(NamedTuple):
    """The monomial s^exp_s * t^exp_t."""

    exp_s: int
    exp_t: int

    @property
    def degree(self) -> int:
        return self.exp_s + self.exp_t

    def times(self, other: "Monomial") -> "Monomial":
        return Monomial(self.exp_s + other.exp_s, self.exp_t + other.exp_t)

    def divides(self, other: "Monomial") -> bool:
        return self.exp_s <= other.exp_s and self.exp_t <= other.exp_t

    def over(self, other: "Monomial") -> "Monomial":
        """Return self / other; caller guarantees divisibility."""
        return Monomial(self.exp_s - other.exp_s, self.exp_t - other.exp_t)

    def lcm(self, other: "Monomial") -> "Monomial":
        return Monomial(max(self.exp_s, other.exp_s), max(self.exp_t, other.exp_t))

    def is_coprime(self, other: "Monomial") -> bool:
        return min(self.exp_s, other.exp_s) == 0 and min(self.exp_t, other.exp_t) == 0


ONE = Monomial(0, 0)

OrderKind = Literal["degrevlex", "lex"]
Variable = Literal["s", "t"]

_ORDER_KEYS: dict[tuple[str, str], Callable[[Monomial], tuple[int, int]]] = {
    ("degrevlex", "s"): lambda m: (m.exp_s + m.exp_t, -m.exp_s),
    ("degrevlex", "t"): lambda m: (m.exp_s + m.exp_t, -m.exp_t),
    ("lex", "s"): lambda m: (m.exp_t, m.exp_s),
    ("lex", "t"): lambda m: (m.exp_s, m.exp_t),
}


@dataclass(frozen=True)
class TermOrder:
    """A monomial order on k[s, t]; ``smaller`` names the smaller variable."""

    kind: OrderKind = "degrevlex"
    smaller: Variable = "s"

    def __post_init__(self) -> None:
        if (self.kind, self.smaller) not in _ORDER_KEYS:
            msg = f"Unknown term order '{self.kind}' with smaller variable '{self.smaller}'"
            raise ValueError(msg)

    @property
    def key(self) -> Callable[[Monomial], tuple[int, int]]:
        """Sort key: a < b in the order iff key(a) < key(b)."""
        return _ORDER_KEYS[(self.kind, self.smaller)]

    def compare(self, a: Monomial, b: Monomial) -> int:
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def __str__(self) -> str:
        larger = "t" if self.smaller == "s" else "s"
        return f"{self.kind} ({self.smaller} < {larger})"


DEGREVLEX = TermOrder("degrevlex", "s")
LEX = TermOrder("lex", "s")


def compare_monomials(a: Monomial, b: Monomial, order: TermOrder) -> int:
    """Return -1, 0 or 1 as a is smaller than, equal to or larger than b."""
    return order.compare(a, b)


class BiPoly:
    """A sparse polynomial in k[s, t], stored as Monomial -> nonzero coefficient."""

    __slots__ = ("field", "terms")

    def __init__(self, terms: Mapping[Monomial, Coefficient] | None, field: Field):
        self.field = field
        self.terms: dict[Monomial, Coefficient] = (
            {m: c for m, c in terms.items() if c} if terms else {}
        )

    @classmethod
    def zero(cls, field: Field) -> "BiPoly":
        return cls(None, field)

    @classmethod
    def constant(cls, c: Coefficient | int, field: Field) -> "BiPoly":
        return cls({ONE: field.element(c) if isinstance(c, int) else c}, field)

    @classmethod
    def s(cls, field: Field) -> "BiPoly":
        return cls({Monomial(1, 0): field.one}, field)

    @classmethod
    def t(cls, field: Field) -> "BiPoly":
        return cls({Monomial(0, 1): field.one}, field)

    @classmethod
    def from_ints(cls, terms: Mapping[tuple[int, int], int], field: Field) -> "BiPoly":
        """Build from {(exp_s, exp_t): integer coefficient}."""
        return cls(
            {Monomial(*m): field.element(c) for m, c in terms.items()}, field
        )

    @classmethod
    def from_unipoly(cls, f: UniPoly, variable: Variable = "t") -> "BiPoly":
        if variable == "t":
            return cls({Monomial(0, e): c for e, c in f.coeffs.items()}, f.field)
        return cls({Monomial(e, 0): c for e, c in f.coeffs.items()}, f.field)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_constant(self) -> bool:
        return all(m == ONE for m in self.terms)

    @property
    def total_degree(self) -> int | Degree:
        return max(m.degree for m in self.terms) if self.terms else NEG_INFINITY

    def _same(self, other: "BiPoly") -> None:
        _check_same_field(self.field, other.field)

    def leading_term(self, order: TermOrder) -> tuple[Monomial, Coefficient]:
        if not self.terms:
            msg = "Zero polynomial has no leading term"
            raise ZeroPolynomial(msg)
        m = max(self.terms, key=order.key)
        return m, self.terms[m]

    def leading_monomial(self, order: TermOrder) -> Monomial:
        return self.leading_term(order)[0]

    def sorted_terms(self, order: TermOrder) -> list[tuple[Monomial, Coefficient]]:
        """Terms from the largest monomial down."""
        key = order.key
        return sorted(self.terms.items(), key=lambda item: key(item[0]), reverse=True)

    def __add__(self, other: "BiPoly") -> "BiPoly":
        self._same(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out[m] + c if m in out else c
        return BiPoly(out, self.field)

    def __neg__(self) -> "BiPoly":
        return BiPoly({m: -c for m, c in self.terms.items()}, self.field)

    def __sub__(self, other: "BiPoly") -> "BiPoly":
        return self + (-other)

    def __mul__(self, other: "BiPoly | Coefficient | int") -> "BiPoly":
        if not isinstance(other, BiPoly):
            return self.scalar_mul(other)
        self._same(other)
        out: dict[Monomial, Coefficient] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = Monomial(m1.exp_s + m2.exp_s, m1.exp_t + m2.exp_t)
                out[m] = out[m] + c1 * c2 if m in out else c1 * c2
        return BiPoly(out, self.field)

    __rmul__ = __mul__

    def scalar_mul(self, c: Coefficient | int) -> "BiPoly":
        return BiPoly({m: v * c for m, v in self.terms.items()}, self.field)

    def monomial_mul(self, mono: Monomial, c: Coefficient | int = 1) -> "BiPoly":
        return BiPoly(
            {m.times(mono): v * c for m, v in self.terms.items()}, self.field
        )

    def monic(self, order: TermOrder) -> "BiPoly":
        if not self.terms:
            return self
        return self.scalar_mul(self.field.inv(self.leading_term(order)[1]))

    def t_coefficients(self) -> dict[int, UniPoly]:
        """View as a polynomial in t over k[s]: t-exponent -> coefficient in s."""
        grouped: dict[int, dict[int, Coefficient]] = {}
        for m, c in self.terms.items():
            grouped.setdefault(m.exp_t, {})[m.exp_s] = c
        return {e: UniPoly(cs, self.field) for e, cs in grouped.items()}

    @classmethod
    def from_t_coefficients(cls, coeffs: Mapping[int, UniPoly], field: Field) -> "BiPoly":
        return cls(
            {
                Monomial(es, et): c
                for et, u in coeffs.items()
                for es, c in u.coeffs.items()
            },
            field,
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self.field == other.field and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.field, frozenset(self.terms.items())))

    def __iter__(self) -> Iterator[tuple[Monomial, Coefficient]]:
        return iter(self.terms.items())

    def __repr__(self) -> str:
        return f"BiPoly({dict(sorted(self.terms.items()))}, {self.field})"


def derivative(f: UniPoly) -> UniPoly:
    """Formal derivative; in characteristic p the exponents divisible by p vanish."""
    return f.derivative()


def divided_difference(f: UniPoly) -> BiPoly:
    """Return g with (t - s) * g = f(t) - f(s).

    Built term by term from (t^j - s^j) / (t - s) = sum over a + b = j - 1 of
    t^a s^b, so no polynomial division is involved.
    """
    terms: dict[Monomial, Coefficient] = {}
    for j, c in f.coeffs.items():
        for a in range(j):
            terms[Monomial(j - 1 - a, a)] = c
    return BiPoly(terms, f.field)


def substitute_diagonal(g: BiPoly) -> UniPoly:
    """Return g(s, s) as a univariate polynomial."""
    out: dict[int, Coefficient] = {}
    for m, c in g.terms.items():
        e = m.degree
        out[e] = out[e] + c if e in out else c
    return UniPoly(out, g.field)


def leading_term(g: BiPoly, order: TermOrder) -> tuple[Monomial, Coefficient]:
    return g.leading_term(order)


def _content(coeffs: Mapping[int, UniPoly]) -> UniPoly:
    return reduce(lambda a, b: a.gcd(b), coeffs.values()).monic()


def _primitive_part(coeffs: dict[int, UniPoly]) -> dict[int, UniPoly]:
    content = _content(coeffs)
    out = {}
    for e, u in coeffs.items():
        q, r = divmod(u, content)
        if not r.is_zero:
            msg = "content does not divide a coefficient"
            raise ArithmeticError(msg)
        out[e] = q
    return out


def _pseudo_remainder(a: dict[int, UniPoly], b: dict[int, UniPoly]) -> dict[int, UniPoly]:
    db = max(b)
    lb = b[db]
    rem = dict(a)
    while rem and max(rem) >= db:
        dr = max(rem)
        lr = rem[dr]
        nxt = {e: u * lb for e, u in rem.items()}
        for e, u in b.items():
            k = e + dr - db
            v = nxt[k] - u * lr if k in nxt else -(u * lr)
            nxt[k] = v
        rem = {e: u for e, u in nxt.items() if not u.is_zero}
    return rem


def _primitive_gcd(a: dict[int, UniPoly], b: dict[int, UniPoly]) -> dict[int, UniPoly]:
    if max(a) < max(b):
        a, b = b, a
    while b:
        r = _pseudo_remainder(a, b)
        a, b = b, (_primitive_part(r) if r else {})
    return a


def bivariate_gcd(gs: Iterable[BiPoly]) -> BiPoly:
    """Gcd of bivariate polynomials, viewed in k[s][t].

    Contents (gcds of the s-coefficients) and primitive parts are handled
    separately; primitive parts go through a primitive pseudo-remainder
    sequence. The result is scaled so its leading coefficient in t, a
    polynomial in s, is monic; constant gcds come out as 1.
    """
    nonzero = [g for g in gs if not g.is_zero]
    if not nonzero:
        msg = "bivariate gcd of zero polynomials"
        raise AllZero(msg)
    field = nonzero[0].field
    for g in nonzero[1:]:
        _check_same_field(field, g.field)

    # Split each g into content in k[s] and primitive part in k[s][t]
    views = [g.t_coefficients() for g in nonzero]
    content = reduce(lambda a, b: a.gcd(b), (_content(v) for v in views))
    prim = reduce(_primitive_gcd, (_primitive_part(v) for v in views))

    # Recombine, then normalize the leading coefficient in t
    result = BiPoly.from_t_coefficients(
        {e: u * content for e, u in prim.items()}, field
    )
    lead = result.t_coefficients()
    lc = lead[max(lead)].leading_coefficient
    return result.scalar_mul(field.inv(lc))


def integer_primitive(p: UniPoly | BiPoly, order: TermOrder = DEGREVLEX) -> UniPoly | BiPoly:
    """Clear denominators, make the content 1 and the leading coefficient positive.

    Over a prime field there are no integers to normalize, so the monic
    form is returned instead.
    """
    if isinstance(p, UniPoly):
        if p.is_zero:
            return p
        if p.field.characteristic:
            return p.monic()
        lead = p.leading_coefficient
        items = p.coeffs
    else:
        if p.is_zero:
            return p
        if p.field.characteristic:
            return p.monic(order)
        lead = p.leading_term(order)[1]
        items = p.terms
    denominators = math.lcm(*(Fraction(c).denominator for c in items.values()))
    numerators = [int(Fraction(c) * denominators) for c in items.values()]
    content = math.gcd(*numerators)
    factor = Fraction(denominators, content) * (1 if lead > 0 else -1)
    return p.scale(factor) if isinstance(p, UniPoly) else p.scalar_mul(factor)
