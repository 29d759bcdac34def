"""
Recursive-descent parser for univariate polynomial input in the variable t.

Grammar::

    expr   := ['-'] term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := integer | integer '/' integer | 't' | 't' '^' uint | '(' expr ')'

Multiplication is always explicit (``3*t``, never ``3t``); whitespace is
ignored. Coefficients are mapped into the target field.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .coeff import Field
from .errors import DivisionByZero, PolySyntaxError
from .poly import UniPoly
from .utils.formatting import format_poly

__all__ = ["DEFAULT_MAX_DEGREE", "PolySource", "format_poly", "parse_poly"]

DEFAULT_MAX_DEGREE = 4096
MAX_NESTING = 200
MAX_DIGITS = 4000

_SINGLE = {"+": "PLUS", "-": "MINUS", "*": "STAR", "/": "SLASH", "^": "CARET", "(": "LPAREN", ")": "RPAREN"}
_WHITESPACE = " \t\r\n"


class _Token(NamedTuple):
    kind: str
    text: str
    offset: int


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch in _WHITESPACE:
            i += 1
        elif "0" <= ch <= "9":
            j = i
            while j < n and "0" <= text[j] <= "9":
                j += 1
            tokens.append(_Token("INT", text[i:j], i))
            i = j
        elif ch == "t":
            tokens.append(_Token("T", ch, i))
            i += 1
        elif ch in _SINGLE:
            tokens.append(_Token(_SINGLE[ch], ch, i))
            i += 1
        else:
            msg = f"Unexpected character {ch!r}"
            raise PolySyntaxError(msg, _byte_offset(text, i))
    tokens.append(_Token("END", "", n))
    return tokens


def _byte_offset(text: str, index: int) -> int:
    return len(text[:index].encode("utf-8", "surrogatepass"))


class _Parser:
    def __init__(self, text: str, field: Field, max_degree: int):
        self.text = text
        self.field = field
        self.max_degree = max_degree
        self.tokens = _tokenize(text)
        self.pos = 0

    @property
    def current(self) -> _Token:
        return self.tokens[self.pos]

    def _error(self, message: str, token: _Token | None = None) -> PolySyntaxError:
        token = token or self.current
        return PolySyntaxError(message, _byte_offset(self.text, token.offset))

    def _expect(self, kind: str, what: str) -> _Token:
        token = self.current
        if token.kind != kind:
            found = "end of input" if token.kind == "END" else repr(token.text)
            raise self._error(f"Expected {what}, found {found}")
        self.pos += 1
        return token

    def _integer(self, token: _Token) -> int:
        if len(token.text) > MAX_DIGITS:
            raise self._error("Integer literal too long", token)
        return int(token.text)

    def _check_degree(self, poly: UniPoly, token: _Token) -> UniPoly:
        if not poly.is_constant and max(poly.coeffs) > self.max_degree:
            raise self._error(f"Degree exceeds the limit of {self.max_degree}", token)
        return poly

    def parse(self) -> UniPoly:
        result = self.expr(0)
        if self.current.kind != "END":
            raise self._error(f"Unexpected {self.current.text!r}")
        return result

    def expr(self, depth: int) -> UniPoly:
        negate = False
        if self.current.kind == "MINUS":
            negate = True
            self.pos += 1
        result = self.term(depth)
        if negate:
            result = -result
        while self.current.kind in ("PLUS", "MINUS"):
            op = self.current.kind
            self.pos += 1
            right = self.term(depth)
            result = result + right if op == "PLUS" else result - right
        return result

    def term(self, depth: int) -> UniPoly:
        result = self.factor(depth)
        while self.current.kind == "STAR":
            star = self.current
            self.pos += 1
            result = self._check_degree(result * self.factor(depth), star)
        return result

    def factor(self, depth: int) -> UniPoly:
        token = self.current
        if token.kind == "INT":
            self.pos += 1
            numerator = self._integer(token)
            if self.current.kind != "SLASH":
                return UniPoly.constant(self.field.element(numerator), self.field)
            # a/b literal
            self.pos += 1
            denominator_token = self._expect("INT", "integer denominator")
            denominator = self._integer(denominator_token)
            # Checked before Fraction cancels common factors
            p = self.field.characteristic
            if denominator == 0 or (p and denominator % p == 0):
                msg = f"Zero denominator at offset {_byte_offset(self.text, denominator_token.offset)}"
                raise DivisionByZero(msg)
            value = self.field.from_fraction(Fraction(numerator, denominator))
            return UniPoly.constant(value, self.field)
        if token.kind == "T":
            # t or t^n
            self.pos += 1
            if self.current.kind != "CARET":
                return UniPoly.variable(self.field)
            self.pos += 1
            exponent_token = self._expect("INT", "exponent")
            exponent = self._integer(exponent_token)
            if exponent > self.max_degree:
                raise self._error(f"Degree exceeds the limit of {self.max_degree}", exponent_token)
            return UniPoly.monomial(exponent, 1, self.field)
        if token.kind == "LPAREN":
            # Parenthesized subexpression
            if depth >= MAX_NESTING:
                raise self._error("Parentheses nested too deeply")
            self.pos += 1
            inner = self.expr(depth + 1)
            self._expect("RPAREN", "')'")
            return inner
        found = "end of input" if token.kind == "END" else repr(token.text)
        raise self._error(f"Expected a number, 't' or '(', found {found}")


def parse_poly(
    text: str | bytes, field: Field, max_degree: int = DEFAULT_MAX_DEGREE
) -> UniPoly:
    """Parse polynomial text in t into a UniPoly over ``field``.

    Raises PolySyntaxError (with a byte offset) or DivisionByZero; nothing else.
    """
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as e:
            msg = "Input is not valid UTF-8"
            raise PolySyntaxError(msg, e.start) from e
    return _Parser(text, field, max_degree).parse()


@dataclass(frozen=True)
class PolySource:
    """Raw polynomial text together with the field it is read over."""

    text: str
    field: Field

    def parse(self, max_degree: int = DEFAULT_MAX_DEGREE) -> UniPoly:
        return parse_poly(self.text, self.field, max_degree)
