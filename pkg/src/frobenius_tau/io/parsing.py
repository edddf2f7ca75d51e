"""Text grammars for polynomials, rationals and divisors.

Polynomials use ``+ - * ^`` and parentheses over integer literals and the
variables ``x1..xd`` (``x, y, z`` are accepted for d <= 3). Exponents must be
bare integer literals. Divisors are ``;``-separated ``t*div(f)`` terms with
``t`` an integer or ``a/b``; ``0`` or an empty string is the zero divisor.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from ..core.errors import CoefficientOverflowError, ParseError, UnknownVariableError
from ..core.settings import Settings, settings as default_settings
from ..models.divisor import DivisorSpec, DivisorTerm
from ..models.field import FieldConfig
from ..models.polynomial import Polynomial
from ..utils.rationals import parse_ratio

logger = logging.getLogger(__name__)

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_]\w*)|(?P<op>[-+*^()]))")
_DIVISOR_TERM = re.compile(
    r"^\s*(?:(?P<t>\d+(?:\s*/\s*\d+)?)\s*\*\s*)?div\s*\((?P<f>.*)\)\s*$",
    re.DOTALL,
)


@dataclass(frozen=True, slots=True)
class _Token:
    kind: str
    text: str
    position: int


def _tokenize(src: str) -> list[_Token]:
    tokens: list[_Token] = []
    position = 0
    while position < len(src):
        if src[position:].strip() == "":
            break
        match = _TOKEN.match(src, position)
        if match is None:
            offset = len(src) - len(src[position:].lstrip())
            raise ParseError(f"Unexpected character {src[offset]!r}", offset)
        kind = match.lastgroup or "op"
        tokens.append(_Token(kind, match.group(kind), match.start(kind)))
        position = match.end()
    tokens.append(_Token("end", "", len(src)))
    return tokens


class _PolynomialParser:
    def __init__(self, src: str, field: FieldConfig, settings: Settings) -> None:
        self.field = field
        self.settings = settings
        self.tokens = _tokenize(src)
        self.index = 0
        names = {f"x{i + 1}": i for i in range(field.d)}
        names.update({name: i for i, name in enumerate(field.variable_names)})
        self.variables = names

    @property
    def current(self) -> _Token:
        return self.tokens[self.index]

    def advance(self) -> _Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def expect(self, text: str) -> None:
        token = self.current
        if token.text != text:
            shown = token.text or "end of input"
            raise ParseError(f"Expected {text!r} but found {shown!r}", token.position)
        self.advance()

    def parse(self) -> Polynomial:
        result = self.expression()
        if self.current.kind != "end":
            raise ParseError(f"Unexpected {self.current.text!r}", self.current.position)
        return result

    def expression(self) -> Polynomial:
        result = self.term()
        while self.current.text in ("+", "-"):
            op = self.advance().text
            right = self.term()
            result = result + right if op == "+" else result - right
        return result

    def term(self) -> Polynomial:
        result = self.unary()
        while self.current.text == "*":
            self.advance()
            result = result * self.unary()
        return result

    def unary(self) -> Polynomial:
        if self.current.text == "-":
            self.advance()
            return -self.unary()
        if self.current.text == "+":
            self.advance()
            return self.unary()
        return self.power()

    def power(self) -> Polynomial:
        base = self.atom()
        if self.current.text == "^":
            self.advance()
            token = self.current
            if token.kind != "int":
                shown = token.text or "end of input"
                raise ParseError(f"Exponent must be an integer literal, found {shown!r}", token.position)
            self.advance()
            return base.mul_pow(int(token.text))
        return base

    def atom(self) -> Polynomial:
        token = self.current
        if token.kind == "int":
            self.advance()
            value = int(token.text)
            if value.bit_length() > self.settings.max_literal_bits:
                raise CoefficientOverflowError(
                    f"Literal {token.text} exceeds {self.settings.max_literal_bits} bits",
                    token.position,
                )
            return Polynomial.constant(self.field, value)
        if token.kind == "name":
            self.advance()
            if token.text not in self.variables:
                raise UnknownVariableError(f"Unknown variable {token.text!r}", token.position)
            return Polynomial.variable(self.field, self.variables[token.text])
        if token.text == "(":
            self.advance()
            inner = self.expression()
            self.expect(")")
            return inner
        shown = token.text or "end of input"
        raise ParseError(f"Unexpected {shown!r}", token.position)


def parse_polynomial(
    src: str,
    field: FieldConfig,
    settings: Settings | None = None,
) -> Polynomial:
    """Parse ``src`` into a polynomial with coefficients reduced modulo p."""

    return _PolynomialParser(src, field, settings or default_settings).parse()


def parse_divisor(
    src: str,
    field: FieldConfig,
    settings: Settings | None = None,
) -> DivisorSpec:
    """Parse ``t1*div(f1); t2*div(f2); ...`` into a divisor."""

    if src.strip() in ("", "0"):
        return DivisorSpec.zero(field)
    terms: list[DivisorTerm] = []
    offset = 0
    for chunk in src.split(";"):
        match = _DIVISOR_TERM.match(chunk)
        if match is None:
            raise ParseError(f"Expected 't*div(f)' but found {chunk.strip()!r}", offset)
        try:
            t = parse_ratio(match.group("t").replace(" ", "")) if match.group("t") else Fraction(1)
        except ValueError as exc:
            raise ParseError(str(exc), offset + match.start("t")) from exc
        try:
            f = parse_polynomial(match.group("f"), field, settings)
        except ParseError as exc:
            position = None if exc.position is None else offset + match.start("f") + exc.position
            raise type(exc)(exc.message, position) from exc
        terms.append(DivisorTerm(f, t))
        offset += len(chunk) + 1
    logger.debug("Parsed divisor with %d terms", len(terms))
    return DivisorSpec(field, tuple(terms))


def parse_rational(src: str) -> Fraction:
    """Parse a rational literal ``a`` or ``a/b`` for command-line parameters."""

    try:
        return parse_ratio(src)
    except ValueError as exc:
        raise ParseError(str(exc), 0) from exc


def parse_generators(
    sources: Iterable[str],
    field: FieldConfig,
    settings: Settings | None = None,
) -> list[Polynomial]:
    """Parse each generator of an ideal; zero generators are dropped by the ideal."""

    return [parse_polynomial(src, field, settings) for src in sources]
