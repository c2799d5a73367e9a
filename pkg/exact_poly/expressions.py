"""
Text formats for polynomials: the plain grammar (parse and print), LaTeX and JSON.

Plain grammar:

    expr   := term (('+' | '-') term)*
    term   := unary ('*' unary)*
    unary  := ('-' | '+') unary | power
    power  := atom ('^' INTEGER)?
    atom   := INTEGER ('/' INTEGER)? | VARIABLE | '(' expr ')'

Variables are a0..a9 (a{12} for larger indices) for the series a, b, c, d, and
x, X, Y. Whitespace, newlines included, is ignored.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional

from error_handling import (
    ExpressionSyntaxError,
    IndexOutOfRangeError,
    UnknownVariableError,
)

from .polynomial import Monomial, Polynomial
from .rational import format_rational, parse_rational
from .variables import Variable, variable_from_name

__all__ = ["parse_polynomial", "format_polynomial", "polynomial_to_json", "polynomial_from_json", "FORMATS"]

FORMATS = ("plain", "latex", "json")

_TOKEN = re.compile(
    r"(?P<ws>\s+)"
    r"|(?P<number>\d+)"
    r"|(?P<name>[A-Za-z_][A-Za-z_0-9]*(?:\{\d+\})?)"
    r"|(?P<op>[-+*/^()])"
)


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    line: int
    column: int


def _tokenize(text: str) -> List[_Token]:
    tokens: List[_Token] = []
    line, line_start, position = 1, 0, 0
    while position < len(text):
        match = _TOKEN.match(text, position)
        if not match:
            raise ExpressionSyntaxError(
                f"unexpected character {text[position]!r}", line, position - line_start + 1
            )
        kind = match.lastgroup
        value = match.group()
        if kind == "ws":
            for offset, char in enumerate(value):
                if char == "\n":
                    line += 1
                    line_start = position + offset + 1
        else:
            tokens.append(_Token(kind, value, line, position - line_start + 1))
        position = match.end()
    tokens.append(_Token("end", "", line, position - line_start + 1))
    return tokens


class _Parser:
    def __init__(self, text: str, max_index: Optional[int]):
        self.tokens = _tokenize(text)
        self.position = 0
        self.max_index = max_index

    @property
    def current(self) -> _Token:
        return self.tokens[self.position]

    def advance(self) -> _Token:
        token = self.current
        self.position += 1
        return token

    def expect(self, text: str) -> _Token:
        token = self.current
        if token.text != text:
            found = token.text or "end of input"
            raise ExpressionSyntaxError(f"expected '{text}' but found '{found}'", token.line, token.column)
        return self.advance()

    def fail(self, message: str) -> None:
        token = self.current
        found = token.text or "end of input"
        raise ExpressionSyntaxError(f"{message}, found '{found}'", token.line, token.column)

    def parse(self) -> Polynomial:
        if self.current.kind == "end":
            self.fail("empty expression")
        result = self.expr()
        if self.current.kind != "end":
            self.fail("unexpected token after expression")
        return result

    def expr(self) -> Polynomial:
        result = self.term()
        while self.current.text in ("+", "-"):
            operator = self.advance().text
            right = self.term()
            result = result + right if operator == "+" else result - right
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
            if token.kind != "number":
                self.fail("exponent must be a non-negative integer")
            self.advance()
            return base ** int(token.text)
        return base

    def atom(self) -> Polynomial:
        token = self.current
        if token.kind == "number":
            self.advance()
            if self.current.text == "/":
                self.advance()
                denominator = self.current
                if denominator.kind != "number":
                    self.fail("a rational literal needs an integer denominator")
                self.advance()
                if int(denominator.text) == 0:
                    raise ExpressionSyntaxError("zero denominator", denominator.line, denominator.column)
                return Polynomial.constant(parse_rational(f"{token.text}/{denominator.text}"))
            return Polynomial.constant(int(token.text))
        if token.kind == "name":
            self.advance()
            return Polynomial.var(self._resolve(token))
        if token.text == "(":
            self.advance()
            inner = self.expr()
            self.expect(")")
            return inner
        self.fail("expected a number, a variable or '('")

    def _resolve(self, token: _Token) -> Variable:
        try:
            variable = variable_from_name(token.text)
        except KeyError:
            hint = ""
            if re.match(r"^[abcd]\d{2,}$", token.text):
                hint = f"indices above 9 are written {token.text[0]}{{{token.text[1:]}}}"
            raise UnknownVariableError(token.text, token.line, token.column, hint=hint) from None
        if variable.is_series and self.max_index is not None and variable.index > self.max_index:
            raise IndexOutOfRangeError(token.text, variable.index, self.max_index)
        return variable


def parse_polynomial(text: str, max_index: Optional[int] = None) -> Polynomial:
    """Parse the plain grammar into a canonical polynomial.

    Args:
        text: Expression text, possibly spanning lines
        max_index: Largest coefficient index allowed (the form order), or None

    Returns:
        The parsed polynomial
    """
    return _Parser(text, max_index).parse()


def _plain_monomial(monomial: Monomial) -> str:
    return "*".join(v.name if e == 1 else f"{v.name}^{e}" for v, e in monomial)


def _latex_monomial(monomial: Monomial) -> str:
    return " ".join(v.latex if e == 1 else f"{v.latex}^{{{e}}}" for v, e in monomial)


def _latex_rational(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"\\frac{{{value.numerator}}}{{{value.denominator}}}"


def _join(pieces: List[tuple]) -> str:
    text = ""
    for index, (negative, body) in enumerate(pieces):
        if index == 0:
            text = f"-{body}" if negative else body
        else:
            text += f" - {body}" if negative else f" + {body}"
    return text


def _format_plain(poly: Polynomial) -> str:
    pieces = []
    for monomial, coefficient in poly.sorted_terms():
        magnitude = abs(coefficient)
        if not monomial:
            body = format_rational(magnitude)
        elif magnitude == 1:
            body = _plain_monomial(monomial)
        else:
            body = f"{format_rational(magnitude)}*{_plain_monomial(monomial)}"
        pieces.append((coefficient < 0, body))
    return _join(pieces) or "0"


def _format_latex(poly: Polynomial) -> str:
    pieces = []
    for monomial, coefficient in poly.sorted_terms():
        magnitude = abs(coefficient)
        if not monomial:
            body = _latex_rational(magnitude)
        elif magnitude == 1:
            body = _latex_monomial(monomial)
        else:
            body = f"{_latex_rational(magnitude)} {_latex_monomial(monomial)}"
        pieces.append((coefficient < 0, body))
    return _join(pieces) or "0"


def polynomial_to_json(poly: Polynomial) -> Dict[str, Any]:
    return {
        "terms": [
            {"coeff": format_rational(coefficient), "powers": {v.name: e for v, e in monomial}}
            for monomial, coefficient in poly.sorted_terms()
        ]
    }


def polynomial_from_json(data: Dict[str, Any]) -> Polynomial:
    terms = {}
    for entry in data.get("terms", []):
        monomial = tuple(sorted((variable_from_name(name), int(e)) for name, e in entry["powers"].items()))
        terms[monomial] = parse_rational(entry["coeff"])
    return Polynomial(terms)


def format_polynomial(poly: Polynomial, style: str = "plain") -> str:
    """Render a polynomial as plain text, LaTeX or JSON, terms in lex-descending order."""
    if style == "plain":
        return _format_plain(poly)
    if style == "latex":
        return _format_latex(poly)
    if style == "json":
        return json.dumps(polynomial_to_json(poly))
    raise ValueError(f"unknown format {style!r}; expected one of {', '.join(FORMATS)}")
