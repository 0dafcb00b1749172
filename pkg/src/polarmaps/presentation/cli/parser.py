"""
Recursive-descent parser for the polynomial text grammar.

    expr   := term (("+" | "-") term)*
    term   := unary ("*" unary)*
    unary  := ("+" | "-") unary | power
    power  := atom ("^" INTEGER)?
    atom   := NUMBER | VARIABLE | "(" expr ")"
    NUMBER := digits ("/" digits)?
    VARIABLE := "x" digits

Whitespace is insignificant and multiplication is always explicit. Error
positions are byte offsets into the UTF-8 encoded input.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import StrEnum
from fractions import Fraction

from src.polarmaps.algebra.polycore import Poly
from src.polarmaps.errors import ParseError

_TOKEN = re.compile(
    r"(?P<space>\s+)|(?P<number>\d+(?:\s*/\s*\d+)?)|(?P<variable>x\d+)|(?P<op>[-+*^()])"
)


class TokenKind(StrEnum):
    NUMBER = "number"
    VARIABLE = "variable"
    OP = "op"
    END = "end"


@dataclass(frozen=True, slots=True)
class Token:
    kind: TokenKind
    text: str
    offset: int


def _byte_offset(text: str, index: int) -> int:
    return len(text[:index].encode())


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    index = 0
    while index < len(text):
        match = _TOKEN.match(text, index)
        if match is None:
            offset = _byte_offset(text, index)
            if text[index] == "x":
                raise ParseError("variable name needs an index, as in x0", offset)
            raise ParseError(f"unexpected character {text[index]!r}", offset)
        kind = match.lastgroup
        if kind != "space":
            tokens.append(Token(TokenKind(kind), match.group(), _byte_offset(text, index)))
        index = match.end()
    tokens.append(Token(TokenKind.END, "", _byte_offset(text, len(text))))
    return tokens


class _Parser:
    def __init__(self, tokens: list[Token], num_vars: int) -> None:
        self.tokens = tokens
        self.position = 0
        self.num_vars = num_vars

    @property
    def current(self) -> Token:
        return self.tokens[self.position]

    def _advance(self) -> Token:
        token = self.current
        self.position += 1
        return token

    def _at(self, op: str) -> bool:
        return self.current.kind == TokenKind.OP and self.current.text == op

    def _expect(self, op: str) -> None:
        if not self._at(op):
            raise ParseError(f"expected {op!r}, found {self._describe(self.current)}", self.current.offset)
        self._advance()

    @staticmethod
    def _describe(token: Token) -> str:
        return "end of input" if token.kind == TokenKind.END else repr(token.text)

    def parse(self) -> Poly:
        result = self.expr()
        if self.current.kind != TokenKind.END:
            token = self.current
            if token.kind in {TokenKind.NUMBER, TokenKind.VARIABLE} or self._at("("):
                raise ParseError(f"expected an operator before {token.text!r} (use '*')", token.offset)
            raise ParseError(f"unexpected {self._describe(token)}", token.offset)
        return result

    def expr(self) -> Poly:
        result = self.term()
        while self._at("+") or self._at("-"):
            sign = self._advance().text
            rhs = self.term()
            result = result + rhs if sign == "+" else result - rhs
        return result

    def term(self) -> Poly:
        result = self.unary()
        while self._at("*"):
            self._advance()
            result = result * self.unary()
        return result

    def unary(self) -> Poly:
        if self._at("-"):
            self._advance()
            return -self.unary()
        if self._at("+"):
            self._advance()
            return self.unary()
        return self.power()

    def power(self) -> Poly:
        base = self.atom()
        if self._at("^"):
            self._advance()
            token = self.current
            if token.kind != TokenKind.NUMBER or "/" in token.text:
                raise ParseError("exponent must be a non-negative integer", token.offset)
            self._advance()
            return base ** int(token.text)
        return base

    def atom(self) -> Poly:
        token = self.current
        match token.kind:
            case TokenKind.NUMBER:
                self._advance()
                numerator, _, denominator = token.text.partition("/")
                if denominator and not int(denominator):
                    raise ParseError("division by zero in a rational literal", token.offset)
                value = Fraction(int(numerator), int(denominator or 1))
                return Poly.constant(value, self.num_vars)
            case TokenKind.VARIABLE:
                self._advance()
                index = int(token.text[1:])
                if index >= self.num_vars:
                    raise ParseError(
                        f"variable {token.text} outside x0..x{self.num_vars - 1}",
                        token.offset,
                        num_vars=self.num_vars,
                    )
                return Poly.variable(index, self.num_vars)
            case TokenKind.OP if token.text == "(":
                self._advance()
                inner = self.expr()
                self._expect(")")
                return inner
        raise ParseError(f"expected a number, variable or '(', found {self._describe(token)}", token.offset)


def parse_poly(text: str, num_vars: int | None = None) -> Poly:
    """
    Parse polynomial text into a Poly with `num_vars` variables.

    Without `num_vars` the ring is x0 .. x(m), m the highest index used.

    Raises:
        ParseError: Syntax error, or a variable index outside the ring.
    """
    tokens = tokenize(text)
    if len(tokens) == 1:
        raise ParseError("empty polynomial", 0)
    if num_vars is None:
        indices = [int(t.text[1:]) for t in tokens if t.kind == TokenKind.VARIABLE]
        num_vars = max(indices, default=0) + 1
    if num_vars < 1:
        raise ParseError("the ring needs at least one variable", 0, num_vars=num_vars)
    return _Parser(tokens, num_vars).parse()
