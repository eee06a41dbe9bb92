"""
Recursive-descent parser for the polynomial text grammar::

    poly    := ['-'] term (('+' | '-') term)*
    term    := coeff ('*'? factor)* | factor ('*' factor)*
    factor  := ('x1' | 'x2' | 'x3') ('^' uint)?
    coeff   := uint | uint '/' uint        (rationals only over QQ)

Whitespace is insignificant. Errors carry the zero-based column.
"""

import re
from dataclasses import dataclass

from qinv.algebra.coeff_ring import CoefficientRing, Scalar
from qinv.algebra.mpoly import Polynomial
from qinv.core.exceptions import PolynomialParseError

_TOKEN = re.compile(r"(?P<num>\d+)|(?P<var>x[123])|(?P<op>[-+*/^])")


@dataclass(frozen=True, slots=True)
class Token:
    kind: str
    text: str
    position: int


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        match = _TOKEN.match(text, pos)
        if match is None:
            raise PolynomialParseError(f"unexpected character {text[pos]!r}", pos)
        kind = match.lastgroup or "op"
        tokens.append(Token(kind, match.group(), pos))
        pos = match.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, ring: CoefficientRing) -> None:
        self.tokens = tokenize(text)
        self.index = 0
        self.ring = ring

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def _advance(self) -> Token:
        token = self.current
        self.index += 1
        return token

    def _accept_op(self, symbol: str) -> bool:
        if self.current.kind == "op" and self.current.text == symbol:
            self.index += 1
            return True
        return False

    def _fail(self, expected: str) -> PolynomialParseError:
        token = self.current
        found = "end of input" if token.kind == "end" else repr(token.text)
        return PolynomialParseError(
            f"expected {expected}, found {found}", token.position
        )

    def parse(self) -> Polynomial:
        acc: dict[tuple[int, int, int], Scalar] = {}
        sign = -1 if self._accept_op("-") else 1
        self._term(sign, acc)
        while self.current.kind == "op" and self.current.text in "+-":
            sign = -1 if self._advance().text == "-" else 1
            self._term(sign, acc)
        if self.current.kind != "end":
            raise self._fail("'+', '-' or end of input")
        return Polynomial(self.ring, acc)

    def _term(self, sign: int, acc: dict[tuple[int, int, int], Scalar]) -> None:
        exps = [0, 0, 0]
        if self.current.kind == "num":
            coeff = self._coeff()
            while True:
                if self._accept_op("*"):
                    if self.current.kind != "var":
                        raise self._fail("a variable x1, x2 or x3")
                    self._factor(exps)
                elif self.current.kind == "var":
                    self._factor(exps)
                else:
                    break
        elif self.current.kind == "var":
            coeff = self.ring.one
            self._factor(exps)
            while self._accept_op("*"):
                if self.current.kind != "var":
                    raise self._fail("a variable x1, x2 or x3")
                self._factor(exps)
        else:
            raise self._fail("a coefficient or a variable")
        key = (exps[0], exps[1], exps[2])
        value = coeff if sign > 0 else -coeff
        acc[key] = acc.get(key, 0) + value

    def _coeff(self) -> Scalar:
        num = int(self._advance().text)
        if self._accept_op("/"):
            if self.current.kind != "num":
                raise self._fail("a denominator")
            den_token = self._advance()
            return self.ring.from_fraction(num, int(den_token.text))
        return self.ring.normalize(num)

    def _factor(self, exps: list[int]) -> None:
        var = self._advance()
        power = 1
        if self._accept_op("^"):
            if self.current.kind != "num":
                raise self._fail("an exponent")
            power = int(self._advance().text)
        exps[int(var.text[1]) - 1] += power


def parse_poly(text: str, ring: CoefficientRing) -> Polynomial:
    """
    Parse polynomial text over the given ring.

    Raises:
        PolynomialParseError: On a syntax error, with the column attached.
        CoefficientError: If a coefficient has no image in the ring.
    """
    return _Parser(text, ring).parse()
