"""
Parsers for the two text grammars.

Holomorphic seeds:  ``term (('+'|'-') term)*`` with
``term = [coef '*'] 'z' ['^' int] | coef`` and ``coef = rational | rational*i | i``;
a named numeric seed such as ``1/(1+z^2)`` is looked up before parsing.

Polynomials:  terms like ``3/5*x1^2*y1*e12`` or ``-x2*e1`` over the variables
``x0`` (axial mode), ``x1..xp`` and ``y1..yq``.
"""

import re
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from ffh.clifford import Blade, Multivector
from ffh.errors import ParseError
from ffh.polyalg import BLOCK_X, BLOCK_Y, CartesianPoly, SphericalMonogenic, validate_spherical_monogenic
from ffh.transform import NUMERIC_SEEDS, HolomorphicInput

Token = Tuple[str, str, int]

_HOLOMORPHIC_TOKENS = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<z>z)|(?P<i>i)|(?P<op>[-+*^]))")
_POLY_TOKENS = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<var>[xy]\d+)|(?P<blade>e\d+)|(?P<op>[-+*^]))")


def _tokenize(text: str, pattern: re.Pattern) -> List[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        match = pattern.match(text, pos)
        if not match or match.end() == pos:
            offset = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[offset]!r}", text, offset)
        kind = match.lastgroup
        tokens.append((kind, match.group(kind), match.start(kind)))
        pos = match.end()
    return tokens


class _Cursor:
    def __init__(self, text: str, tokens: List[Token]):
        self.text = text
        self.tokens = tokens
        self.i = 0

    def peek(self) -> Optional[Token]:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self) -> Token:
        token = self.peek()
        if token is None:
            raise ParseError("unexpected end of input", self.text, len(self.text))
        self.i += 1
        return token

    def accept(self, value: str) -> bool:
        token = self.peek()
        if token is not None and token[0] == "op" and token[1] == value:
            self.i += 1
            return True
        return False

    def error(self, message: str) -> ParseError:
        token = self.peek()
        return ParseError(message, self.text, token[2] if token else len(self.text))

    def leading_sign(self) -> int:
        if self.accept("-"):
            return -1
        self.accept("+")
        return 1

    def exponent(self) -> int:
        token = self.peek()
        if token is not None and token[0] == "op" and token[1] == "-":
            raise ParseError("negative exponent", self.text, token[2])
        kind, value, pos = self.take()
        if kind != "num" or "/" in value:
            raise ParseError("exponent must be a non-negative integer", self.text, pos)
        return int(value)

    def rational(self, value: str, pos: int) -> Fraction:
        _, _, denominator = value.partition("/")
        if denominator and int(denominator) == 0:
            raise ParseError("zero denominator", self.text, pos + value.index("/") + 1)
        return Fraction(value)


def parse_holomorphic(text: str) -> HolomorphicInput:
    compact = "".join(text.split())
    if compact in NUMERIC_SEEDS:
        return NUMERIC_SEEDS[compact]
    tokens = _tokenize(text, _HOLOMORPHIC_TOKENS)
    if not tokens:
        raise ParseError("empty seed", text, 0)
    cur = _Cursor(text, tokens)
    coefficients: Dict[int, Tuple[Fraction, Fraction]] = {}
    sign = cur.leading_sign()
    while True:
        power, (re_part, im_part) = _holomorphic_term(cur)
        old = coefficients.get(power, (Fraction(0), Fraction(0)))
        coefficients[power] = (old[0] + sign * re_part, old[1] + sign * im_part)
        if cur.peek() is None:
            break
        if cur.accept("+"):
            sign = 1
        elif cur.accept("-"):
            sign = -1
        else:
            raise cur.error("expected '+' or '-'")
    return HolomorphicInput.exact(coefficients)


def _holomorphic_term(cur: _Cursor) -> Tuple[int, Tuple[Fraction, Fraction]]:
    rational: Optional[Fraction] = None
    imaginary = False
    power: Optional[int] = None
    while True:
        kind, value, pos = cur.take()
        if kind == "num" and rational is None and not imaginary and power is None:
            rational = cur.rational(value, pos)
        elif kind == "i" and not imaginary and power is None:
            imaginary = True
        elif kind == "z" and power is None:
            power = cur.exponent() if cur.accept("^") else 1
        else:
            raise ParseError(f"unexpected {value!r}", cur.text, pos)
        if not cur.accept("*"):
            break
    c = Fraction(1) if rational is None else rational
    return (power or 0), ((Fraction(0), c) if imaginary else (c, Fraction(0)))


def parse_poly(text: str, p: int, q: int, axis: bool = False) -> CartesianPoly:
    """Polynomial over x0? x1..xp y1..yq with blades in R_{0,p+q}."""
    shell = CartesianPoly.zero(p, q, axis)
    tokens = _tokenize(text, _POLY_TOKENS)
    if not tokens:
        raise ParseError("empty polynomial", text, 0)
    cur = _Cursor(text, tokens)
    total = shell
    sign = cur.leading_sign()
    while True:
        total = total + _poly_term(cur, shell) * sign
        if cur.peek() is None:
            break
        if cur.accept("+"):
            sign = 1
        elif cur.accept("-"):
            sign = -1
        else:
            raise cur.error("expected '+' or '-'")
    return total


def _poly_term(cur: _Cursor, shell: CartesianPoly) -> CartesianPoly:
    exps = [0] * shell.nvars
    coef = Multivector.scalar(shell.dim, 1)
    while True:
        kind, value, pos = cur.take()
        if kind == "num":
            coef = coef.scale(cur.rational(value, pos))
        elif kind == "var":
            exps[shell.index_of(value)] += cur.exponent() if cur.accept("^") else 1
        elif kind == "blade":
            indices = tuple(int(d) for d in value[1:])
            coef = coef * Multivector.basis(shell.dim, Blade(indices))
        else:
            raise ParseError(f"unexpected {value!r}", cur.text, pos)
        if not cur.accept("*"):
            break
    return CartesianPoly(shell.p, shell.q, {tuple(exps): coef}, axis=shell.axis)


def parse_monogenic(text: str, block: str, dim: int, k: int) -> SphericalMonogenic:
    """Block-local monogenic: ``x1 - x2*e12`` for the x-block, ``y1 - y2*e12`` for the y-block."""
    if block == BLOCK_X:
        poly = parse_poly(text, dim, 0)
    elif block == BLOCK_Y:
        poly = parse_poly(text, 0, dim)
    else:
        raise ValueError(f"unknown block {block!r}")
    return validate_spherical_monogenic(poly, block, k)
