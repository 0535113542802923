"""Text grammar: parsing and printing of series and hyperreal values.

The surface syntax is deliberately shell-friendly.  A series is written
``sum(i=<int>..omega, <body>)`` where the body is ordinary arithmetic over
integer literals and the index ``i``; a value uses the symbol ``w`` for the
infinite unit, as in ``w^2/2 + w/2`` or ``2 - 2*(1/2)^w``.

Grammar (EBNF)::

    series     = "sum" "(" "i" "=" integer ".." "omega" "," expression ")" ;
    expression = term { ("+" | "-") term } ;
    term       = unary { ("*" | "/") unary } ;
    unary      = ("+" | "-") unary | power ;
    power      = atom [ "^" unary ] ;              (* right associative *)
    atom       = integer | "i" | "w" | "(" expression ")" ;
    integer    = [ "-" ] digit { digit } ;

Restrictions beyond the grammar: division only by nonzero rational
constants; exponents must be integer constants, except that a rational
constant base may carry ``i``, ``i+<int>`` or ``i-<int>`` (series bodies)
or ``w`` (values, positive base only).  Parsing normalizes eagerly, so
callers receive :class:`~omegasum.series.SeriesExpr` and
:class:`~omegasum.hyperreal.Hyperreal` values, never syntax trees.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .errors import (
    BadBounds,
    NonPositiveBase,
    ParseError,
    UnsupportedForm,
    UnsupportedOverride,
)
from .hyperreal import OMEGA, Hyperreal
from .series import SeriesAtom, SeriesExpr

__all__ = [
    "parse_series",
    "parse_hyperreal",
    "format_series",
    "format_hyperreal",
    "GRAMMAR",
    "SERIES_EXAMPLES",
    "VALUE_EXAMPLES",
]

GRAMMAR = """\
series     = "sum" "(" "i" "=" integer ".." "omega" "," expression ")" ;
expression = term { ("+" | "-") term } ;
term       = unary { ("*" | "/") unary } ;
unary      = ("+" | "-") unary | power ;
power      = atom [ "^" unary ] ;
atom       = integer | "i" | "w" | "(" expression ")" ;
integer    = digit { digit } ;
"""

SERIES_EXAMPLES = (
    "sum(i=1..omega, 1)",
    "sum(i=1..omega, i)",
    "sum(i=1..omega, 2*i - 1)",
    "sum(i=1..omega, 2^(i-1))",
    "sum(i=1..omega, (1/2)^(i-1))",
    "sum(i=1..omega, (-1)^(i+1))",
    "sum(i=1..omega, i*(((-1)^i + 1)/2))",
    "sum(i=1..omega, i*(-1)^(i-1))",
    "sum(i=1..omega, (i - 1)*(-1)^i)",
    "sum(i=1..omega, ((-1)^(i+1) + 1)/2)",
    "sum(i=1..omega, ((-1)^i + 1)/2)",
    "sum(i=0..omega, 1)",
)

VALUE_EXAMPLES = (
    "0",
    "w",
    "w + 1",
    "w^2/2 + w/2",
    "2^w - 1",
    "2 - 2*(1/2)^w",
    "1/4",
    "-1/2",
    "w/2 + 1/4",
    "w^-1",
    "3/2*w^2",
)

_MAX_INT_DIGITS = 4000
_MAX_EXPONENT = 9999
_MAX_EXPANSION = 20000

_F0 = Fraction(0)
_F1 = Fraction(1)


# -- tokens ---------------------------------------------------------------


@dataclass(frozen=True)
class _Token:
    kind: str  # "int", "name", "op", "dots", "end"
    text: str
    pos: int


_OP_CHARS = set("+-*/^()=,")


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch in " \t\r\n":
            i += 1
            continue
        if ch == "." and text[i : i + 2] == "..":
            tokens.append(_Token("dots", "..", i))
            i += 2
            continue
        if ch in _OP_CHARS:
            tokens.append(_Token("op", ch, i))
            i += 1
            continue
        if "0" <= ch <= "9":
            j = i
            while j < n and "0" <= text[j] <= "9":
                j += 1
            if j - i > _MAX_INT_DIGITS:
                raise ParseError("integer literal too long", i)
            tokens.append(_Token("int", text[i:j], i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(_Token("name", text[i:j], i))
            i = j
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(_Token("end", "", n))
    return tokens


# -- syntax tree ----------------------------------------------------------


@dataclass(frozen=True)
class _Num:
    value: Fraction
    pos: int


@dataclass(frozen=True)
class _Name:
    ident: str
    pos: int


@dataclass(frozen=True)
class _Unary:
    op: str
    operand: object
    pos: int


@dataclass(frozen=True)
class _Bin:
    op: str
    left: object
    right: object
    pos: int


class _Parser:
    def __init__(self, tokens: list[_Token]):
        self._tokens = tokens
        self._idx = 0

    def peek(self) -> _Token:
        return self._tokens[self._idx]

    def advance(self) -> _Token:
        tok = self._tokens[self._idx]
        if tok.kind != "end":
            self._idx += 1
        return tok

    def expect_op(self, text: str) -> _Token:
        tok = self.advance()
        if tok.kind != "op" or tok.text != text:
            raise ParseError(f"expected {text!r}", tok.pos)
        return tok

    def expression(self):
        node = self.term()
        while self.peek().kind == "op" and self.peek().text in "+-":
            tok = self.advance()
            node = _Bin(tok.text, node, self.term(), tok.pos)
        return node

    def term(self):
        node = self.unary()
        while self.peek().kind == "op" and self.peek().text in "*/":
            tok = self.advance()
            node = _Bin(tok.text, node, self.unary(), tok.pos)
        return node

    def unary(self):
        tok = self.peek()
        if tok.kind == "op" and tok.text in "+-":
            self.advance()
            return _Unary(tok.text, self.unary(), tok.pos)
        return self.power()

    def power(self):
        node = self.atom()
        tok = self.peek()
        if tok.kind == "op" and tok.text == "^":
            self.advance()
            return _Bin("^", node, self.unary(), tok.pos)
        return node

    def atom(self):
        tok = self.advance()
        if tok.kind == "int":
            return _Num(Fraction(int(tok.text)), tok.pos)
        if tok.kind == "name":
            return _Name(tok.text, tok.pos)
        if tok.kind == "op" and tok.text == "(":
            node = self.expression()
            self.expect_op(")")
            return node
        if tok.kind == "end":
            raise ParseError("unexpected end of input", tok.pos)
        raise ParseError(f"expected a value, found {tok.text!r}", tok.pos)


# -- shared evaluator helpers ----------------------------------------------


def _contains(node, ident: str) -> bool:
    if isinstance(node, _Name):
        return node.ident == ident
    if isinstance(node, _Unary):
        return _contains(node.operand, ident)
    if isinstance(node, _Bin):
        return _contains(node.left, ident) or _contains(node.right, ident)
    return False


def _int_exponent(value: Fraction, pos: int) -> int:
    if value.denominator != 1:
        raise UnsupportedForm("exponents must be integers", pos)
    k = value.numerator
    if abs(k) > _MAX_EXPONENT:
        raise UnsupportedForm(f"exponent magnitude exceeds {_MAX_EXPONENT}", pos)
    return k


def _index_offset(node, index: str) -> Optional[int]:
    """Match an exponent of shape i, i+k, k+i or i-k; return k, else None."""
    if isinstance(node, _Name) and node.ident == index:
        return 0
    if isinstance(node, _Bin) and node.op in "+-":
        left_has = _contains(node.left, index)
        right_has = _contains(node.right, index)
        if left_has == right_has:
            return None
        if left_has:
            if not (isinstance(node.left, _Name) and node.left.ident == index):
                return None
            const = _constant_int(node.right)
            if const is None:
                return None
            return const if node.op == "+" else -const
        if node.op == "+":
            if not (isinstance(node.right, _Name) and node.right.ident == index):
                return None
            const = _constant_int(node.left)
            return const
    return None


def _constant_int(node) -> Optional[int]:
    if isinstance(node, _Num):
        return node.value.numerator if node.value.denominator == 1 else None
    if isinstance(node, _Unary):
        inner = _constant_int(node.operand)
        if inner is None:
            return None
        return inner if node.op == "+" else -inner
    return None


# -- series bodies ----------------------------------------------------------

_AtomMap = "dict[tuple[int, Fraction], Fraction]"


def _map_constant(atoms: dict) -> Optional[Fraction]:
    if not atoms:
        return _F0
    if len(atoms) == 1 and (0, _F1) in atoms:
        return atoms[(0, _F1)]
    return None


def _map_mul(a: dict, b: dict, pos: int) -> dict:
    out: dict[tuple[int, Fraction], Fraction] = {}
    for (p1, r1), c1 in a.items():
        for (p2, r2), c2 in b.items():
            key = (p1 + p2, r1 * r2)
            out[key] = out.get(key, _F0) + c1 * c2
    out = {k: c for k, c in out.items() if c != 0}
    if len(out) > _MAX_EXPANSION:
        raise UnsupportedForm("series term expansion too large", pos)
    return out


def _series_value(node) -> dict:
    if isinstance(node, _Num):
        return {(0, _F1): node.value} if node.value != 0 else {}
    if isinstance(node, _Name):
        if node.ident == "i":
            return {(1, _F1): _F1}
        if node.ident in ("omega", "w"):
            raise UnsupportedForm(
                f"{node.ident!r} is only valid as the summation bound", node.pos
            )
        raise ParseError(f"unknown symbol {node.ident!r}", node.pos)
    if isinstance(node, _Unary):
        inner = _series_value(node.operand)
        if node.op == "+":
            return inner
        return {k: -c for k, c in inner.items()}
    if isinstance(node, _Bin):
        if node.op == "+" or node.op == "-":
            left = _series_value(node.left)
            right = _series_value(node.right)
            out = dict(left)
            for k, c in right.items():
                merged = out.get(k, _F0) + (c if node.op == "+" else -c)
                if merged == 0:
                    out.pop(k, None)
                else:
                    out[k] = merged
            return out
        if node.op == "*":
            return _map_mul(_series_value(node.left), _series_value(node.right), node.pos)
        if node.op == "/":
            divisor = _map_constant(_series_value(node.right))
            if divisor is None:
                raise UnsupportedForm(
                    "division only by nonzero rational constants", node.pos
                )
            if divisor == 0:
                raise ParseError("division by zero", node.pos)
            left = _series_value(node.left)
            return {k: c / divisor for k, c in left.items()}
        if node.op == "^":
            return _series_pow(node)
    raise ParseError("unsupported expression", getattr(node, "pos", 0))


def _series_pow(node: _Bin) -> dict:
    exponent = node.right
    if _contains(exponent, "i"):
        offset = _index_offset(exponent, "i")
        if offset is None:
            raise UnsupportedForm(
                "index exponents must look like i, i+<int> or i-<int>",
                getattr(exponent, "pos", node.pos),
            )
        base = _map_constant(_series_value(node.left))
        if base is None:
            raise UnsupportedForm(
                "an exponent containing 'i' needs a rational constant base", node.pos
            )
        if base == 0:
            raise UnsupportedForm(
                "zero cannot be raised to an index-dependent exponent", node.pos
            )
        if abs(offset) > _MAX_EXPONENT:
            raise UnsupportedForm(f"exponent offset exceeds {_MAX_EXPONENT}", node.pos)
        return {(0, base): base**offset}
    exp_const = _map_constant(_series_value(exponent))
    if exp_const is None:
        raise UnsupportedForm("exponents must be integer constants", node.pos)
    k = _int_exponent(exp_const, node.pos)
    base_map = _series_value(node.left)
    if k < 0:
        base = _map_constant(base_map)
        if base is None:
            raise UnsupportedForm(
                "negative exponents only apply to rational constants", node.pos
            )
        if base == 0:
            raise ParseError("division by zero", node.pos)
        return {(0, _F1): base**k}
    out = {(0, _F1): _F1}
    for _ in range(k):
        out = _map_mul(out, base_map, node.pos)
    return out


def parse_series(text: str) -> SeriesExpr:
    """Parse ``sum(i=<int>..omega, <body>)`` into a normalized series."""
    parser = _Parser(_tokenize(text))
    head = parser.advance()
    if head.kind != "name" or head.text != "sum":
        raise ParseError("a series starts with 'sum('", head.pos)
    parser.expect_op("(")
    var = parser.advance()
    if var.kind != "name" or var.text != "i":
        raise ParseError("the index variable must be 'i'", var.pos)
    parser.expect_op("=")
    sign = 1
    tok = parser.peek()
    if tok.kind == "op" and tok.text in "+-":
        parser.advance()
        sign = -1 if tok.text == "-" else 1
    low = parser.advance()
    if low.kind != "int":
        raise BadBounds("the lower bound must be an integer literal", low.pos)
    start = sign * int(low.text)
    dots = parser.advance()
    if dots.kind != "dots":
        raise BadBounds("expected '..' between the bounds", dots.pos)
    high = parser.advance()
    if high.kind != "name" or high.text != "omega":
        raise BadBounds("the upper bound must be 'omega'", high.pos)
    parser.expect_op(",")
    body = parser.expression()
    parser.expect_op(")")
    trailing = parser.advance()
    if trailing.kind != "end":
        raise ParseError("unexpected text after the series", trailing.pos)
    atoms = _series_value(body)
    return SeriesExpr(
        [SeriesAtom(c, power, ratio) for (power, ratio), c in atoms.items()],
        start=start,
    )


# -- hyperreal values ---------------------------------------------------------


def _hyper_value(node) -> Hyperreal:
    if isinstance(node, _Num):
        return Hyperreal.from_rational(node.value)
    if isinstance(node, _Name):
        if node.ident == "w":
            return OMEGA
        if node.ident in ("omega", "i"):
            raise ParseError(
                f"{node.ident!r} does not appear in values; use 'w'", node.pos
            )
        raise ParseError(f"unknown symbol {node.ident!r}", node.pos)
    if isinstance(node, _Unary):
        inner = _hyper_value(node.operand)
        return inner if node.op == "+" else -inner
    if isinstance(node, _Bin):
        if node.op in "+-":
            left = _hyper_value(node.left)
            right = _hyper_value(node.right)
            return left + right if node.op == "+" else left - right
        if node.op == "*":
            product = _hyper_value(node.left) * _hyper_value(node.right)
            if len(product.terms) > _MAX_EXPANSION:
                raise UnsupportedForm("value expansion too large", node.pos)
            return product
        if node.op == "/":
            divisor = _hyper_value(node.right).rational_value()
            if divisor is None:
                raise UnsupportedForm(
                    "division only by nonzero rational constants", node.pos
                )
            if divisor == 0:
                raise ParseError("division by zero", node.pos)
            return _hyper_value(node.left) / divisor
        if node.op == "^":
            return _hyper_pow(node)
    raise ParseError("unsupported expression", getattr(node, "pos", 0))


def _hyper_pow(node: _Bin) -> Hyperreal:
    exponent = node.right
    if isinstance(exponent, _Name) and exponent.ident == "w":
        base = _hyper_value(node.left).rational_value()
        if base is None:
            raise UnsupportedForm("the base of ^w must be a rational constant", node.pos)
        if base <= 0:
            raise NonPositiveBase("the base of ^w must be positive", node.pos)
        return Hyperreal.term(1, 0, base)
    if _contains(exponent, "w"):
        raise UnsupportedForm("exponents may be integers or the bare symbol 'w'", node.pos)
    exp_value = _hyper_value(exponent).rational_value()
    if exp_value is None:
        raise UnsupportedForm("exponents must be integer constants", node.pos)
    k = _int_exponent(exp_value, node.pos)
    base = _hyper_value(node.left)
    if k < 0:
        if base.is_zero():
            raise ParseError("division by zero", node.pos)
        if base.rational_value() is None and len(base.terms) != 1:
            raise UnsupportedForm(
                "negative exponents only apply to constants or single terms", node.pos
            )
        inverted = base.monomial_inverse()
        return _bounded_pow(inverted, -k, node.pos)
    return _bounded_pow(base, k, node.pos)


def _bounded_pow(base: Hyperreal, k: int, pos: int) -> Hyperreal:
    out = Hyperreal.from_rational(1)
    for _ in range(k):
        out = out * base
        if len(out.terms) > _MAX_EXPANSION:
            raise UnsupportedForm("value expansion too large", pos)
    return out


def parse_hyperreal(text: str) -> Hyperreal:
    """Parse a value expression over 'w' into a canonical hyperreal."""
    parser = _Parser(_tokenize(text))
    node = parser.expression()
    trailing = parser.advance()
    if trailing.kind != "end":
        raise ParseError("unexpected text after the value", trailing.pos)
    return _hyper_value(node)


# -- printing -----------------------------------------------------------------


def format_hyperreal(value: Hyperreal) -> str:
    """Canonical text of a value, terms in descending dominance order."""
    return str(value)


def format_series(series: SeriesExpr) -> str:
    """Canonical text of a series; overrides have no textual form."""
    if series.overrides:
        raise UnsupportedOverride(
            "series with index overrides cannot be written in the text grammar"
        )
    return str(series)
