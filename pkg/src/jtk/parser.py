"""Recursive-descent parser and printer for the expression language.

Grammar (precedence low to high)::

    sum     := product (('+' | '-') product)*
    product := unary (('*' | '/') unary)*
    unary   := '-' unary | power
    power   := atom ('^' unary)?
    atom    := NUMBER | NAME | FUNC '(' sum ')' | '(' sum ')'

``^`` binds tighter than unary minus, so ``-w^2`` is ``-(w^2)`` while
``T^-2`` is still accepted.  Positions in errors are 1-based.
"""
import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import DialectError, ParseError
from .expr import BinOp, Call, Neg, Num, Pow, SeriesApply, Sym, constant_value
from .series import ELEMENTARY_NAMES, WSeries, apply_elementary, power_rational, series_div

SURFACE_GENERATORS = {"J+": "Jp", "J-": "Jm", "J0": "J0", "T": "T", "Tinv": "Tinv",
                      "H": "H", "Y": "Y", "X": "X"}
PRINT_NAMES = {v: k for k, v in SURFACE_GENERATORS.items()}
DIALECTS = ("scalar", "matrix")

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<gen>J[+\-0])|(?P<name>[A-Za-z][A-Za-z0-9]*)|(?P<op>[-+*/^()]))")


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    pos: int


def tokenize(src):
    tokens, i = [], 0
    while True:
        while i < len(src) and src[i].isspace():
            i += 1
        if i >= len(src):
            tokens.append(Token("end", "", i + 1))
            return tokens
        m = _TOKEN.match(src, i)
        if not m:
            raise ParseError(f"unexpected character {src[i]!r}", i + 1)
        kind = m.lastgroup
        text = m.group(kind)
        tokens.append(Token(kind, text, m.start(kind) + 1))
        i = m.end()


@dataclass(frozen=True)
class ParsedExpr:
    node: object
    source: str
    dialect: str


class _Parser:
    def __init__(self, src, dialect):
        self.tokens = tokenize(src)
        self.i = 0
        self.dialect = dialect

    @property
    def tok(self):
        return self.tokens[self.i]

    def advance(self):
        t = self.tokens[self.i]
        self.i += 1
        return t

    def expect(self, text):
        if self.tok.text != text:
            self.fail(f"expected {text!r}")
        return self.advance()

    def fail(self, message):
        t = self.tok
        found = "end of input" if t.kind == "end" else repr(t.text)
        raise ParseError(f"{message}, found {found}", t.pos)

    def parse(self):
        node = self.sum()
        if self.tok.kind != "end":
            self.fail("unexpected token")
        return node

    def sum(self):
        left = self.product()
        while self.tok.text in ("+", "-") and self.tok.kind == "op":
            op = self.advance()
            right = self.product()
            left = BinOp(op.text, left, right, span=(left.span[0], right.span[1]))
        return left

    def product(self):
        left = self.unary()
        while self.tok.text in ("*", "/") and self.tok.kind == "op":
            op = self.advance()
            right = self.unary()
            left = BinOp(op.text, left, right, span=(left.span[0], right.span[1]))
        return left

    def unary(self):
        if self.tok.kind == "op" and self.tok.text == "-":
            start = self.advance().pos
            operand = self.unary()
            return Neg(operand, span=(start, operand.span[1]))
        return self.power()

    def power(self):
        base = self.atom()
        if self.tok.kind == "op" and self.tok.text == "^":
            self.advance()
            exponent = self.unary()
            return Pow(base, exponent, span=(base.span[0], exponent.span[1]))
        return base

    def atom(self):
        t = self.tok
        if t.kind == "num":
            self.advance()
            return Num(Fraction(int(t.text)), span=(t.pos, t.pos + len(t.text)))
        if t.kind == "gen":
            self.advance()
            return self._symbol(SURFACE_GENERATORS[t.text], t)
        if t.kind == "name":
            self.advance()
            if t.text in ELEMENTARY_NAMES:
                self.expect("(")
                arg = self.sum()
                close = self.expect(")")
                return Call(t.text, arg, span=(t.pos, close.pos + 1))
            if self.tok.text == "(":
                raise ParseError(f"unknown function {t.text!r}", t.pos)
            if t.text in SURFACE_GENERATORS:
                return self._symbol(SURFACE_GENERATORS[t.text], t)
            if t.text in ("h", "w"):
                return self._symbol(t.text, t)
            raise ParseError(f"unknown symbol {t.text!r}", t.pos)
        if t.kind == "op" and t.text == "(":
            self.advance()
            inner = self.sum()
            self.expect(")")
            return inner
        self.fail("expected an operand")

    def _symbol(self, name, t):
        span = (t.pos, t.pos + len(t.text))
        if self.dialect == "scalar" and name != "w":
            raise DialectError(f"symbol {t.text!r} is not allowed in a scalar series expression", t.pos)
        if self.dialect == "matrix" and name == "w":
            raise DialectError("the series variable 'w' is not allowed in a matrix expression", t.pos)
        return Sym(name, span=span)


def parse_expression(src, dialect="matrix"):
    """Parse ``src`` into an expression tree (returned as the bare node)."""
    return parse(src, dialect).node


def parse(src, dialect="matrix"):
    if dialect not in DIALECTS:
        raise ValueError(f"unknown dialect {dialect!r}")
    return ParsedExpr(_Parser(src, dialect).parse(), src, dialect)


# printer

_SUM, _PRODUCT, _UNARY, _POWER, _ATOM = range(5)


def _is_rational_literal(node):
    return (isinstance(node, BinOp) and node.op == "/"
            and isinstance(node.left, Num) and isinstance(node.right, Num))


def _level(node):
    if isinstance(node, BinOp):
        return _SUM if node.op in "+-" else _PRODUCT
    if isinstance(node, Neg):
        return _UNARY
    if isinstance(node, Pow):
        return _POWER
    if isinstance(node, Num) and (node.value.denominator != 1 or node.value < 0):
        return _PRODUCT
    return _ATOM


def to_text(node):
    """Canonical text; ``parse(to_text(e))`` rebuilds the same tree."""
    if isinstance(node, Num):
        v = node.value
        return str(v.numerator) if v.denominator == 1 and v >= 0 else f"({v})" if v.denominator == 1 else f"{v}"
    if isinstance(node, Sym):
        return PRINT_NAMES.get(node.name, node.name)
    if isinstance(node, Neg):
        return "-" + _wrap(node.operand, _UNARY)
    if isinstance(node, BinOp):
        if node.op in "+-":
            return f"{_wrap(node.left, _SUM)} {node.op} {_wrap(node.right, _PRODUCT)}"
        left = to_text(node.left)
        if _level(node.left) < _PRODUCT or _is_rational_literal(node.left):
            left = f"({left})"
        return f"{left}{node.op}{_wrap(node.right, _UNARY)}"
    if isinstance(node, Pow):
        exponent = node.exponent
        if isinstance(exponent, Num) and exponent.value.denominator == 1 and exponent.value >= 0:
            e = to_text(exponent)
        elif isinstance(exponent, Neg) and isinstance(exponent.operand, Num):
            e = to_text(exponent)
        else:
            e = f"({to_text(exponent)})"
        return f"{_wrap(node.base, _ATOM)}^{e}"
    if isinstance(node, Call):
        return f"{node.func}({to_text(node.arg)})"
    if isinstance(node, SeriesApply):
        arg = to_text(node.arg)
        return f"{node.label}[{arg} - 1]" if node.unit else f"{node.label}[{arg}]"
    raise TypeError(f"unknown node {node!r}")


def _wrap(node, level):
    text = to_text(node)
    if _level(node) < level or (level > _PRODUCT and _is_rational_literal(node)):
        return f"({text})"
    return text


# scalar-dialect evaluation

def series_of(node, order):
    """Evaluate a scalar-dialect tree as a truncated series in w.

    The result can come back shorter than ``order`` when divisions by
    series vanishing at 0 consume precision.
    """
    if isinstance(node, Num):
        return WSeries.constant(node.value, order)
    if isinstance(node, Sym):
        if node.name != "w":
            pos = node.span[0] if node.span else 0
            raise DialectError(f"symbol {node.name!r} is not a series variable", pos)
        return WSeries.variable(order)
    if isinstance(node, Neg):
        return -series_of(node.operand, order)
    if isinstance(node, BinOp):
        a, b = series_of(node.left, order), series_of(node.right, order)
        if node.op == "+":
            return a + b
        if node.op == "-":
            return a - b
        if node.op == "*":
            return a * b
        return series_div(a, b)
    if isinstance(node, Pow):
        e = constant_value(node.exponent)
        base = series_of(node.base, order)
        if e.denominator != 1:
            return power_rational(base, e)
        return base ** int(e)
    if isinstance(node, Call):
        return apply_elementary(node.func, series_of(node.arg, order))
    if isinstance(node, SeriesApply):
        raise DialectError("series applications are not part of the scalar dialect", 0)
    raise TypeError(f"unknown node {node!r}")
