"""Expression trees over algebra generators.

Products keep their order (the algebras are noncommutative).  The same tree
can be evaluated as a matrix in a representation, pushed through an
anti-homomorphism (antipode) or a character (counit).
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Tuple

from .errors import JTKError, UnknownNameError
from .hpoly import ONE, ZERO, HPoly
from .matrix import apply_series, identity, inverse_unipotent
from .series import WSeries, elementary, power_rational

JORDANIAN_GENERATORS = ("T", "Tinv", "H", "Y", "X")
CLASSICAL_GENERATORS = ("Jp", "Jm", "J0")
GENERATORS = JORDANIAN_GENERATORS + CLASSICAL_GENERATORS

Span = Optional[Tuple[int, int]]


class Node:
    """Base class; subclasses are frozen dataclasses."""

    def __add__(self, other):
        return BinOp("+", self, as_node(other))

    def __radd__(self, other):
        return BinOp("+", as_node(other), self)

    def __sub__(self, other):
        return BinOp("-", self, as_node(other))

    def __rsub__(self, other):
        return BinOp("-", as_node(other), self)

    def __mul__(self, other):
        return BinOp("*", self, as_node(other))

    def __rmul__(self, other):
        return BinOp("*", as_node(other), self)

    def __truediv__(self, other):
        return BinOp("/", self, as_node(other))

    def __neg__(self):
        return Neg(self)

    def __pow__(self, k):
        return Pow(self, as_node(k))


@dataclass(frozen=True, eq=True)
class Num(Node):
    value: Fraction
    span: Span = field(default=None, compare=False, repr=False)


@dataclass(frozen=True, eq=True)
class Sym(Node):
    name: str
    span: Span = field(default=None, compare=False, repr=False)


@dataclass(frozen=True, eq=True)
class Neg(Node):
    operand: Node
    span: Span = field(default=None, compare=False, repr=False)


@dataclass(frozen=True, eq=True)
class BinOp(Node):
    op: str
    left: Node
    right: Node
    span: Span = field(default=None, compare=False, repr=False)


@dataclass(frozen=True, eq=True)
class Pow(Node):
    base: Node
    exponent: Node
    span: Span = field(default=None, compare=False, repr=False)


@dataclass(frozen=True, eq=True)
class Call(Node):
    func: str
    arg: Node
    span: Span = field(default=None, compare=False, repr=False)


@dataclass(frozen=True, eq=True)
class SeriesApply(Node):
    """series(arg - 1) if ``unit`` else series(arg); the argument must be nilpotent."""
    series: WSeries
    arg: Node
    unit: bool = False
    label: str = "f"
    span: Span = field(default=None, compare=False, repr=False)


def as_node(x):
    if isinstance(x, Node):
        return x
    if isinstance(x, (int, Fraction)):
        return Num(Fraction(x))
    raise TypeError(f"cannot turn {x!r} into an expression")


def gen(name):
    if name not in GENERATORS:
        raise UnknownNameError(f"unknown generator {name!r}")
    return Sym(name)


h = Sym("h")


def symbols(node):
    """Set of symbol names appearing in the tree."""
    if isinstance(node, Sym):
        return {node.name}
    if isinstance(node, Num):
        return set()
    out = set()
    for child in _children(node):
        out |= symbols(child)
    return out


def _children(node):
    if isinstance(node, Neg):
        return (node.operand,)
    if isinstance(node, BinOp):
        return (node.left, node.right)
    if isinstance(node, Pow):
        return (node.base, node.exponent)
    if isinstance(node, (Call, SeriesApply)):
        return (node.arg,)
    return ()


def constant_value(node):
    """Rational value of a tree built only from numbers, or raise."""
    if isinstance(node, Num):
        return node.value
    if isinstance(node, Neg):
        return -constant_value(node.operand)
    if isinstance(node, BinOp):
        a, b = constant_value(node.left), constant_value(node.right)
        if node.op == "+":
            return a + b
        if node.op == "-":
            return a - b
        if node.op == "*":
            return a * b
        if b == 0:
            raise ZeroDivisionError("division by zero in constant expression")
        return a / b
    if isinstance(node, Pow):
        e = constant_value(node.exponent)
        if e.denominator != 1:
            raise JTKError("rational powers of constants are not supported")
        return constant_value(node.base) ** int(e)
    raise JTKError("expression is not a rational constant")


def scalar_value(node):
    """HPoly value of a tree over numbers and h, or None if it has generators."""
    if isinstance(node, Num):
        return HPoly.const(node.value)
    if isinstance(node, Sym):
        return HPoly.h() if node.name == "h" else None
    if isinstance(node, Neg):
        v = scalar_value(node.operand)
        return None if v is None else -v
    if isinstance(node, BinOp):
        a, b = scalar_value(node.left), scalar_value(node.right)
        if a is None or b is None:
            return None
        if node.op == "+":
            return a + b
        if node.op == "-":
            return a - b
        if node.op == "*":
            return a * b
        if b.degree != 0:
            raise JTKError("division is only defined by nonzero rational constants")
        return a / b.eval_at_h0()
    if isinstance(node, Pow):
        base = scalar_value(node.base)
        if base is None:
            return None
        e = constant_value(node.exponent)
        if e.denominator != 1 or e < 0:
            raise JTKError("scalar powers need a non-negative integer exponent")
        out = ONE
        for _ in range(int(e)):
            out = out * base
        return out
    return None


def evaluate(node, env, dim=None):
    """Matrix value of ``node`` with generator matrices taken from ``env``."""
    if dim is None:
        dim = next(iter(env.values())).rows

    def ev(n):
        if isinstance(n, Num):
            return identity(dim).scale(n.value)
        if isinstance(n, Sym):
            if n.name == "h":
                return identity(dim).scale(HPoly.h())
            try:
                return env[n.name]
            except KeyError:
                raise UnknownNameError(f"symbol {n.name!r} has no matrix in this representation") from None
        if isinstance(n, Neg):
            return -ev(n.operand)
        if isinstance(n, BinOp):
            if n.op == "/":
                divisor = scalar_value(n.right)
                if divisor is None or divisor.degree != 0:
                    raise JTKError("matrix expressions can only be divided by nonzero rational constants")
                return ev(n.left).scale(1 / divisor.eval_at_h0())
            a, b = ev(n.left), ev(n.right)
            if n.op == "+":
                return a + b
            if n.op == "-":
                return a - b
            return a @ b
        if isinstance(n, Pow):
            e = constant_value(n.exponent)
            base = ev(n.base)
            if e.denominator != 1:
                s = power_rational(WSeries([1, 1], dim + 1), e)
                return apply_series(s, base - identity(dim))
            if e < 0:
                base = inverse_unipotent(base)
            return base.power(abs(int(e)))
        if isinstance(n, Call):
            return apply_series(elementary(n.func, dim + 1), ev(n.arg))
        if isinstance(n, SeriesApply):
            arg = ev(n.arg)
            if n.unit:
                arg = arg - identity(dim)
            return apply_series(n.series, arg)
        raise TypeError(f"unknown node {n!r}")

    return ev(node)


def _jordanian_images():
    T, Tinv, H, Y, X = (Sym(g) for g in JORDANIAN_GENERATORS)
    return {
        "T": Tinv,
        "Tinv": T,
        "H": -(T * H * Tinv),
        "Y": -(T * Y * Tinv),
        "X": -X,
    }


def _classical_images():
    return {g: -Sym(g) for g in CLASSICAL_GENERATORS}


JORDANIAN_ANTIPODE = _jordanian_images()
CLASSICAL_ANTIPODE = _classical_images()


def antipode_transform(node, images=None):
    """Apply an anti-homomorphism given by its generator images.

    Products are reversed, scalars fixed, and series applications are pushed
    inside: S(f(a)) = f(S(a)).
    """
    if images is None:
        images = {**JORDANIAN_ANTIPODE, **CLASSICAL_ANTIPODE}

    def tr(n):
        if isinstance(n, Num):
            return n
        if isinstance(n, Sym):
            if n.name in ("h", "w"):
                return n
            try:
                return images[n.name]
            except KeyError:
                raise UnknownNameError(f"no antipode image for generator {n.name!r}") from None
        if isinstance(n, Neg):
            return Neg(tr(n.operand))
        if isinstance(n, BinOp):
            if n.op == "*":
                return BinOp("*", tr(n.right), tr(n.left))
            if n.op == "/":
                return BinOp("/", tr(n.left), n.right)
            return BinOp(n.op, tr(n.left), tr(n.right))
        if isinstance(n, Pow):
            return Pow(tr(n.base), n.exponent)
        if isinstance(n, Call):
            return Call(n.func, tr(n.arg))
        if isinstance(n, SeriesApply):
            return SeriesApply(n.series, tr(n.arg), n.unit, n.label)
        raise TypeError(f"unknown node {n!r}")

    return tr(node)


JORDANIAN_COUNIT = {"T": ONE, "Tinv": ONE, "H": ZERO, "Y": ZERO, "X": ZERO}
CLASSICAL_COUNIT = {"Jp": ZERO, "Jm": ZERO, "J0": ZERO}


def counit(node, values=None):
    """Image of ``node`` under the character fixed by generator ``values``."""
    if values is None:
        values = {**JORDANIAN_COUNIT, **CLASSICAL_COUNIT}

    def ev(n):
        if isinstance(n, Num):
            return HPoly.const(n.value)
        if isinstance(n, Sym):
            if n.name == "h":
                return HPoly.h()
            try:
                return values[n.name]
            except KeyError:
                raise UnknownNameError(f"no counit value for {n.name!r}") from None
        if isinstance(n, Neg):
            return -ev(n.operand)
        if isinstance(n, BinOp):
            if n.op == "/":
                return ev(n.left) / constant_value(n.right)
            a, b = ev(n.left), ev(n.right)
            return a + b if n.op == "+" else a - b if n.op == "-" else a * b
        if isinstance(n, Pow):
            e = constant_value(n.exponent)
            base = ev(n.base)
            if e.denominator != 1 or (e < 0 and base != ONE):
                raise JTKError("counit of this power is not a polynomial in h")
            out = ONE
            for _ in range(abs(int(e))):
                out = out * base
            return out
        if isinstance(n, (Call, SeriesApply)):
            arg = ev(n.arg)
            if isinstance(n, SeriesApply) and n.unit:
                arg = arg - ONE
            if arg:
                raise JTKError("counit of a series needs an argument with zero counit")
            s = n.series if isinstance(n, SeriesApply) else elementary(n.func, 1)
            return HPoly.const(s[0])
        raise TypeError(f"unknown node {n!r}")

    return ev(node)


def substitute(node, mapping):
    """Replace symbols by trees."""
    if isinstance(node, Sym):
        return mapping.get(node.name, node)
    if isinstance(node, Num):
        return node
    if isinstance(node, Neg):
        return Neg(substitute(node.operand, mapping))
    if isinstance(node, BinOp):
        return BinOp(node.op, substitute(node.left, mapping), substitute(node.right, mapping))
    if isinstance(node, Pow):
        return Pow(substitute(node.base, mapping), node.exponent)
    if isinstance(node, Call):
        return Call(node.func, substitute(node.arg, mapping))
    if isinstance(node, SeriesApply):
        return SeriesApply(node.series, substitute(node.arg, mapping), node.unit, node.label)
    raise TypeError(f"unknown node {node!r}")
