"""Truncated power series in one nilpotent variable over the rationals.

A series of order N stores the coefficients of w**0 .. w**(N-1); everything
from w**N on is discarded.  Operations that lose exactness (differentiation,
division by a series with a zero at the origin) shrink the order so that the
stored coefficients are always exact.
"""
from fractions import Fraction
from math import factorial

from .errors import NormalizationError, OrderError, PoleError, UnknownNameError

INF = float("inf")


class WSeries:
    __slots__ = ("coefficients",)

    def __init__(self, coefficients, order=None):
        coefficients = [Fraction(c) for c in coefficients]
        if order is None:
            order = len(coefficients)
        if order < 1:
            raise OrderError(f"series order must be positive, got {order}")
        coefficients = coefficients[:order] + [Fraction(0)] * (order - len(coefficients))
        self.coefficients = tuple(coefficients)

    @classmethod
    def constant(cls, value, order):
        return cls([value], order)

    @classmethod
    def variable(cls, order):
        return cls([0, 1], order)

    @classmethod
    def zero(cls, order):
        return cls([], order)

    @property
    def order(self):
        return len(self.coefficients)

    def __getitem__(self, k):
        return self.coefficients[k]

    def __iter__(self):
        return iter(self.coefficients)

    def __len__(self):
        return len(self.coefficients)

    def valuation(self):
        """Index of the first nonzero coefficient (infinity for zero)."""
        for k, c in enumerate(self.coefficients):
            if c:
                return k
        return INF

    def is_zero(self):
        return not any(self.coefficients)

    def truncate(self, order):
        if order > self.order:
            raise OrderError(f"cannot extend a series of order {self.order} to {order}")
        return WSeries(self.coefficients[:order], order)

    def __eq__(self, other):
        if not isinstance(other, WSeries):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self):
        return hash(self.coefficients)

    def __repr__(self):
        return f"WSeries({[str(c) for c in self.coefficients]})"

    def _coerce(self, other):
        if isinstance(other, WSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return WSeries.constant(other, self.order)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = min(self.order, other.order)
        return WSeries([a + b for a, b in zip(self.coefficients[:n], other.coefficients[:n])])

    __radd__ = __add__

    def __neg__(self):
        return WSeries([-c for c in self.coefficients])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return WSeries([c * other for c in self.coefficients])
        if not isinstance(other, WSeries):
            return NotImplemented
        n = min(self.order, other.order)
        a, b = self.coefficients, other.coefficients
        out = [Fraction(0)] * n
        for i in range(n):
            if a[i]:
                ai = a[i]
                for j in range(n - i):
                    if b[j]:
                        out[i + j] += ai * b[j]
        return WSeries(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("series division by zero scalar")
            return self * (1 / Fraction(other))
        return series_div(self, other)

    def __rtruediv__(self, other):
        return series_div(WSeries.constant(other, self.order), self)

    def __pow__(self, k):
        if isinstance(k, Fraction) and k.denominator != 1:
            return power_rational(self, k)
        k = int(k)
        if k < 0:
            return series_div(WSeries.constant(1, self.order), self ** (-k))
        result = WSeries.constant(1, self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def derivative(self):
        """d/dw; the result has one order less."""
        if self.order == 1:
            raise OrderError("cannot differentiate a series of order 1")
        return WSeries([k * c for k, c in enumerate(self.coefficients) if k])

    def shift_down(self, k):
        """Divide by w**k, assuming the k lowest coefficients vanish."""
        return WSeries(self.coefficients[k:])

    def scale_variable(self, factor):
        """Return s(factor * w)."""
        factor = Fraction(factor)
        return WSeries([c * factor**k for k, c in enumerate(self.coefficients)])


def _unit_inverse(b):
    """Reciprocal of a series with nonzero constant term."""
    n = b.order
    b0 = b[0]
    inv = [Fraction(0)] * n
    inv[0] = 1 / b0
    for k in range(1, n):
        acc = Fraction(0)
        for j in range(1, k + 1):
            if b[j]:
                acc += b[j] * inv[k - j]
        inv[k] = -acc / b0
    return WSeries(inv)


def series_div(a, b):
    """Exact quotient a/b.

    The common power of w is shifted out first; the quotient is exact to
    order ``min(a.order, b.order) - valuation(b)``.
    """
    vb = b.valuation()
    if vb == INF:
        raise ZeroDivisionError("division by the zero series")
    va = a.valuation()
    if va < vb:
        raise PoleError(f"pole: numerator has valuation {va} < denominator valuation {vb}")
    n = min(a.order, b.order)
    if n - vb < 1:
        raise OrderError("series too short for this division")
    num = WSeries(a.coefficients[vb:n])
    den = WSeries(b.coefficients[vb:n])
    return num * _unit_inverse(den)


def series_compose(outer, inner):
    """outer(inner(w)); ``inner`` must have zero constant term."""
    if inner[0] != 0:
        raise NormalizationError(f"inner series must vanish at 0, constant term is {inner[0]}")
    v = inner.valuation()
    order = inner.order if v == INF else min(inner.order, outer.order * v)
    inner = inner.truncate(order)
    result = WSeries.constant(outer[outer.order - 1], order)
    for c in reversed(outer.coefficients[:-1]):
        result = result * inner + c
    return result


def series_revert(f):
    """Compositional inverse g with f(g(w)) = w."""
    if f.order < 2:
        raise OrderError("reversion needs a series of order at least 2")
    if f[0] != 0:
        raise NormalizationError(f"reversion requires f(0) = 0, got f(0) = {f[0]}")
    if f[1] != 1:
        raise NormalizationError(f"reversion requires f'(0) = 1, got f'(0) = {f[1]}")
    n = f.order
    g = [Fraction(0), Fraction(1)] + [Fraction(0)] * (n - 2)
    for k in range(2, n):
        # with g_k = 0 the w**k coefficient of f(g) is r_k; g_k enters with factor f'(0) = 1
        r = series_compose(f, WSeries(g[: k + 1]))[k]
        g[k] = -r
    return WSeries(g)


def series_deriv_T(f):
    """Image of d/dT under T = exp(w): exp(-w) * df/dw."""
    df = f.derivative()
    return elementary("exp", df.order).scale_variable(-1) * df


def _exp(n):
    return [Fraction(1, factorial(k)) for k in range(n)]


def _log1p(n):
    return [Fraction(0)] + [Fraction((-1) ** (k + 1), k) for k in range(1, n)]


def _sinh(n):
    return [Fraction(1, factorial(k)) if k % 2 else Fraction(0) for k in range(n)]


def _cosh(n):
    return [Fraction(0) if k % 2 else Fraction(1, factorial(k)) for k in range(n)]


def _arctanh(n):
    return [Fraction(1, k) if k % 2 else Fraction(0) for k in range(n)]


def _sqrt1p(n):
    out, c = [], Fraction(1)
    half = Fraction(1, 2)
    for k in range(n):
        out.append(c)
        c = c * (half - k) / (k + 1)
    return out


def elementary(name, order):
    """Taylor expansion about 0 of a named function.

    ``log1p`` and ``sqrt1p`` take the offset from 1 as their argument, so
    ``log1p(w) = log(1 + w)``.
    """
    if name == "tanh":
        return series_div(WSeries(_sinh(order + 1)), WSeries(_cosh(order + 1))).truncate(order)
    try:
        table = _TABLES[name]
    except KeyError:
        raise UnknownNameError(f"unknown elementary function {name!r}") from None
    return WSeries(table(order))


_TABLES = {
    "exp": _exp,
    "log1p": _log1p,
    "sinh": _sinh,
    "cosh": _cosh,
    "arctanh": _arctanh,
    "sqrt1p": _sqrt1p,
}

ELEMENTARY_NAMES = ("exp", "log1p", "sinh", "cosh", "tanh", "arctanh", "sqrt1p")


def apply_elementary(name, arg):
    """name(arg) for a series argument vanishing at the origin."""
    if arg[0] != 0:
        raise NormalizationError(f"{name} argument must vanish at 0 to stay rational, constant term is {arg[0]}")
    return series_compose(elementary(name, arg.order), arg)


def power_rational(s, exponent):
    """s**exponent for a series with constant term 1."""
    if s[0] != 1:
        raise NormalizationError("rational powers need a series with constant term 1")
    log_s = apply_elementary("log1p", s - 1)
    return apply_elementary("exp", log_s * Fraction(exponent))
