"""Polynomials in the deformation parameter h with rational coefficients.

Coefficients are stored as a tuple of integers over one positive common
denominator.  Keeping a single denominator makes the inner loops of matrix
products pure integer arithmetic, which matters for 64x64 tensor products.
"""
from fractions import Fraction
from math import gcd

from .errors import NotDivisibleError
from .rational import format_rational, parse_rational


def _trim(num):
    end = len(num)
    while end and not num[end - 1]:
        end -= 1
    return num[:end]


class HPoly:
    __slots__ = ("_num", "_den", "_hash")

    def __init__(self, coefficients=()):
        coefficients = [Fraction(c) for c in coefficients]
        den = 1
        for c in coefficients:
            den = den * c.denominator // gcd(den, c.denominator)
        num = [c.numerator * (den // c.denominator) for c in coefficients]
        self._set(num, den)

    def _set(self, num, den):
        num = _trim(list(num))
        if not num:
            self._num, self._den = (), 1
        else:
            g = gcd(den, *num)
            if g != 1:
                num = [n // g for n in num]
                den //= g
            self._num, self._den = tuple(num), den
        self._hash = None

    @classmethod
    def _raw(cls, num, den):
        """Build from integer numerators over ``den`` (normalizes)."""
        p = cls.__new__(cls)
        p._set(num, den)
        return p

    @classmethod
    def const(cls, value):
        value = Fraction(value)
        return cls._raw([value.numerator], value.denominator)

    @classmethod
    def h(cls, power=1):
        return cls._raw([0] * power + [1], 1)

    @property
    def coefficients(self):
        return tuple(Fraction(n, self._den) for n in self._num)

    @property
    def degree(self):
        """Degree in h; the zero polynomial has degree -1."""
        return len(self._num) - 1

    def is_zero(self):
        return not self._num

    def __bool__(self):
        return bool(self._num)

    def coefficient(self, power):
        if 0 <= power < len(self._num):
            return Fraction(self._num[power], self._den)
        return Fraction(0)

    def eval_at_h0(self):
        return self.coefficient(0)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = HPoly.const(other)
        if not isinstance(other, HPoly):
            return NotImplemented
        return self._num == other._num and self._den == other._den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._num, self._den))
        return self._hash

    @staticmethod
    def _coerce(other):
        if isinstance(other, HPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return HPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other._num:
            return self
        if not self._num:
            return other
        a, da, b, db = self._num, self._den, other._num, other._den
        g = gcd(da, db)
        fa, fb = db // g, da // g
        n = max(len(a), len(b))
        out = [0] * n
        for i, x in enumerate(a):
            out[i] = x * fa
        for i, x in enumerate(b):
            out[i] += x * fb
        return HPoly._raw(out, da * fa)

    __radd__ = __add__

    def __neg__(self):
        p = HPoly.__new__(HPoly)
        p._num, p._den, p._hash = tuple(-x for x in self._num), self._den, None
        return p

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self._num or not other._num:
            return ZERO
        a, b = self._num, other._num
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return HPoly._raw(out, self._den * other._den)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        scalar = Fraction(scalar)
        if scalar == 0:
            raise ZeroDivisionError("HPoly division by zero scalar")
        return self * HPoly.const(1 / scalar)

    def shift(self, k):
        """Multiply by h**k."""
        if not self._num:
            return self
        return HPoly._raw([0] * k + list(self._num), self._den)

    def div_h(self, k=1):
        """Exact division by h**k; every coefficient below h**k must vanish."""
        if k < 1:
            raise ValueError("k must be a positive integer")
        for power in range(min(k, len(self._num))):
            if self._num[power]:
                raise NotDivisibleError(
                    f"not divisible by h^{k}: coefficient of h^{power} is "
                    f"{format_rational(Fraction(self._num[power], self._den))}"
                )
        return HPoly._raw(self._num[k:], self._den)

    def to_json(self):
        return [[p, format_rational(Fraction(n, self._den))] for p, n in enumerate(self._num) if n]

    @classmethod
    def from_json(cls, pairs):
        if not pairs:
            return ZERO
        powers = [p for p, _ in pairs]
        if powers != sorted(set(powers)) or powers[0] < 0:
            raise ValueError("HPoly powers must be strictly ascending and non-negative")
        coefficients = [Fraction(0)] * (powers[-1] + 1)
        for p, text in pairs:
            q = parse_rational(text)
            if q == 0:
                raise ValueError("zero coefficients are not part of the canonical form")
            coefficients[p] = q
        return cls(coefficients)

    def __repr__(self):
        return f"HPoly({self})"

    def __str__(self):
        if not self._num:
            return "0"
        parts = []
        for p, n in enumerate(self._num):
            if not n:
                continue
            c = Fraction(n, self._den)
            sign = "-" if c < 0 else "+"
            c = abs(c)
            if p == 0:
                body = str(c)
            else:
                mono = "h" if p == 1 else f"h^{p}"
                body = mono if c == 1 else f"{c}*{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


ZERO = HPoly()
ONE = HPoly.const(1)
H = HPoly.h()
