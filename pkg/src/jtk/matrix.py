"""Dense matrices over Q[h] with Kronecker structure and exact nilpotent calculus.

Storage is dense and row-major.  Products skip zero entries and run in
integer arithmetic over a common denominator, since the matrices that show
up (tensor powers of triangular irreps) are mostly zero.
"""
import json
from fractions import Fraction
from math import gcd

from .errors import NotDivisibleError, NotNilpotentError, OrderError, ShapeError
from .hpoly import ONE, ZERO, HPoly


def _as_hpoly(x):
    if isinstance(x, HPoly):
        return x
    return HPoly.const(x)


class PolyMatrix:
    __slots__ = ("rows", "cols", "entries", "dims")

    def __init__(self, rows, cols, entries, dims=None):
        entries = tuple(_as_hpoly(e) for e in entries)
        if rows < 1 or cols < 1:
            raise ShapeError(f"matrix dimensions must be positive, got {rows}x{cols}")
        if len(entries) != rows * cols:
            raise ShapeError(f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(entries)}")
        if dims is not None:
            prod = 1
            for d in dims:
                prod *= d
            if rows != cols or prod != rows:
                raise ShapeError(f"tensor factors {dims} do not match a {rows}x{cols} matrix")
            dims = tuple(dims)
        self.rows, self.cols, self.entries, self.dims = rows, cols, entries, dims

    @classmethod
    def from_rows(cls, rows):
        rows = [list(r) for r in rows]
        ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise ShapeError("ragged rows")
        return cls(len(rows), ncols, [e for r in rows for e in r])

    @classmethod
    def identity(cls, n):
        return cls(n, n, [ONE if i == j else ZERO for i in range(n) for j in range(n)])

    @classmethod
    def zeros(cls, rows, cols=None):
        cols = rows if cols is None else cols
        return cls(rows, cols, [ZERO] * (rows * cols))

    @classmethod
    def diagonal(cls, values):
        n = len(values)
        values = [_as_hpoly(v) for v in values]
        return cls(n, n, [values[i] if i == j else ZERO for i in range(n) for j in range(n)])

    @property
    def shape(self):
        return (self.rows, self.cols)

    @property
    def tensor_shape(self):
        return self.dims if self.dims is not None else (self.rows,)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i):
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self):
        return [list(self.row(i)) for i in range(self.rows)]

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        return f"PolyMatrix({self.to_rows()})"

    def __str__(self):
        cells = [[str(e) for e in r] for r in self.to_rows()]
        width = max(len(c) for r in cells for c in r)
        return "\n".join("[" + ", ".join(c.rjust(width) for c in r) + "]" for r in cells)

    def is_zero(self):
        return not any(self.entries)

    def is_identity(self):
        return self.rows == self.cols and self == PolyMatrix.identity(self.rows)

    def is_square(self):
        return self.rows == self.cols

    def _check_same(self, other, op):
        if self.shape != other.shape:
            raise ShapeError(f"cannot {op} {self.rows}x{self.cols} and {other.rows}x{other.cols}")

    def _keep_dims(self, other):
        return self.dims if self.dims == other.dims else None

    def __add__(self, other):
        self._check_same(other, "add")
        return PolyMatrix(self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)],
                          self._keep_dims(other))

    def __sub__(self, other):
        self._check_same(other, "subtract")
        return PolyMatrix(self.rows, self.cols, [a - b for a, b in zip(self.entries, other.entries)],
                          self._keep_dims(other))

    def __neg__(self):
        return PolyMatrix(self.rows, self.cols, [-a for a in self.entries], self.dims)

    def scale(self, scalar):
        scalar = _as_hpoly(scalar)
        return PolyMatrix(self.rows, self.cols, [scalar * a for a in self.entries], self.dims)

    def __mul__(self, scalar):
        if isinstance(scalar, PolyMatrix):
            return self @ scalar
        return self.scale(scalar)

    __rmul__ = __mul__

    def _int_rows(self):
        """Sparse integer rows over one common denominator."""
        den = 1
        for e in self.entries:
            if e._num:
                den = den * e._den // gcd(den, e._den)
        out = []
        for i in range(self.rows):
            row = []
            for j, e in enumerate(self.row(i)):
                if e._num:
                    f = den // e._den
                    row.append((j, [x * f for x in e._num] if f != 1 else e._num))
            out.append(row)
        return out, den

    def __matmul__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ShapeError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        a_rows, da = self._int_rows()
        b_rows, db = other._int_rows()
        den = da * db
        entries = [ZERO] * (self.rows * other.cols)
        for i, a_row in enumerate(a_rows):
            acc = {}
            for k, a in a_row:
                for j, b in b_rows[k]:
                    out = acc.get(j)
                    need = len(a) + len(b) - 1
                    if out is None:
                        out = acc[j] = [0] * need
                    elif len(out) < need:
                        out.extend([0] * (need - len(out)))
                    for p, x in enumerate(a):
                        if x:
                            for q, y in enumerate(b):
                                out[p + q] += x * y
            base = i * other.cols
            for j, out in acc.items():
                entries[base + j] = HPoly._raw(out, den)
        return PolyMatrix(self.rows, other.cols, entries, self._keep_dims(other))

    def commutator(self, other):
        return self @ other - other @ self

    def anticommutator(self, other):
        return self @ other + other @ self

    def transpose(self):
        return PolyMatrix(self.cols, self.rows,
                          [self[i, j] for j in range(self.cols) for i in range(self.rows)])

    def eval_h0(self):
        return PolyMatrix(self.rows, self.cols, [HPoly.const(e.eval_at_h0()) for e in self.entries],
                          self.dims)

    def max_degree(self):
        return max(e.degree for e in self.entries)

    def nonzero_count(self):
        return sum(1 for e in self.entries if e)

    def power(self, k):
        if not self.is_square():
            raise ShapeError("power of a non-square matrix")
        result = PolyMatrix.identity(self.rows)
        for _ in range(k):
            result = result @ self
        return result

    def to_json_obj(self):
        return {"rows": self.rows, "cols": self.cols,
                "entries": [[e.to_json() for e in self.row(i)] for i in range(self.rows)]}

    def to_json(self):
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def from_json_obj(cls, obj):
        rows, cols, data = obj["rows"], obj["cols"], obj["entries"]
        if len(data) != rows or any(len(r) != cols for r in data):
            raise ShapeError(f"JSON entries do not form a {rows}x{cols} array")
        return cls(rows, cols, [HPoly.from_json(e) for r in data for e in r])

    @classmethod
    def from_json(cls, text):
        return cls.from_json_obj(json.loads(text))


def identity(n):
    return PolyMatrix.identity(n)


def kron(a, b):
    """Kronecker product; the left factor's index varies slowest."""
    rows, cols = a.rows * b.rows, a.cols * b.cols
    entries = [ZERO] * (rows * cols)
    for i in range(a.rows):
        for j in range(a.cols):
            x = a[i, j]
            if not x:
                continue
            for k in range(b.rows):
                base = (i * b.rows + k) * cols + j * b.cols
                for l in range(b.cols):
                    y = b[k, l]
                    if y:
                        entries[base + l] = x * y
    dims = None
    if a.is_square() and b.is_square():
        dims = a.tensor_shape + b.tensor_shape
    return PolyMatrix(rows, cols, entries, dims)


def kron_all(*factors):
    out = factors[0]
    for f in factors[1:]:
        out = kron(out, f)
    return out


def flip_perm(d1, d2):
    """Permutation P with P(x (x) y) = y (x) x, mapping C^d1 (x) C^d2 to C^d2 (x) C^d1."""
    n = d1 * d2
    entries = [ZERO] * (n * n)
    for a in range(d1):
        for b in range(d2):
            entries[(b * d1 + a) * n + (a * d2 + b)] = ONE
    return PolyMatrix(n, n, entries)


def _require_square(m, what):
    if not m.is_square():
        raise ShapeError(f"{what} needs a square matrix, got {m.rows}x{m.cols}")


def nilpotency_index(m):
    """Smallest p with m**p = 0; raises if m**dim != 0."""
    _require_square(m, "nilpotency test")
    p, power = 0, PolyMatrix.identity(m.rows)
    while not power.is_zero():
        if p >= m.rows:
            raise NotNilpotentError(f"matrix is not nilpotent: M^{m.rows} != 0")
        power = power @ m
        p += 1
    return p


def apply_series(s, m):
    """sum_k s_k m**k for a nilpotent matrix m."""
    _require_square(m, "series application")
    result = PolyMatrix.identity(m.rows).scale(s[0])
    power = PolyMatrix.identity(m.rows)
    k = 0
    while True:
        power = power @ m
        k += 1
        if power.is_zero():
            return result
        if k >= m.rows:
            raise NotNilpotentError(f"matrix is not nilpotent: M^{m.rows} != 0")
        if k >= s.order:
            raise OrderError(f"series of order {s.order} too short for a matrix with M^{k} != 0")
        if s[k]:
            result = result + power.scale(s[k])


def mat_exp_nilpotent(m):
    """exp(m) as a finite sum; m must be nilpotent."""
    _require_square(m, "exponential")
    result = PolyMatrix.identity(m.rows)
    term = result
    k = 0
    while True:
        term = (term @ m).scale(Fraction(1, k + 1))
        k += 1
        if term.is_zero():
            return PolyMatrix(result.rows, result.cols, result.entries, m.dims)
        if k >= m.rows:
            raise NotNilpotentError(f"exponent is not nilpotent: M^{m.rows} != 0")
        result = result + term


def mat_log_unipotent(m):
    """log(m) as a finite sum; m - I must be nilpotent."""
    _require_square(m, "logarithm")
    n = m - PolyMatrix.identity(m.rows)
    result = PolyMatrix.zeros(m.rows)
    power = PolyMatrix.identity(m.rows)
    k = 0
    while True:
        power = power @ n
        k += 1
        if power.is_zero():
            return PolyMatrix(result.rows, result.cols, result.entries, m.dims)
        if k >= m.rows:
            raise NotNilpotentError(f"M - I is not nilpotent: (M - I)^{m.rows} != 0")
        result = result + power.scale(Fraction((-1) ** (k + 1), k))


def inverse_unipotent(m):
    return mat_exp_nilpotent(-mat_log_unipotent(m))


def mat_div_h_checked(m, k=1):
    """Entry-wise exact division by h**k."""
    entries = []
    for idx, e in enumerate(m.entries):
        try:
            entries.append(e.div_h(k))
        except NotDivisibleError as exc:
            i, j = divmod(idx, m.cols)
            raise NotDivisibleError(f"entry ({i},{j}) {exc}") from None
    return PolyMatrix(m.rows, m.cols, entries, m.dims)
