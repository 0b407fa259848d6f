"""Similarity series relating two generator maps.

For maps ``source`` and ``target`` let rho = phi_target o psi_source.  The
series lambda(z) = c1 z + c2 z^2 + ... (z = h J+) is fixed by

    exp(-lambda(z) J0) z exp(lambda(z) J0) = rho(z),

which then also gives exp(-L) T_target exp(L) = T_source for the Jordanian
generators both maps build from one classical irrep (L = lambda(z) J0).
Since [lambda(z) J0, F(z)] = 2 z lambda(z) F'(z), the left side is the
time-one flow of the vector field -2 z lambda(z) d/dz applied to z, a
statement purely about power series.
"""
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Tuple

from .errors import ConsistencyError, NormalizationError, OrderError
from .hpoly import H as h
from .maps import MapSpec, resolve_map
from .matrix import PolyMatrix, apply_series, mat_exp_nilpotent
from .reps import classical_irrep
from .series import WSeries, series_compose, series_revert


def target_series(source, target, order):
    """rho(z) = phi_target(psi_source(z)) to ``order``."""
    source, target = resolve_map(source), resolve_map(target)
    psi = series_revert(source.phi(order))
    return series_compose(target.phi(order), psi)


@dataclass(frozen=True)
class SimilaritySeries:
    source: str
    target: str
    coefficients: Tuple[Fraction, ...]

    @property
    def order(self):
        return len(self.coefficients)

    def as_series(self, order=None):
        """lambda as a WSeries in z; exact up to z**self.order."""
        order = self.order + 1 if order is None else order
        if order > self.order + 1:
            raise OrderError(f"lambda known to z^{self.order}, asked for order {order}")
        return WSeries((0,) + self.coefficients, order)


@dataclass(frozen=True)
class MuSeries:
    """mu as a series in s = T - 1, with U = exp(-mu(T) H)."""
    coefficients: Tuple[Fraction, ...]

    @property
    def order(self):
        return len(self.coefficients)

    def as_series(self):
        return WSeries(self.coefficients)


def _vector_field(zlam, f, length):
    """Coefficients of -2 z lambda(z) f'(z), truncated to ``length``."""
    df = [(k + 1) * f[k + 1] for k in range(len(f) - 1)]
    out = [Fraction(0)] * length
    for i, a in enumerate(zlam):
        if not a:
            continue
        for j, b in enumerate(df):
            if i + j >= length:
                break
            if b:
                out[i + j] += -2 * a * b
    return out


def flow_image(coefficients, length):
    """Coefficients (degree < length) of exp(-2 z lambda d/dz) applied to z."""
    zlam = [Fraction(0), Fraction(0)] + list(coefficients)
    term = [Fraction(0), Fraction(1)] + [Fraction(0)] * (length - 2)
    total = list(term)
    n = 0
    while any(term):
        n += 1
        term = _vector_field(zlam, term, length)
        for k, t in enumerate(term):
            total[k] += t / factorial(n)
    return total[:length]


def _check_rho(rho, needed):
    if rho.order < needed:
        raise OrderError(f"rho of order {rho.order} is too short; need {needed}")
    if rho[0] != 0 or rho[1] != 1:
        raise NormalizationError("rho must satisfy rho(0) = 0 and rho'(0) = 1")


def lambda_solve(rho, order, source="", target=""):
    """c1..c_order from the scalar flow equation, one coefficient per degree."""
    _check_rho(rho, order + 2)
    c = [Fraction(0)] * order
    for k in range(1, order + 1):
        # c_k first appears at degree k+1, as -2 c_k z^(k+1)
        flow = flow_image(c[:k - 1], k + 2)
        c[k - 1] = (flow[k + 1] - rho[k + 1]) / 2
    check = flow_image(c, order + 2)
    if check != list(rho.coefficients[:order + 2]):
        raise ConsistencyError("flow of the solved lambda does not reproduce rho")
    return SimilaritySeries(source, target, tuple(c))


def conjugate_bch(L, A):
    """exp(-L) A exp(L) summed as sum_m (-ad_L)^m A / m!, for nilpotent ad_L."""
    total, term, m = A, A, 0
    while True:
        m += 1
        term = (term @ L - L @ term).scale(Fraction(1, m))
        if term.is_zero():
            return total
        if m > 4 * A.rows:
            raise ConsistencyError("conjugation series did not terminate")
        total = total + term


def _h_coefficient(matrix, power):
    return [e.coefficient(power) for e in matrix.entries]


def lambda_oracle(rho, order, dim=None, source="", target=""):
    """Same coefficients as ``lambda_solve`` by matching matrices on an irrep.

    Uses the classical irrep of dimension ``dim`` (default order + 2) and
    expands the conjugation by nested commutators, solving for one h power
    at a time.
    """
    dim = order + 2 if dim is None else dim
    if dim < order + 2:
        raise OrderError(f"irrep of dimension {dim} cannot see z^{order + 1}; need {order + 2}")
    _check_rho(rho, dim)
    rep = classical_irrep(dim - 1)
    z = rep.Jp.scale(h)
    target_m = apply_series(rho.truncate(dim), z)
    powers = [PolyMatrix.identity(dim)]
    for _ in range(order):
        powers.append(powers[-1] @ z)
    c = []
    for k in range(1, order + 1):
        L0 = PolyMatrix.zeros(dim)
        for i, ci in enumerate(c, start=1):
            if ci:
                L0 = L0 + (powers[i] @ rep.J0).scale(ci)
        base = conjugate_bch(L0, z)
        # c_k first reaches h^(k+1) through [z, z^k J0] alone; cross terms sit higher
        Lk = powers[k] @ rep.J0
        slope = _h_coefficient(z @ Lk - Lk @ z, k + 1)
        want = [t - a for a, t in zip(_h_coefficient(base, k + 1), _h_coefficient(target_m, k + 1))]
        pivot = next((i for i, s in enumerate(slope) if s), None)
        if pivot is None:
            raise ConsistencyError(f"coefficient c{k} does not enter at h^{k + 1}")
        ck = want[pivot] / slope[pivot]
        if any(w != ck * s for w, s in zip(want, slope)):
            raise ConsistencyError(f"inconsistent linear system for c{k}")
        c.append(ck)
    return SimilaritySeries(source, target, tuple(c))


def solve_similarity(source, target, order, verify=True):
    """lambda for a pair of maps, cross-checked against the matrix oracle."""
    source_map, target_map = resolve_map(source), resolve_map(target)
    rho = target_series(source_map, target_map, order + 2)
    lam = lambda_solve(rho, order, source_map.name, target_map.name)
    if verify:
        oracle = lambda_oracle(rho, order, source=source_map.name, target=target_map.name)
        if oracle.coefficients != lam.coefficients:
            raise ConsistencyError(
                f"scalar flow {lam.coefficients} and matrix oracle {oracle.coefficients} disagree")
    return lam


def mu_from_lambda(lam):
    """mu(T) = T lambda((1 - T^-2)/2) expanded in s = T - 1.

    With this sign exp(-lambda(z) J0) = exp(-mu(T) H) once J+ and J0 are
    written through the minimal map, J+ = (1 - T^-2)/(2h), J0 = T H.
    """
    n = lam.order + 1
    t = WSeries([1, 1], n)
    arg = (1 - t ** -2) * Fraction(1, 2)
    mu = t * series_compose(lam.as_series(n), arg)
    return MuSeries(mu.coefficients)


def build_U(lam, two_j=None, classical=None):
    """U = exp(-lambda(h J+) J0) on a classical irrep."""
    if classical is None:
        classical = classical_irrep(two_j)
    n = classical.dim
    if lam.order + 1 < n:
        raise OrderError(f"lambda known to z^{lam.order}; spin needs z^{n - 1}")
    z = classical.Jp.scale(h)
    lam_z = apply_series(lam.as_series(n), z)
    return mat_exp_nilpotent(-(lam_z @ classical.J0))


def U_from_mu(mu, T, H_):
    """exp(-mu(T) H) from Jordanian generator matrices."""
    one = PolyMatrix.identity(T.rows)
    return mat_exp_nilpotent(-(apply_series(mu.as_series(), T - one) @ H_))


def compose_flows(first, second, length):
    """Degree < length coefficients of flow(second) o flow(first)."""
    a = WSeries(flow_image(first.coefficients, length))
    b = WSeries(flow_image(second.coefficients, length))
    return list(series_compose(b, a).coefficients)


__all__ = [
    "MapSpec", "SimilaritySeries", "MuSeries", "target_series", "flow_image", "lambda_solve",
    "lambda_oracle", "solve_similarity", "mu_from_lambda", "build_U", "U_from_mu", "conjugate_bch",
    "compose_flows",
]
