"""Classical spin-j irreps and Jordanian irreps built through a generator map.

Spins are passed as the integer 2j throughout.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import JTKError
from .hpoly import H as h
from .maps import MapSpec, solve_forward, solve_inverse
from .matrix import (
    PolyMatrix,
    apply_series,
    identity,
    mat_div_h_checked,
    mat_log_unipotent,
    nilpotency_index,
)
from .series import WSeries


@dataclass(frozen=True)
class ClassicalIrrep:
    two_j: int
    Jp: PolyMatrix
    Jm: PolyMatrix
    J0: PolyMatrix

    @property
    def spin(self):
        return Fraction(self.two_j, 2)

    @property
    def dim(self):
        return self.two_j + 1

    def generators(self):
        return {"Jp": self.Jp, "Jm": self.Jm, "J0": self.J0}

    def conjugate(self, s, s_inv):
        """The same irrep in another basis: s J s^-1."""
        return ClassicalIrrep(self.two_j, s @ self.Jp @ s_inv, s @ self.Jm @ s_inv, s @ self.J0 @ s_inv)


def _check_two_j(two_j):
    if not isinstance(two_j, int) or isinstance(two_j, bool) or two_j < 0:
        raise JTKError(f"invalid spin: 2j must be a non-negative integer, got {two_j!r}")


@lru_cache(maxsize=None)
def classical_irrep(two_j):
    """Spin j irrep: J0 = diag(2j, 2j-2, ..., -2j), J- the unit lower shift,
    J+ the upper shift with entries k(2j+1-k)."""
    _check_two_j(two_j)
    n = two_j + 1
    rows_p = [[0] * n for _ in range(n)]
    rows_m = [[0] * n for _ in range(n)]
    for k in range(1, n):
        rows_p[k - 1][k] = k * (n - k)
        rows_m[k][k - 1] = 1
    jp = PolyMatrix.from_rows(rows_p)
    jm = PolyMatrix.from_rows(rows_m)
    j0 = PolyMatrix.diagonal([two_j - 2 * k for k in range(n)])
    return ClassicalIrrep(two_j, jp, jm, j0)


@dataclass(frozen=True)
class JordanianIrrep:
    two_j: int
    T: PolyMatrix
    Tinv: PolyMatrix
    H: PolyMatrix
    Y: PolyMatrix
    X: PolyMatrix
    map_spec: MapSpec
    classical: ClassicalIrrep

    @property
    def dim(self):
        return self.two_j + 1

    @property
    def hX(self):
        return self.X.scale(h)

    def generators(self):
        return {"T": self.T, "Tinv": self.Tinv, "H": self.H, "Y": self.Y, "X": self.X}


@lru_cache(maxsize=None)
def _inverse_solution(map_spec, order):
    return solve_inverse(map_spec, order)


@lru_cache(maxsize=None)
def _forward_solution(map_spec, order):
    return solve_forward(map_spec, order)


def inverse_images(map_spec, jp, j0, jm):
    """(T, Tinv, H, Y) as functions of classical generator matrices."""
    z = jp.scale(h)
    order = max(nilpotency_index(z), 1)
    sol = _inverse_solution(map_spec, order)

    def at_z(s):
        return apply_series(s, z)

    t = at_z(sol.g1)
    tinv = at_z(1 / sol.g1)
    H_ = at_z(sol.G2) @ j0
    y = at_z(sol.G3) @ jm + (at_z(sol.Abar) + at_z(sol.Bbar) @ j0 + at_z(sol.Cbar) @ j0 @ j0).scale(h)
    return t, tinv, H_, y


def jordanian_irrep(map_spec, two_j=None, classical=None):
    """Jordanian generators T, H, Y (and X = log(T)/h) on a spin j irrep."""
    if classical is None:
        classical = classical_irrep(two_j)
    t, tinv, H_, y = inverse_images(map_spec, classical.Jp, classical.J0, classical.Jm)
    x = mat_div_h_checked(mat_log_unipotent(t), 1)
    return JordanianIrrep(classical.two_j, t, tinv, H_, y, x, map_spec, classical)


def jordanian_relation_residuals(T, Tinv, H_, Y, X):
    """Defining relations of the Jordanian algebra; every residual must vanish."""
    half = Fraction(1, 2)
    one = identity(T.rows)
    s = T + Tinv
    return {
        "[H,T] = T^2 - 1": H_.commutator(T) - (T @ T - one),
        "[H,Tinv] = Tinv^2 - 1": H_.commutator(Tinv) - (Tinv @ Tinv - one),
        "[H,Y] = -(Y(T+Tinv) + (T+Tinv)Y)/2": H_.commutator(Y) + (Y @ s + s @ Y).scale(half),
        "[T,Y] = h(HT+TH)/2": T.commutator(Y) - (H_ @ T + T @ H_).scale(h * half),
        "[Tinv,Y] = -h(H Tinv + Tinv H)/2": Tinv.commutator(Y) + (H_ @ Tinv + Tinv @ H_).scale(h * half),
        "[X,Y] = H": X.commutator(Y) - H_,
        "[H,X] = 2 sinh(hX)/h": H_.commutator(X) - mat_div_h_checked(T - Tinv, 1),
        "T Tinv = 1": T @ Tinv - one,
    }


def verify_jordanian_relations(rep):
    return jordanian_relation_residuals(rep.T, rep.Tinv, rep.H, rep.Y, rep.X)


def classical_relation_residuals(jp, jm, j0):
    return {
        "[J0,J+] = 2J+": j0.commutator(jp) - jp.scale(2),
        "[J0,J-] = -2J-": j0.commutator(jm) + jm.scale(2),
        "[J+,J-] = J0": jp.commutator(jm) - j0,
    }


def forward_images(map_spec, T, H_, Y):
    """Classical generators (J+, J0, J-) as functions of Jordanian matrices.

    Works on any representation, including tensor products where T, H, Y
    are coproduct images.
    """
    hx = mat_log_unipotent(T)
    order = max(nilpotency_index(hx), 1)
    sol = _forward_solution(map_spec, order)
    phi = map_spec.phi(order)

    def at_w(s):
        return apply_series(s, hx)

    jp = mat_div_h_checked(at_w(phi), 1)
    j0 = at_w(sol.F2) @ H_
    jm = at_w(sol.F3) @ Y + (at_w(sol.Ubar) + at_w(sol.Vbar) @ H_ + at_w(sol.Wbar) @ H_ @ H_).scale(h)
    return jp, j0, jm


def reconstruct_classical(map_spec, rep):
    """Apply the forward map to a Jordanian irrep.

    Returns the reconstructed (J+, J0, J-) and their differences from the
    classical irrep the Jordanian one was built from.
    """
    jp, j0, jm = forward_images(map_spec, rep.T, rep.H, rep.Y)
    c = rep.classical
    diffs = {"J+": jp - c.Jp, "J0": j0 - c.J0, "J-": jm - c.Jm}
    return (jp, j0, jm), diffs


def commutator_identity_residuals(rep, t_functions=(), z_functions=()):
    """Residuals of the commutator identities for functions of T and of J+.

    ``t_functions`` are series in s = T - 1, ``z_functions`` series in
    z = h J+.  Each needs order at least dim + 2 (two derivatives are taken).
    """
    half = Fraction(1, 2)
    T, H_, Y = rep.T, rep.H, rep.Y
    one = identity(T.rows)
    s = T - one
    t2m1 = T @ T - one
    out = {}
    for idx, f in enumerate(t_functions):
        df = f.derivative()
        fT, dfT = apply_series(f, s), apply_series(df, s)
        ddfT = apply_series(df.derivative(), s)
        tdf = T @ dfT
        tdf_prime = dfT + T @ ddfT
        out[f"f{idx}: [H,f] = (T^2-1) f'"] = H_.commutator(fT) - t2m1 @ dfT
        out[f"f{idx}: [f,Y] = h((Tf')H + H(Tf'))/2"] = fT.commutator(Y) - (tdf @ H_ + H_ @ tdf).scale(h * half)
        out[f"f{idx}: [f,Y] = h(Tf')H + h(T^2-1)(Tf')'/2"] = (
            fT.commutator(Y) - (tdf @ H_).scale(h) - (t2m1 @ tdf_prime).scale(h * half))
    c = rep.classical
    z = c.Jp.scale(h)
    for idx, g in enumerate(z_functions):
        dg = g.derivative()
        gz, dgz = apply_series(g, z), apply_series(dg, z)
        ddgz = apply_series(dg.derivative(), z)
        out[f"g{idx}: [J0,g] = 2J+ g'"] = c.J0.commutator(gz) - (z @ dgz).scale(2)
        out[f"g{idx}: [g,J-] = (J0 g' + g' J0)/2"] = gz.commutator(c.Jm) - (c.J0 @ dgz + dgz @ c.J0).scale(h * half)
        out[f"g{idx}: [g,J-] = J+ g'' + g' J0"] = gz.commutator(c.Jm) - (z @ ddgz + dgz @ c.J0).scale(h)
    return out


def sample_functions(dim):
    """Default sample functions for the commutator identities."""
    n = dim + 2
    t_funcs = (
        WSeries([1, 2, 1], n),                      # T^2
        WSeries([0, 1, Fraction(-1, 2), 3], n),
        WSeries([Fraction(1, k + 1) for k in range(n)], n),
    )
    z_funcs = (
        WSeries([0, 0, 1], n),                      # z^2
        WSeries([2, -1, Fraction(1, 3), 0, 5], n),
    )
    return t_funcs, z_funcs

