"""Coproducts, twists, the triangular R-matrix and antipode conjugators.

Everything is evaluated on concrete irreps.  Tensor factors are ordered
left to right with ``kron``, and ``flip_perm(d1, d2)`` sends V1 (x) V2 to
V2 (x) V1.  Check functions return a dict mapping a check name to its
residual matrix; a check passes when the residual is exactly zero.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .errors import ConsistencyError
from .expr import (
    CLASSICAL_ANTIPODE,
    JORDANIAN_ANTIPODE,
    BinOp,
    Num,
    SeriesApply,
    Sym,
    antipode_transform,
    counit,
    evaluate,
)
from .hpoly import H as h
from .maps import MapSpec, resolve_map, solve_inverse
from .matrix import (
    PolyMatrix,
    flip_perm,
    identity,
    inverse_unipotent,
    kron,
    mat_div_h_checked,
    mat_exp_nilpotent,
)
from .reps import (
    forward_images,
    jordanian_irrep,
    jordanian_relation_residuals,
)
from .similarity import U_from_mu, build_U, mu_from_lambda, solve_similarity


@lru_cache(maxsize=None)
def _irrep(map_spec, two_j):
    return jordanian_irrep(map_spec, two_j)


def irrep(map_spec, two_j):
    return _irrep(resolve_map(map_spec), two_j)


@dataclass(frozen=True)
class CoproductSet:
    map_spec: MapSpec
    two_j1: int
    two_j2: int
    T: PolyMatrix
    Tinv: PolyMatrix
    H: PolyMatrix
    Y: PolyMatrix
    X: PolyMatrix
    Jp: PolyMatrix
    Jm: PolyMatrix
    J0: PolyMatrix

    def generators(self):
        return {"T": self.T, "Tinv": self.Tinv, "H": self.H, "Y": self.Y, "X": self.X,
                "Jp": self.Jp, "Jm": self.Jm, "J0": self.J0}


def _primitive(a, b):
    return kron(a, identity(b.rows)) + kron(identity(a.rows), b)


def coproducts(map_spec, two_j1, two_j2):
    """Jordanian coproduct images and the primitive classical ones on j1 (x) j2."""
    m = resolve_map(map_spec)
    r1, r2 = irrep(m, two_j1), irrep(m, two_j2)
    c1, c2 = r1.classical, r2.classical
    return CoproductSet(
        m, two_j1, two_j2,
        T=kron(r1.T, r2.T),
        Tinv=kron(r1.Tinv, r2.Tinv),
        H=kron(r1.H, r2.T) + kron(r1.Tinv, r2.H),
        Y=kron(r1.Y, r2.T) + kron(r1.Tinv, r2.Y),
        X=_primitive(r1.X, r2.X),
        Jp=_primitive(c1.Jp, c2.Jp),
        Jm=_primitive(c1.Jm, c2.Jm),
        J0=_primitive(c1.J0, c2.J0),
    )


def coproduct_homomorphism_check(cs):
    """Defining relations evaluated on coproduct images."""
    out = jordanian_relation_residuals(cs.T, cs.Tinv, cs.H, cs.Y, cs.X)
    out["exp(h Delta X) = Delta T"] = mat_exp_nilpotent(cs.X.scale(h)) - cs.T
    return out


# Hopf axioms on a single irrep, through expression trees

_T, _Tinv, _H, _Y, _X = (Sym(g) for g in ("T", "Tinv", "H", "Y", "X"))
_ONE = Num(Fraction(1))

COPRODUCT_TERMS = {
    "T": [(_T, _T)],
    "Tinv": [(_Tinv, _Tinv)],
    "H": [(_H, _T), (_Tinv, _H)],
    "Y": [(_Y, _T), (_Tinv, _Y)],
    "X": [(_X, _ONE), (_ONE, _X)],
}
CLASSICAL_COPRODUCT_TERMS = {g: [(Sym(g), _ONE), (_ONE, Sym(g))] for g in ("Jp", "Jm", "J0")}


def _sum_terms(terms, env, dim):
    total = PolyMatrix.zeros(dim)
    for node in terms:
        total = total + evaluate(node, env, dim)
    return total


def hopf_axiom_checks(rep):
    """Antipode and counit axioms for each generator on a Jordanian irrep."""
    env = {**rep.generators(), **rep.classical.generators()}
    dim = rep.dim
    one = identity(dim)
    out = {}
    for table, images in ((COPRODUCT_TERMS, JORDANIAN_ANTIPODE), (CLASSICAL_COPRODUCT_TERMS, CLASSICAL_ANTIPODE)):
        for g, terms in table.items():
            eps = one.scale(counit(Sym(g)))
            target = env[g]
            s_left = [BinOp("*", antipode_transform(a, images), b) for a, b in terms]
            s_right = [BinOp("*", a, antipode_transform(b, images)) for a, b in terms]
            out[f"m(S x id)D({g}) = e({g})"] = _sum_terms(s_left, env, dim) - eps
            out[f"m(id x S)D({g}) = e({g})"] = _sum_terms(s_right, env, dim) - eps
            e_left = PolyMatrix.zeros(dim)
            e_right = PolyMatrix.zeros(dim)
            for a, b in terms:
                e_left = e_left + evaluate(b, env, dim).scale(counit(a))
                e_right = e_right + evaluate(a, env, dim).scale(counit(b))
            out[f"(e x id)D({g}) = {g}"] = e_left - target
            out[f"(id x e)D({g}) = {g}"] = e_right - target
    return out


# twists and the R-matrix

@dataclass(frozen=True)
class TwistSet:
    map_name: str
    two_j1: int
    two_j2: int
    V: PolyMatrix
    Vinv: PolyMatrix
    F: PolyMatrix
    Finv: PolyMatrix
    FS: PolyMatrix
    R: PolyMatrix

    def matrices(self):
        return {"V": self.V, "Vinv": self.Vinv, "F": self.F, "Finv": self.Finv, "FS": self.FS, "R": self.R}


def _TH(rep):
    return rep.T @ rep.H


def log_V(map_spec, two_j1, two_j2):
    r1, r2 = irrep(map_spec, two_j1), irrep(map_spec, two_j2)
    return -kron(_TH(r1), r2.hX)


def minimal_V(map_spec, two_j1, two_j2):
    """V = exp(-TH (x) hX) and its inverse, on the irreps of ``map_spec``."""
    L = log_V(map_spec, two_j1, two_j2)
    return mat_exp_nilpotent(L), mat_exp_nilpotent(-L)


def rmatrix(two_j1, two_j2, map_spec="minimal"):
    """R = exp(-hX (x) TH) exp(TH (x) hX), cross-checked against (flip V) V^-1."""
    m = resolve_map(map_spec)
    r1, r2 = irrep(m, two_j1), irrep(m, two_j2)
    R = mat_exp_nilpotent(-kron(r1.hX, _TH(r2))) @ mat_exp_nilpotent(kron(_TH(r1), r2.hX))
    d1, d2 = r1.dim, r2.dim
    V21, _ = minimal_V(m, two_j2, two_j1)
    _, Vinv = minimal_V(m, two_j1, two_j2)
    R2 = flip_perm(d2, d1) @ V21 @ flip_perm(d1, d2) @ Vinv
    if R != R2:
        raise ConsistencyError(f"R-matrix forms disagree on (2j1, 2j2) = ({two_j1}, {two_j2})")
    return R


def twist_minimal(two_j1, two_j2, map_spec="minimal"):
    m = resolve_map(map_spec)
    V, Vinv = minimal_V(m, two_j1, two_j2)
    one = identity(V.rows)
    return TwistSet(m.name, two_j1, two_j2, V, Vinv, V, Vinv, one, rmatrix(two_j1, two_j2, m))


def similarity_order(*dims):
    """lambda order needed so mu covers the coproduct of U on these legs."""
    return max(sum(dims) - len(dims), 1)


@dataclass(frozen=True)
class UData:
    """lambda (map -> minimal) and the matching mu series."""
    lam: object
    mu: object


def u_data(map_spec, order):
    m = resolve_map(map_spec)
    lam = solve_similarity(m, "minimal", order)
    return UData(lam, mu_from_lambda(lam))


def coproduct_U(ud, cs):
    """Delta(U) = exp(-mu(Delta T) Delta H)."""
    return U_from_mu(ud.mu, cs.T, cs.H)


def _leg_U(ud, rep):
    return build_U(ud.lam, classical=rep.classical)


def twist_general(map_spec, two_j1, two_j2, ud: Optional[UData] = None, check=True):
    """F = Delta(U)^-1 V (U (x) U), with U = exp(-lambda(hJ+) J0) on each leg.

    With ``check`` the symmetric factor FS = V^-1 F is compared with the one
    built on the swapped pair; an asymmetry raises ConsistencyError.
    """
    m = resolve_map(map_spec)
    r1, r2 = irrep(m, two_j1), irrep(m, two_j2)
    if ud is None:
        ud = u_data(m, similarity_order(r1.dim, r2.dim))
    cs = coproducts(m, two_j1, two_j2)
    dU = coproduct_U(ud, cs)
    U1, U2 = _leg_U(ud, r1), _leg_U(ud, r2)
    V, Vinv = minimal_V(m, two_j1, two_j2)
    F = inverse_unipotent(dU) @ V @ kron(U1, U2)
    Finv = kron(inverse_unipotent(U1), inverse_unipotent(U2)) @ Vinv @ dU
    FS = Vinv @ F
    twist = TwistSet(m.name, two_j1, two_j2, V, Vinv, F, Finv, FS, rmatrix(two_j1, two_j2, m))
    if check:
        res = fs_symmetry_residual(twist, m, ud)
        if not res.is_zero():
            raise ConsistencyError(
                f"symmetric factor is not permutation symmetric on (2j1, 2j2) = ({two_j1}, {two_j2})")
    return twist


def fs_symmetry_residual(twist, map_spec=None, ud=None):
    """flip FS(j1,j2) flip^-1 - FS(j2,j1)."""
    a, b = twist.two_j1, twist.two_j2
    d1, d2 = a + 1, b + 1
    if a == b:
        other = twist.FS
    else:
        other = twist_general(map_spec or twist.map_name, b, a, ud, check=False).FS
    return flip_perm(d1, d2) @ twist.FS @ flip_perm(d2, d1) - other


def twist_relation_check(map_spec, twist, j_map=None):
    """F^-1 Delta(J) F against J (x) 1 + 1 (x) J for J+, J0, J-.

    J is written through ``j_map`` (default: the irreps' own map); the
    minimal twist V needs the minimal map's J on any irrep.
    """
    m = resolve_map(map_spec)
    jm = m if j_map is None else resolve_map(j_map)
    a, b = twist.two_j1, twist.two_j2
    cs = coproducts(m, a, b)
    dj = forward_images(jm, cs.T, cs.H, cs.Y)
    r1, r2 = irrep(m, a), irrep(m, b)
    legs = [_primitive(x, y) for x, y in zip(forward_images(jm, r1.T, r1.H, r1.Y),
                                             forward_images(jm, r2.T, r2.H, r2.Y))]
    return {f"F^-1 D(J{d}) F = J{d} x 1 + 1 x J{d}": twist.Finv @ x @ twist.F - p
            for d, x, p in zip("+0-", dj, legs)}


def r_factorization_residual(twist):
    """(flip F) F^-1 - R, with flip F taken from the swapped pair."""
    a, b = twist.two_j1, twist.two_j2
    if twist.F == twist.V:
        F21 = minimal_V(twist.map_name, b, a)[0]
    else:
        F21 = twist_general(twist.map_name, b, a, check=False).F
    d1, d2 = a + 1, b + 1
    return flip_perm(d2, d1) @ F21 @ flip_perm(d1, d2) @ twist.Finv - twist.R


def triangularity_residual(two_j1, two_j2, map_spec="minimal"):
    """P R21 P R12 - I."""
    d1, d2 = two_j1 + 1, two_j2 + 1
    R12 = rmatrix(two_j1, two_j2, map_spec)
    R21 = rmatrix(two_j2, two_j1, map_spec)
    return flip_perm(d2, d1) @ R21 @ flip_perm(d1, d2) @ R12 - identity(d1 * d2)


def ybe_residual(two_j1, two_j2, two_j3, map_spec="minimal"):
    """R12 R13 R23 - R23 R13 R12 on j1 (x) j2 (x) j3."""
    d1, d2, d3 = two_j1 + 1, two_j2 + 1, two_j3 + 1
    I1, I2, I3 = identity(d1), identity(d2), identity(d3)
    R12 = kron(rmatrix(two_j1, two_j2, map_spec), I3)
    R23 = kron(I1, rmatrix(two_j2, two_j3, map_spec))
    Q = kron(I1, flip_perm(d2, d3))
    Qinv = kron(I1, flip_perm(d3, d2))
    R13 = Qinv @ kron(rmatrix(two_j1, two_j3, map_spec), I2) @ Q
    return R12 @ R13 @ R23 - R23 @ R13 @ R12


def intertwining_residuals(two_j1, two_j2, map_spec="minimal"):
    """R Delta(g) - (P^-1 Delta'(g) P) R, Delta' built on the swapped pair."""
    m = resolve_map(map_spec)
    d1, d2 = two_j1 + 1, two_j2 + 1
    R = rmatrix(two_j1, two_j2, m)
    cs = coproducts(m, two_j1, two_j2)
    sw = coproducts(m, two_j2, two_j1)
    P, Pinv = flip_perm(d1, d2), flip_perm(d2, d1)
    a, b = cs.generators(), sw.generators()
    return {f"R D({g}) = D'({g}) R": R @ a[g] - Pinv @ b[g] @ P @ R
            for g in ("T", "Tinv", "H", "Y", "X")}


# cocycle condition

def _triple_T_H(map_spec, a, b, c):
    """(T, H) coproduct images on three legs."""
    m = resolve_map(map_spec)
    r1, r2, r3 = irrep(m, a), irrep(m, b), irrep(m, c)
    T = kron(kron(r1.T, r2.T), r3.T)
    Ti12 = kron(r1.Tinv, r2.Tinv)
    H = (kron(kron(r1.H, r2.T), r3.T) + kron(kron(r1.Tinv, r2.H), r3.T)
         + kron(Ti12, r3.H))
    return T, H


def cocycle_residual(two_j1, two_j2, two_j3, map_spec="minimal", general=False, ud=None):
    """((D x 1)F)(F x 1) - ((1 x D)F)(1 x F) on j1 (x) j2 (x) j3.

    (D x 1) and (1 x D) act on log V = -TH (x) hX, which is legitimate
    because D is an algebra map.  With ``general`` F is the map's general
    twist, and the U factors are carried along as series in T and H.
    """
    m = resolve_map(map_spec)
    r1, r2, r3 = irrep(m, two_j1), irrep(m, two_j2), irrep(m, two_j3)
    I1, I3 = identity(r1.dim), identity(r3.dim)
    cs12 = coproducts(m, two_j1, two_j2)
    cs23 = coproducts(m, two_j2, two_j3)
    left = mat_exp_nilpotent(-kron(cs12.T @ cs12.H, r3.hX))
    right = mat_exp_nilpotent(-kron(_TH(r1), cs23.X.scale(h)))
    if not general:
        V12 = minimal_V(m, two_j1, two_j2)[0]
        V23 = minimal_V(m, two_j2, two_j3)[0]
        return left @ kron(V12, I3) - right @ kron(I1, V23)
    if ud is None:
        ud = u_data(m, similarity_order(r1.dim, r2.dim, r3.dim))
    F12 = twist_general(m, two_j1, two_j2, ud, check=False).F
    F23 = twist_general(m, two_j2, two_j3, ud, check=False).F
    T3, H3 = _triple_T_H(m, two_j1, two_j2, two_j3)
    dU3inv = inverse_unipotent(U_from_mu(ud.mu, T3, H3))
    U1, U3 = _leg_U(ud, r1), _leg_U(ud, r3)
    lhs = dU3inv @ left @ kron(coproduct_U(ud, cs12), U3) @ kron(F12, I3)
    rhs = dU3inv @ right @ kron(U1, coproduct_U(ud, cs23)) @ kron(I1, F23)
    return lhs - rhs


# antipode conjugators

MINIMAL_J_EXPRESSIONS = {
    # (expression, power of h to divide out afterwards)
    "Jp": (BinOp("*", Num(Fraction(1, 2)), BinOp("-", _ONE, _Tinv * _Tinv)), 1),
    "J0": (_T * _H, 0),
    "Jm": (_T * _Y - Num(Fraction(1, 2)) * Sym("h") * (_T * _H) ** 2
           - Num(Fraction(1, 8)) * Sym("h") * (_T ** 2 - _ONE), 0),
}


def evaluate_minimal_J(name, env, dim, transform=None):
    node, k = MINIMAL_J_EXPRESSIONS[name]
    if transform is not None:
        node = transform(node)
    value = evaluate(node, env, dim)
    return mat_div_h_checked(value, k) if k else value


def classical_expression(gen_name, dim):
    """Tree for a Jordanian generator in classical generators, minimal map."""
    sol = solve_inverse(resolve_map("minimal"), dim + 1)
    z = Sym("h") * Sym("Jp")
    J0, Jm = Sym("J0"), Sym("Jm")

    def f(s, label):
        return SeriesApply(s, z, label=label)

    if gen_name == "T":
        return f(sol.g1, "g1")
    if gen_name == "Tinv":
        return f(1 / sol.g1, "1/g1")
    if gen_name == "H":
        return f(sol.G2, "G2") * J0
    if gen_name == "Y":
        return f(sol.G3, "G3") * Jm + Sym("h") * (f(sol.Abar, "A") + f(sol.Bbar, "B") * J0
                                                   + f(sol.Cbar, "C") * J0 * J0)
    raise KeyError(gen_name)


@dataclass(frozen=True)
class AntipodeOps:
    two_j: int
    G: PolyMatrix
    Gtilde: PolyMatrix


def antipode_conjugators(two_j):
    """G = exp(TH(1 - T^-2)/2) and G~ = exp(h J0 J+) on a minimal-map irrep."""
    rep = irrep("minimal", two_j)
    one = identity(rep.dim)
    c = rep.classical
    G = mat_exp_nilpotent((rep.T @ rep.H @ (one - rep.Tinv @ rep.Tinv)).scale(Fraction(1, 2)))
    Gt = mat_exp_nilpotent((c.J0 @ c.Jp).scale(h))
    return AntipodeOps(two_j, G, Gt)


def antipode_checks(two_j, orientation="stated"):
    """Residuals of the antipode similarity relations on the minimal irrep.

    ``stated``:  S(J) = G~ (-J) G~^-1 and G^-1 S(g) G = S_c(g);
    ``inverse``: the same with G, G~ replaced by their inverses.
    """
    rep = irrep("minimal", two_j)
    ops = antipode_conjugators(two_j)
    G, Gt = ops.G, ops.Gtilde
    if orientation == "inverse":
        G, Gt = inverse_unipotent(G), inverse_unipotent(Gt)
    elif orientation != "stated":
        raise ValueError(f"unknown orientation {orientation!r}")
    Ginv, Gtinv = inverse_unipotent(G), inverse_unipotent(Gt)
    c = rep.classical
    dim = rep.dim
    env = {**rep.generators(), **c.generators()}
    out = {}
    one = identity(dim)
    out["h J0 J+ = TH(1 - T^-2)/2"] = (
        (c.J0 @ c.Jp).scale(h) - (rep.T @ rep.H @ (one - rep.Tinv @ rep.Tinv)).scale(Fraction(1, 2)))
    transform = lambda node: antipode_transform(node, JORDANIAN_ANTIPODE)
    for name in ("Jp", "J0", "Jm"):
        lhs = evaluate_minimal_J(name, env, dim, transform)
        out[f"S(J{name[1]}) = G~ (-J{name[1]}) G~^-1"] = lhs - Gt @ (-env[name]) @ Gtinv
    for g in ("T", "Tinv", "H", "Y"):
        lhs = Ginv @ evaluate(antipode_transform(Sym(g), JORDANIAN_ANTIPODE), env, dim) @ G
        rhs = evaluate(antipode_transform(classical_expression(g, dim), CLASSICAL_ANTIPODE), env, dim)
        out[f"G^-1 S({g}) G = S_c({g})"] = lhs - rhs
    return out


def antipode_orientation(two_j):
    """Which orientation of the conjugation holds: 'stated', 'inverse' or 'neither'."""
    for orientation in ("stated", "inverse"):
        if all(r.is_zero() for r in antipode_checks(two_j, orientation).values()):
            return orientation
    return "neither"
