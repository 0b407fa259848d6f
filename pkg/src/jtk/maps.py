"""Classical <-> Jordanian generator maps from a single defining series.

A map is fixed by phi with h*J+ = phi(h*X) and phi(0) = 0, phi'(0) = 1.
Writing T = exp(w), w = h*X, every auxiliary function of the forward map

    J+ = phi(w)/h,  J0 = F2(w) H,  J- = F3(w) Y + h (U(w) + V(w) H + W(w) H^2)

and of the inverse map (z = h*J+, g1 = exp(psi(z)), psi the reversion of phi)

    T = g1(z),  H = G2(z) J0,  Y = G3(z) J- + h (A(z) + B(z) J0 + C(z) J0^2)

is an h-free series in one variable.  d/dT becomes exp(-w) d/dw and d/dJ+
becomes h d/dz, with the powers of h cancelled by hand.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .errors import NormalizationError, UnknownNameError
from .series import WSeries, elementary, series_compose, series_deriv_T, series_revert

EXTRA_ORDER = 3


def exp_series(k, order):
    """exp(k*w)."""
    return elementary("exp", order).scale_variable(k)


@dataclass(frozen=True)
class MapSpec:
    name: str
    phi_fn: Callable[[int], WSeries]
    expression: Optional[str] = None

    def phi(self, order):
        s = self.phi_fn(order)
        if s.order < order:
            raise NormalizationError(f"map {self.name!r} produced phi of order {s.order} < {order}")
        return s.truncate(order)

    def validate(self):
        s = self.phi(2)
        if s[0] != 0:
            raise NormalizationError(f"map {self.name!r}: phi(0) = {s[0]}, must be 0")
        if s[1] != 1:
            raise NormalizationError(f"map {self.name!r}: phi'(0) = {s[1]}, must be 1")
        return self


def _phi_diag(n):
    return elementary("tanh", n).scale_variable(Fraction(1, 2)) * 2


def _phi_contraction(n):
    return elementary("sinh", n)


def _phi_minimal(n):
    return (1 - exp_series(-2, n)) * Fraction(1, 2)


def _phi_simple_plus(n):
    return exp_series(1, n) - 1


def _phi_simple_minus(n):
    return 1 - exp_series(-1, n)


_BUILTINS = {
    "diag": (_phi_diag, "2*tanh(w/2)"),
    "contraction": (_phi_contraction, "sinh(w)"),
    "minimal": (_phi_minimal, "(1/2)*(1 - exp(-2*w))"),
    "simple-plus": (_phi_simple_plus, "exp(w) - 1"),
    "simple-minus": (_phi_simple_minus, "1 - exp(-w)"),
}

BUILTIN_NAMES = tuple(_BUILTINS)


def builtin_map(name):
    try:
        fn, text = _BUILTINS[name]
    except KeyError:
        raise UnknownNameError(f"unknown map {name!r}; builtins are {', '.join(BUILTIN_NAMES)}") from None
    return MapSpec(name, fn, text)


def polynomial_map(coefficients, name="custom"):
    """Map whose phi is the polynomial sum_k coefficients[k] w**k."""
    coefficients = tuple(Fraction(c) for c in coefficients)
    return MapSpec(name, lambda n: WSeries(coefficients[:n], n)).validate()


def expression_map(text, name="custom"):
    """Map whose phi is given by an expression in ``w``."""
    from .parser import parse_expression, series_of

    tree = parse_expression(text, dialect="scalar")

    def phi(n):
        working = n
        while True:
            s = series_of(tree, working)
            if s.order >= n:
                return s.truncate(n)
            working += n - s.order

    return MapSpec(name, phi, text).validate()


def resolve_map(spec):
    """Builtin name, path to a file holding a phi expression, or a MapSpec."""
    if isinstance(spec, MapSpec):
        return spec
    if spec in _BUILTINS:
        return builtin_map(spec)
    from pathlib import Path

    path = Path(spec)
    if path.is_file():
        return expression_map(path.read_text().strip(), name=path.stem)
    raise UnknownNameError(f"unknown map {spec!r}: not a builtin name or a readable file")


@dataclass(frozen=True)
class ForwardSolution:
    F2: WSeries
    F3: WSeries
    Ubar: WSeries
    Vbar: WSeries
    Wbar: WSeries

    @property
    def order(self):
        return min(s.order for s in self.series())

    def series(self):
        return (self.F2, self.F3, self.Ubar, self.Vbar, self.Wbar)

    def truncate(self, n):
        return ForwardSolution(*(s.truncate(n) for s in self.series()))


@dataclass(frozen=True)
class InverseSolution:
    psi: WSeries
    g1: WSeries
    G2: WSeries
    G3: WSeries
    Abar: WSeries
    Bbar: WSeries
    Cbar: WSeries

    def series(self):
        return (self.psi, self.g1, self.G2, self.G3, self.Abar, self.Bbar, self.Cbar)

    @property
    def order(self):
        return min(s.order for s in self.series())

    def truncate(self, n):
        return InverseSolution(*(s.truncate(n) for s in self.series()))


def _sinh_cosh(n):
    e, em = exp_series(1, n), exp_series(-1, n)
    return (e - em) * Fraction(1, 2), (e + em) * Fraction(1, 2)


def solve_forward(map_spec, order):
    """Solve for (F2, F3, U, V, W) given phi, exact to ``order``."""
    n = order + EXTRA_ORDER
    phi = map_spec.phi(n)
    phi_w = phi.derivative()
    sinh, cosh = _sinh_cosh(n)
    F2 = (phi * 2) / (sinh * 2 * phi_w)
    F3 = sinh / phi
    Ubar = -(sinh * sinh) / (phi * 4)
    # F2/phi alone has a pole; cosh - F2 vanishes at 0 and cancels it
    Vbar = (F2.derivative() / phi_w + (cosh - F2) / phi) * Fraction(-1, 2)
    Wbar = (1 - F2 * F2) / (phi * 4)
    return ForwardSolution(F2, F3, Ubar, Vbar, Wbar).truncate(order)


def solve_inverse(map_spec, order):
    """Solve for (psi, g1, G2, G3, A, B, C), exact to ``order``."""
    n = order + EXTRA_ORDER
    phi = map_spec.phi(n)
    psi = series_revert(phi)
    g1 = series_compose(elementary("exp", n), psi)
    g1_z = g1.derivative()
    z = WSeries.variable(n)
    g1_sq_m1 = g1 * g1 - 1
    G2 = g1_sq_m1 / (z * 2 * g1_z)
    G3 = (z * 2 * g1) / g1_sq_m1
    Abar = (g1 - 1 / g1) * Fraction(1, 8)
    Cbar = (g1 * (1 - G2 * G2)) / (g1_sq_m1 * 2)
    Bbar = -(Cbar * 2 + (g1 / g1_z).derivative() * G2 * Fraction(1, 2))
    return InverseSolution(psi, g1, G2, G3, Abar, Bbar, Cbar).truncate(order)


def seven_equation_residuals(map_spec, sol):
    """Residual series of the seven coupled equations for the forward map.

    Each equation has been divided by its overall power of h.  The residuals
    are exact to the order they carry (two less than the solution's order,
    because of second derivatives).
    """
    n = sol.order
    phi = map_spec.phi(n + 1)
    F2, F3, U, V, W = sol.series()
    D = series_deriv_T
    E1, E2 = exp_series(1, n), exp_series(2, n)
    Em1, Em2 = exp_series(-1, n), exp_series(-2, n)
    E2m1 = E2 - 1
    Dphi = D(phi)
    DF2, DF3 = D(F2), D(F3)
    half, quarter = Fraction(1, 2), Fraction(1, 4)
    return [
        E2m1 * F2 * Dphi - phi * 2,
        E1 * F3 * Dphi - W * 2 * E2m1 * Dphi - F2,
        F3 * half * D(E1 * Dphi) - V * Dphi - W * D(E2m1 * Dphi),
        F2 * (E2m1 * DF3 - (E1 + Em1) * F3) + F3 * 2,
        E2m1 * F2 * ((1 + Em2) * F3 * quarter + D(U)) + U * 2,
        E1 * F3 * DF2 + E2m1 * (F2 * D(W) - W * 2 * DF2) + W * 2,
        E2m1 * (F3 * half * (F2 + E1 * D(E1 * DF2)) * Em1
                - (V * DF2 - F2 * D(V)) - W * D(E2m1 * DF2)) + V * 2,
    ]


CLOSED_FORM_NAMES = ("diag", "contraction", "minimal")


def closed_form_reference(name, order):
    """Tabulated closed forms, expanded from elementary series only."""
    n = order + 1
    E1, E2, Em1 = exp_series(1, n), exp_series(2, n), exp_series(-1, n)
    one = WSeries.constant(1, n)
    half = Fraction(1, 2)
    if name == "minimal":
        sol = ForwardSolution(E1, E1, -(E2 - 1) * Fraction(1, 8), -(E2 - 1) * E1 * half, -E2 * half)
    elif name == "diag":
        c = (exp_series(half, n) + exp_series(-half, n)) * half
        f3 = c * c
        sol = ForwardSolution(one, f3, -f3 * (E1 - Em1) * Fraction(1, 8), -(E1 - Em1) * Fraction(1, 8),
                              WSeries.zero(n))
    elif name == "contraction":
        s, c = E1 - Em1, E1 + Em1
        sol = ForwardSolution(2 / c, one, -s * Fraction(1, 8), -((s / c) ** 3) * half, s / (c * c) * half)
    else:
        raise UnknownNameError(f"no closed form tabulated for {name!r}; choose from {', '.join(CLOSED_FORM_NAMES)}")
    return sol.truncate(order)
