import random
from fractions import Fraction

import pytest

from jtk.errors import NormalizationError, UnknownNameError
from jtk.maps import (
    BUILTIN_NAMES,
    CLOSED_FORM_NAMES,
    ForwardSolution,
    builtin_map,
    closed_form_reference,
    expression_map,
    polynomial_map,
    resolve_map,
    seven_equation_residuals,
    solve_forward,
    solve_inverse,
)
from jtk.series import WSeries


def random_phis(count=20, seed=7):
    rng = random.Random(seed)
    out = []
    for i in range(count):
        tail = [Fraction(rng.randint(-9, 9), rng.randint(1, 6)) for _ in range(rng.randint(1, 6))]
        out.append(polynomial_map([0, 1] + tail, name=f"random{i}"))
    return out


@pytest.mark.parametrize("name", CLOSED_FORM_NAMES)
def test_forward_matches_closed_forms(name):
    assert solve_forward(builtin_map(name), 12) == closed_form_reference(name, 12)


@pytest.mark.parametrize("name", BUILTIN_NAMES)
def test_seven_equations_vanish_builtin(name):
    m = builtin_map(name)
    for r in seven_equation_residuals(m, solve_forward(m, 12)):
        assert r.is_zero()


@pytest.mark.parametrize("m", random_phis(), ids=lambda m: m.name)
def test_seven_equations_vanish_random(m):
    assert all(r.is_zero() for r in seven_equation_residuals(m, solve_forward(m, 12)))


def test_seven_equations_detect_a_perturbation():
    m = builtin_map("contraction")
    sol = solve_forward(m, 12)
    bad = ForwardSolution(sol.F2, sol.F3, sol.Ubar + WSeries([0, 0, 1], 12), sol.Vbar, sol.Wbar)
    assert not all(r.is_zero() for r in seven_equation_residuals(m, bad))


def test_minimal_g1_is_binomial():
    # T = (1 - 2 z)^(-1/2) for the minimal map
    g1 = solve_inverse(builtin_map("minimal"), 5).g1
    assert list(g1.coefficients) == [1, 1, Fraction(3, 2), Fraction(5, 2), Fraction(35, 8)]


def test_expression_map_matches_builtin():
    for name in BUILTIN_NAMES:
        m = builtin_map(name)
        assert expression_map(m.expression).phi(10) == m.phi(10)


def test_expression_map_with_pole_cancellation():
    m = expression_map("sinh(w)/w*w")
    assert m.phi(5) == WSeries([0, 1, 0, Fraction(1, 6), 0])


def test_normalization_errors():
    with pytest.raises(NormalizationError, match="phi'\\(0\\)"):
        polynomial_map([0, 2])
    with pytest.raises(NormalizationError, match="phi\\(0\\)"):
        expression_map("exp(w)")


def test_resolve_map_sources(tmp_path):
    path = tmp_path / "mine.phi"
    path.write_text("2*tanh(w/2)\n")
    m = resolve_map(str(path))
    assert m.name == "mine"
    assert m.phi(8) == builtin_map("diag").phi(8)
    with pytest.raises(UnknownNameError):
        resolve_map("no-such-map")
