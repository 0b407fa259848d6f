from fractions import Fraction
from itertools import permutations

import pytest

from jtk.errors import NormalizationError, OrderError
from jtk.maps import BUILTIN_NAMES, builtin_map
from jtk.reps import classical_irrep, forward_images, jordanian_irrep
from jtk.similarity import (
    SimilaritySeries,
    U_from_mu,
    build_U,
    compose_flows,
    flow_image,
    lambda_oracle,
    lambda_solve,
    mu_from_lambda,
    solve_similarity,
    target_series,
)
from jtk.matrix import inverse_unipotent
from jtk.series import WSeries

PAIRS = list(permutations(BUILTIN_NAMES, 2))


def binom_half(k):
    c = Fraction(1)
    for i in range(k):
        c = c * (Fraction(1, 2) - i) / (i + 1)
    return c


def test_target_series_contraction_to_minimal():
    # z(-z + sqrt(1 + z^2)) = z - z^2 + sum_k binom(1/2, k) z^(2k+1)
    expected = [Fraction(0)] * 12
    expected[1] += 1
    expected[2] -= 1
    for k in range(1, 6):
        expected[2 * k + 1] += binom_half(k)
    assert list(target_series("contraction", "minimal", 12).coefficients) == expected


def test_target_series_diag_to_minimal():
    # z/(1 + z/2)^2
    expected = [Fraction(0)] + [(k + 1) * Fraction(-1, 2) ** k for k in range(11)]
    assert list(target_series("diag", "minimal", 12).coefficients) == expected


@pytest.mark.parametrize("name", BUILTIN_NAMES)
def test_target_series_identity(name):
    assert target_series(name, name, 10) == WSeries.variable(10)


def test_reference_coefficients():
    lam = solve_similarity("contraction", "minimal", 5)
    assert lam.coefficients == (Fraction(1, 2), Fraction(1, 4), Fraction(1, 8), Fraction(1, 24), Fraction(-1, 96))


def test_identity_rho_gives_zero_lambda():
    z = WSeries.variable(10)
    assert lambda_solve(z, 8).coefficients == (0,) * 8
    assert lambda_oracle(z, 8).coefficients == (0,) * 8


@pytest.mark.parametrize("source, target", PAIRS)
def test_flow_solver_agrees_with_oracle(source, target):
    rho = target_series(source, target, 10)
    lam = lambda_solve(rho, 8)
    assert lambda_oracle(rho, 8).coefficients == lam.coefficients
    assert flow_image(lam.coefficients, 10) == list(rho.coefficients)


def test_oracle_is_spin_independent():
    rho = target_series("diag", "minimal", 12)
    assert lambda_oracle(rho, 6).coefficients == lambda_oracle(rho, 6, dim=10).coefficients


def test_bad_rho():
    with pytest.raises(NormalizationError):
        lambda_solve(WSeries([0, 2, 1, 0, 0]), 3)
    with pytest.raises(OrderError):
        lambda_solve(WSeries([0, 1, 1]), 3)


@pytest.mark.parametrize("a, b, c", [("contraction", "diag", "minimal"), ("simple-plus", "minimal", "diag"),
                                     ("diag", "simple-minus", "contraction")])
def test_transitivity(a, b, c):
    n = 7
    ab = lambda_solve(target_series(a, b, n + 2), n)
    bc = lambda_solve(target_series(b, c, n + 2), n)
    ac = lambda_solve(target_series(a, c, n + 2), n)
    assert compose_flows(ab, bc, n + 2) == flow_image(ac.coefficients, n + 2)


def test_mu_zero_and_leading_term():
    assert all(d == 0 for d in mu_from_lambda(SimilaritySeries("", "", (0,) * 4)).coefficients)
    mu = mu_from_lambda(solve_similarity("contraction", "minimal", 6))
    assert mu.coefficients[0] == 0
    assert mu.coefficients[1] == Fraction(1, 2)


@pytest.mark.parametrize("name", ["contraction", "diag", "simple-plus"])
@pytest.mark.parametrize("two_j", [2, 3, 4])
def test_U_conjugates_and_matches_mu(name, two_j):
    m = builtin_map(name)
    lam = solve_similarity(m, "minimal", 6)
    rep = jordanian_irrep(m, two_j)
    c = rep.classical
    U = build_U(lam, classical=c)
    Uinv = inverse_unipotent(U)
    jmin = forward_images(builtin_map("minimal"), rep.T, rep.H, rep.Y)
    for x, y in zip(jmin, (c.Jp, c.J0, c.Jm)):
        assert x == U @ y @ Uinv
    assert U_from_mu(mu_from_lambda(lam), rep.T, rep.H) == U
    # the same U carries the target map's Jordanian generators to the source map's
    target = jordanian_irrep(builtin_map("minimal"), two_j)
    assert U @ target.T @ Uinv == rep.T
    assert U @ target.Y @ Uinv == rep.Y


def test_build_U_limits():
    c = classical_irrep(3)
    assert build_U(SimilaritySeries("", "", (0, 0, 0)), classical=c).is_identity()
    lam = solve_similarity("diag", "minimal", 4)
    assert build_U(lam, classical=c).eval_h0().is_identity()
    with pytest.raises(OrderError):
        build_U(SimilaritySeries("", "", (1,)), classical=c)
