import pytest

from jtk.errors import JTKError
from jtk.hpoly import H
from jtk.maps import BUILTIN_NAMES, builtin_map
from jtk.matrix import PolyMatrix, identity
from jtk.reps import (
    classical_irrep,
    classical_relation_residuals,
    commutator_identity_residuals,
    jordanian_irrep,
    jordanian_relation_residuals,
    reconstruct_classical,
    sample_functions,
    verify_jordanian_relations,
)


def zero(residuals):
    return [k for k, r in residuals.items() if not r.is_zero()]


@pytest.mark.parametrize("two_j", range(8))
def test_classical_irrep(two_j):
    c = classical_irrep(two_j)
    assert c.dim == two_j + 1
    assert zero(classical_relation_residuals(c.Jp, c.Jm, c.J0)) == []
    assert c.J0[0, 0] == two_j


def test_bad_spin():
    with pytest.raises(JTKError, match="2j"):
        classical_irrep(-1)


@pytest.mark.parametrize("name", BUILTIN_NAMES)
@pytest.mark.parametrize("two_j", range(8))
def test_relations_and_round_trip(name, two_j):
    rep = jordanian_irrep(builtin_map(name), two_j)
    assert zero(verify_jordanian_relations(rep)) == []
    _, diffs = reconstruct_classical(builtin_map(name), rep)
    assert zero(diffs) == []


@pytest.mark.parametrize("name", BUILTIN_NAMES)
@pytest.mark.parametrize("two_j", [1, 3, 4])
def test_commutator_identities(name, two_j):
    rep = jordanian_irrep(builtin_map(name), two_j)
    t_funcs, z_funcs = sample_functions(rep.dim)
    assert zero(commutator_identity_residuals(rep, t_funcs, z_funcs)) == []


def test_spin_half_diag_by_hand():
    # z^2 = 0, so T = 1 + hJ+, H = J0, Y = J- on spin 1/2
    rep = jordanian_irrep(builtin_map("diag"), 1)
    assert rep.T.to_rows() == [[1, H], [0, 1]]
    assert rep.H == rep.classical.J0
    assert rep.Y == rep.classical.Jm


@pytest.mark.parametrize("name", BUILTIN_NAMES)
def test_classical_limit(name):
    rep = jordanian_irrep(builtin_map(name), 4)
    c = rep.classical
    assert rep.T.eval_h0().is_identity()
    assert rep.H.eval_h0() == c.J0
    assert rep.Y.eval_h0() == c.Jm
    assert rep.X.eval_h0() == c.Jp


def test_relations_catch_a_perturbation():
    rep = jordanian_irrep(builtin_map("minimal"), 2)
    bad_H = rep.H + PolyMatrix.from_rows([[0, 0, 0], [0, 0, H], [0, 0, 0]])
    assert zero(jordanian_relation_residuals(rep.T, rep.Tinv, bad_H, rep.Y, rep.X))
    assert (rep.T @ rep.Tinv) == identity(3)
