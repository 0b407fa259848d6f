from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from jtk.errors import NotDivisibleError, NotNilpotentError, OrderError, ShapeError
from jtk.hpoly import H, HPoly
from jtk.matrix import (
    PolyMatrix,
    apply_series,
    flip_perm,
    identity,
    inverse_unipotent,
    kron,
    mat_div_h_checked,
    mat_exp_nilpotent,
    mat_log_unipotent,
    nilpotency_index,
)
from jtk.series import WSeries, elementary

small = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def strictly_upper(draw, n=None):
    n = n or draw(st.integers(2, 5))
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            rows[i][j] = HPoly(draw(st.lists(small, max_size=3)))
    return PolyMatrix.from_rows(rows)


def test_matmul_and_identity():
    a = PolyMatrix.from_rows([[1, H], [0, 2]])
    assert a @ identity(2) == a
    assert (a @ a).to_rows() == [[1, H * 3], [0, 4]]
    with pytest.raises(ShapeError):
        a @ identity(3)


def test_kron_and_flip():
    a = PolyMatrix.from_rows([[1, 2], [3, 4]])
    b = PolyMatrix.from_rows([[0, 1, 0], [0, 0, 1], [1, 0, 0]])
    ab, ba = kron(a, b), kron(b, a)
    assert ab.rows == 6 and ab.tensor_shape == (2, 3)
    P, Pinv = flip_perm(2, 3), flip_perm(3, 2)
    assert (P @ Pinv).is_identity()
    assert P @ ab @ Pinv == ba


def test_nilpotency_index():
    j = PolyMatrix.from_rows([[0, 1, 0], [0, 0, 1], [0, 0, 0]])
    assert nilpotency_index(j) == 3
    assert nilpotency_index(PolyMatrix.zeros(3)) == 1
    with pytest.raises(NotNilpotentError):
        nilpotency_index(identity(2))


def test_apply_series_needs_enough_terms():
    j = PolyMatrix.from_rows([[0, 1, 0], [0, 0, 1], [0, 0, 0]])
    with pytest.raises(OrderError):
        apply_series(WSeries([1, 1]), j)
    e = apply_series(elementary("exp", 3), j)
    assert e.to_rows() == [[1, 1, Fraction(1, 2)], [0, 1, 1], [0, 0, 1]]


@settings(max_examples=40, deadline=None)
@given(strictly_upper())
def test_exp_log_inverse(n):
    u = mat_exp_nilpotent(n)
    assert mat_log_unipotent(u) == n
    assert (u @ inverse_unipotent(u)).is_identity()
    assert (u @ mat_exp_nilpotent(-n)).is_identity()


def test_div_h_checked_reports_entry():
    m = PolyMatrix.from_rows([[H, 1], [0, H * H]])
    with pytest.raises(NotDivisibleError, match="entry \\(0,1\\)"):
        mat_div_h_checked(m, 1)
    assert mat_div_h_checked(PolyMatrix.from_rows([[H, H * H]]), 1).to_rows() == [[1, H]]


def test_json_schema_and_round_trip():
    assert identity(2).to_json() == '{"rows":2,"cols":2,"entries":[[[[0,"1/1"]],[]],[[],[[0,"1/1"]]]]}'
    m = PolyMatrix.from_rows([[HPoly([0, Fraction(1, 3)]), -2], [H * H, 0]])
    assert PolyMatrix.from_json(m.to_json()) == m


def test_eval_h0_and_stats():
    m = PolyMatrix.from_rows([[1 + H, H * H], [0, 3]])
    assert m.eval_h0().to_rows() == [[1, 0], [0, 3]]
    assert m.max_degree() == 2
    assert m.nonzero_count() == 3
