from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from jtk.errors import DialectError, JTKError, NotNilpotentError, ParseError, UnknownNameError
from jtk.expr import (
    CLASSICAL_ANTIPODE,
    JORDANIAN_ANTIPODE,
    Num,
    Sym,
    antipode_transform,
    counit,
    evaluate,
)
from jtk.hpoly import ONE, ZERO
from jtk.maps import builtin_map
from jtk.matrix import identity
from jtk.parser import parse, series_of, to_text
from jtk.reps import jordanian_irrep

SCALAR_CORPUS = [
    '2*tanh(w/2)',
    'sinh(w)',
    '(1/2)*(1 - exp(-2*w))',
    'exp(w) - 1',
    '1 - exp(-w)',
    'w',
    '-w',
    '-w^2 + (1 - w)^-3',
    'w + w^2/2',
    'w - (1/3)*w^3',
    'log1p(w)',
    'arctanh(w)',
    'sqrt1p(w) - 1',
    'cosh(w) - 1',
    'tanh(w)',
    'w*exp(w)',
    'w/(1 + w)',
    '(exp(w) - exp(-w))/2',
    'w^3 - 2*w^2 + w',
    '2*sinh(w/2)',
    'w*(1 + w)^(1/2)',
    '(1 + w)^(3/2) - 1',
    'log1p(w^2) + w',
    'sinh(sinh(w))',
    'w/cosh(w)',
    'exp(w)*sinh(w)',
    '-(1 - exp(w))',
    'w - w^2 + w^3 - w^4',
    '(2/3)*w + (1/3)*sinh(w)',
    'tanh(w/3)*3',
]

MATRIX_CORPUS = [
    'J+*J- - J0',
    'T^-2',
    'T*Y - (1/2)*h*(T*H)^2 - (1/8)*h*(T^2 - 1)',
    'T*Tinv',
    'T*H',
    '-T*Y*Tinv',
    '(1/2)*T*H*(1 - T^-2)',
    'h*J0*J+',
    'exp(h*X)',
    'H*T - T*H',
    'X*Y - Y*X',
    'J0^2 + 2*J+*J- + 2*J-*J+',
    'Y*T + Tinv*Y',
    'log1p(T - 1)',
    '(1/2)*(1 - Tinv^2)',
    'h^2*J+^2',
    '-(T*H*Tinv)',
    'J+ + J- + J0',
    'exp(h*J0*J+)',
    'T^3*Tinv^3',
]


@pytest.mark.parametrize("src", SCALAR_CORPUS)
def test_scalar_round_trip(src):
    assert to_text(parse(src, "scalar").node) == src


@pytest.mark.parametrize("src", MATRIX_CORPUS)
def test_matrix_round_trip(src):
    node = parse(src, "matrix").node
    assert to_text(node) == src
    assert parse(to_text(node), "matrix").node == node


def test_corpus_size():
    assert len(SCALAR_CORPUS) + len(MATRIX_CORPUS) == 50


def test_precedence():
    assert parse("-w^2", "scalar").node == parse("-(w^2)", "scalar").node
    assert parse("1 - 2 - 3", "scalar").node == parse("(1 - 2) - 3", "scalar").node
    assert parse("2*3/4", "scalar").node == parse("(2*3)/4", "scalar").node
    assert to_text(parse("(((w)))", "scalar").node) == "w"


@pytest.mark.parametrize("src, pos", [
    ("w + +", 5),
    ("(w", 3),
    ("w )", 3),
    ("sinh w", 6),
    ("w $ 2", 3),
    ("", 1),
])
def test_syntax_error_positions(src, pos):
    with pytest.raises(ParseError) as info:
        parse(src, "scalar")
    assert info.value.position == pos
    assert f"at position {pos}" in str(info.value)


def test_dialects():
    with pytest.raises(DialectError):
        parse("T*w", "matrix")
    with pytest.raises(DialectError):
        parse("J+ + w", "scalar")
    with pytest.raises(DialectError):
        parse("h*w", "scalar")
    with pytest.raises(ParseError, match="unknown function"):
        parse("sec(w)", "scalar")
    with pytest.raises(ParseError, match="unknown symbol"):
        parse("q", "matrix")


def test_series_of_matches_builtin_phi():
    assert series_of(parse("2*tanh(w/2)", "scalar").node, 10) == builtin_map("diag").phi(10)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.sampled_from(SCALAR_CORPUS), min_size=2, max_size=3), st.sampled_from(["+", "-", "*"]))
def test_printed_combinations_reparse(parts, op):
    src = f" {op} ".join(f"({p})" for p in parts)
    node = parse(src, "scalar").node
    printed = to_text(node)
    assert parse(printed, "scalar").node == node
    assert to_text(parse(printed, "scalar").node) == printed


# evaluation on irreps

def env_for(name, two_j):
    rep = jordanian_irrep(builtin_map(name), two_j)
    return {**rep.generators(), **rep.classical.generators()}, rep


def test_minimal_J_minus_expression():
    env, rep = env_for("minimal", 2)
    node = parse("T*Y - (1/2)*h*(T*H)^2 - (1/8)*h*(T^2 - 1)", "matrix").node
    assert evaluate(node, env) == rep.classical.Jm
    assert evaluate(parse("T*H", "matrix").node, env) == rep.classical.J0


def test_eval_examples():
    env, rep = env_for("contraction", 3)
    assert evaluate(parse("T*Tinv", "matrix").node, env) == identity(4)
    assert evaluate(parse("exp(h*X)", "matrix").node, env) == rep.T
    assert evaluate(parse("T^-2*T^2", "matrix").node, env) == identity(4)
    with pytest.raises(NotNilpotentError):
        evaluate(parse("exp(H)", "matrix").node, env)
    with pytest.raises(UnknownNameError):
        evaluate(Sym("Q"), env)
    with pytest.raises(JTKError):
        evaluate(parse("T/H", "matrix").node, env)


def test_antipode_transform_examples():
    T, Y = Sym("T"), Sym("Y")
    images = JORDANIAN_ANTIPODE
    assert antipode_transform(T * Y, images) == images["Y"] * images["T"]
    assert to_text(antipode_transform(T * Y, images)) == "-(T*Y*Tinv)*Tinv"
    assert antipode_transform(antipode_transform(T, images), images) == T
    assert antipode_transform(Sym("Jp"), CLASSICAL_ANTIPODE) == -Sym("Jp")
    with pytest.raises(UnknownNameError):
        antipode_transform(Sym("Jp"), JORDANIAN_ANTIPODE)


def test_antipode_is_anti_multiplicative_on_matrices():
    env, _ = env_for("diag", 3)
    a = parse("T*H*Y", "matrix").node
    b = parse("Y*X", "matrix").node
    S = lambda n: evaluate(antipode_transform(n, JORDANIAN_ANTIPODE), env)
    assert S(a * b) == S(b) @ S(a)


def test_counit():
    assert counit(parse("T*Tinv + H", "matrix").node) == ONE
    assert counit(parse("Y*T", "matrix").node) == ZERO
    assert counit(parse("exp(h*X)", "matrix").node) == ONE
    assert counit(Num(Fraction(3, 2)) * Sym("h")) == ONE.const(Fraction(3, 2)) * ONE.h()
