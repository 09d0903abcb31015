import pytest

from conftest import EXAMPLE_GENS, ideal
from splitcm.monomial import (
    Monomial,
    MonomialIdeal,
    ParseError,
    RingContext,
    RingMismatchError,
    add_variable,
    colon_by_variable,
    contains,
    degree_component,
    is_subideal,
    krull_dim_quotient,
    minimalize,
    parse_ideal,
    parse_monomial,
)


def m(n, s):
    return parse_monomial(s, n)


def test_monomial_arithmetic():
    u, v = m(3, "x1^2*x3"), m(3, "x1*x2")
    assert (u * v).exponents == (3, 1, 1)
    assert u.lcm(v).exponents == (2, 1, 1)
    assert u.gcd(v).exponents == (1, 0, 0)
    assert u.colon(v).exponents == (1, 0, 1)
    assert u.degree == 3 and u.deg(1) == 2
    assert str(u) == "x1^2*x3" and str(Monomial((0, 0))) == "1"
    assert m(3, "x1*x3").is_squarefree() and not u.is_squarefree()
    assert v.divides(u * v) and not v.divides(u)


@pytest.mark.parametrize(
    "gens, expected",
    [
        (["x1", "x1*x2"], ["x1"]),
        ([], []),
        (["x1^2*x3", "x1*x3", "x3^2"], ["x1*x3", "x3^2"]),
    ],
)
def test_minimalize(gens, expected):
    I = minimalize([m(3, g) for g in gens], RingContext(3))
    assert sorted(map(str, I.gens)) == sorted(expected)
    assert I == ideal(3, *expected)


def test_minimalize_removes_duplicates_and_sorts():
    I = ideal(2, "x2", "x1", "x2", "x1*x2")
    assert I.gens == (m(2, "x2"), m(2, "x1"))  # lex order on exponent tuples
    assert len(I.gens) == 2


def test_contains():
    assert contains(ideal(2, "x1*x2"), m(2, "x1^2*x2"))
    assert not contains(ideal(2, "x1"), m(2, "x2"))
    assert contains(ideal(3, "x2^2", "x3"), m(3, "x2*x3"))
    assert m(3, "x2*x3") in ideal(3, "x3")


def test_is_subideal():
    assert is_subideal(ideal(3, "x2*x3"), ideal(3, "x2", "x3"))
    assert not is_subideal(ideal(2, "x2^2"), ideal(2, "x1"))
    assert is_subideal(MonomialIdeal.zero(RingContext(2)), ideal(2, "x1"))
    with pytest.raises(RingMismatchError):
        is_subideal(ideal(2, "x1"), ideal(3, "x1"))


def test_colon_and_sum():
    assert colon_by_variable(ideal(2, "x1^2", "x1*x2"), 1) == ideal(2, "x1", "x2")
    assert colon_by_variable(ideal(3, "x2*x3"), 1) == ideal(3, "x2*x3")
    assert colon_by_variable(ideal(3, "x1*x2", "x2*x3"), 2) == ideal(3, "x1", "x3")
    assert add_variable(ideal(3, "x1*x2", "x2*x3"), 1) == ideal(3, "x1", "x2*x3")
    assert add_variable(MonomialIdeal.zero(RingContext(2)), 1) == ideal(2, "x1")
    assert add_variable(ideal(2, "x1"), 1) == ideal(2, "x1")
    with pytest.raises(IndexError):
        colon_by_variable(ideal(2, "x1"), 3)


def test_degree_component():
    assert degree_component(ideal(2, "x1"), 2) == ideal(2, "x1^2", "x1*x2")
    assert degree_component(ideal(2, "x1^2"), 1).is_zero()
    assert degree_component(ideal(4, *EXAMPLE_GENS), 2) == ideal(4, "x1^2", "x1*x3", "x3^2")


def test_krull_dim():
    assert krull_dim_quotient(ideal(3, "x1*x2", "x2*x3")) == 2
    assert krull_dim_quotient(MonomialIdeal.maximal(RingContext(4))) == 0
    assert krull_dim_quotient(ideal(4, *EXAMPLE_GENS)) == 1
    assert krull_dim_quotient(MonomialIdeal.zero(RingContext(3))) == 3
    with pytest.raises(ValueError):
        krull_dim_quotient(MonomialIdeal.unit(RingContext(2)))


def test_predicates():
    R = RingContext(3)
    assert MonomialIdeal.zero(R).is_zero() and MonomialIdeal.unit(R).is_unit()
    assert ideal(3, "x1", "x3").is_generated_by_variables()
    assert ideal(3, "x1*x2").is_principal()
    assert ideal(3, "x1^2", "x2*x3").in_square_of_maximal()
    assert not ideal(3, "x1", "x2*x3").in_square_of_maximal()
    assert ideal(4, *EXAMPLE_GENS).effective_num_vars() == 4
    assert ideal(4, "x1*x2").effective_num_vars() == 2


def test_parse_and_text_roundtrip():
    text = "# sample\nring 3\nx1^2*x3   # comment\nx2\n\n"
    I = parse_ideal(text)
    assert I == ideal(3, "x1^2*x3", "x2")
    assert parse_ideal(I.to_text()) == I
    assert parse_ideal("ring 2\n1\n").is_unit()
    assert str(ideal(3, "x1^2*x3", "x2")) == "(x1^2*x3, x2)"


@pytest.mark.parametrize(
    "text",
    ["", "ring\nx1", "ring 0", "ring 2\nx3", "ring 2\ny1", "ring 2\nx1*", "rings 2\nx1", "ring 2\nx1^a"],
)
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_ideal(text)


def test_ring_mismatch_on_sum():
    with pytest.raises(RingMismatchError):
        ideal(2, "x1") + ideal(3, "x1")
    assert ideal(2, "x1") + ideal(2, "x2") == ideal(2, "x1", "x2")
