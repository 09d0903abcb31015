import pytest

from conftest import ideal
from splitcm.cm import (
    NotCohenMacaulayError,
    cm_report,
    cm_type,
    explain_cm,
    gorenstein_shape,
    homological_summary,
    is_cm,
    is_gorenstein,
    is_level,
    is_principal_or_variables,
    is_pseudo_gorenstein,
    summarize,
)
from splitcm.families import squarefree_veronese
from splitcm.monomial import MonomialIdeal, RingContext
from splitcm.splitting import certify_vertex_splittable


def m_power(n, d):
    return MonomialIdeal(RingContext(n), RingContext(n).monomials_of_degree(d))


def test_is_cm_examples(example_ideal):
    assert is_cm(example_ideal)[0]
    assert not is_cm(ideal(3, "x1*x2", "x1*x3"))[0]
    assert is_cm(ideal(3, "x1*x2*x3"))[0]


def test_example_summary(example_ideal):
    s = summarize(example_ideal)
    assert (s.depth, s.krull_dim, s.projdim, s.reg) == (1, 1, 3, 3)
    assert s.cm and s.cm_type == 3 and not s.level and s.pseudo_gorenstein and not s.gorenstein


def test_i32_summary():
    s = summarize(squarefree_veronese(3, 2))
    assert (s.depth, s.krull_dim, s.projdim, s.reg) == (1, 1, 2, 1)
    s = summarize(ideal(2, "x1*x2"))
    assert (s.depth, s.krull_dim, s.projdim, s.reg) == (1, 1, 1, 1)


def test_cm_type():
    assert cm_type(ideal(3, "x1*x2*x3")) == 1
    assert cm_type(squarefree_veronese(3, 2)) == 2
    assert cm_type(m_power(2, 2)) == 2
    with pytest.raises(NotCohenMacaulayError):
        cm_type(ideal(3, "x1*x2", "x1*x3"))


def test_gorenstein():
    assert is_gorenstein(ideal(3, "x1", "x3"))
    assert is_gorenstein(ideal(3, "x1^3"))
    assert not is_gorenstein(squarefree_veronese(3, 2))
    # complete intersection of mixed shape: Gorenstein, although neither principal nor linear
    I = ideal(2, "x1^2", "x2")
    assert is_gorenstein(I) and gorenstein_shape(I) and not is_principal_or_variables(I)
    assert summarize(I).gorenstein


def test_level_and_pseudo_gorenstein():
    assert is_level(ideal(2, "x1^2")) and is_pseudo_gorenstein(ideal(2, "x1^2"))
    assert is_level(squarefree_veronese(4, 2))
    assert not is_pseudo_gorenstein(m_power(2, 2))
    with pytest.raises(NotCohenMacaulayError):
        is_level(ideal(3, "x1*x2", "x1*x3"))


def test_summary_invariants_on_small_ideals():
    for I in [squarefree_veronese(4, 2), m_power(3, 2), ideal(3, "x1^2", "x1*x2", "x2*x3")]:
        s = summarize(I)
        assert s.cm == (s.depth == s.krull_dim)
        if s.cm:
            assert s.gorenstein == (s.level and s.pseudo_gorenstein) == (s.cm_type == 1)


def test_explanation_tree(example_ideal):
    expl = explain_cm(certify_vertex_splittable(example_ideal), example_ideal.ring)
    assert expl.cm and expl.criterion_applies
    assert expl.depth_colon == expl.depth_sum == 1
    assert expl.colon.cm and expl.outer.cm
    names = set(expl.to_json())
    assert {"cm", "depth", "dim"} <= names
    # a variable generator leaves m^2, the tree records that the criterion was not applied
    sub = explain_cm(certify_vertex_splittable(ideal(3, "x1", "x2*x3")), RingContext(3))
    assert not sub.criterion_applies


def test_cm_report_schema(example_ideal):
    rep = cm_report(example_ideal, explain=True)
    assert set(rep) == {"cm", "depth", "dim", "projdim", "reg", "cm_type", "gorenstein", "level",
                        "pseudo_gorenstein", "explanation"}
    rep = cm_report(ideal(3, "x1*x2", "x1*x3"))
    assert set(rep) == {"cm", "depth", "dim", "projdim", "reg", "gorenstein"}
    assert rep["cm"] is False


def test_homological_summary_json(example_ideal):
    s = homological_summary(certify_vertex_splittable(example_ideal), example_ideal.ring)
    assert s.to_json()["cm_type"] == 3
