import pytest

from conftest import ideal
from splitcm.betti import GradedBettiTable
from splitcm.monomial import MonomialIdeal, RingContext
from splitcm.oracle import (
    FieldSpec,
    SimplicialComplex,
    alexander_dual,
    depth_oracle,
    dim_oracle,
    is_cm_oracle,
    is_vertex_decomposable,
    koszul_betti,
    minimal_primes,
    minimal_transversals,
    oracle_betti,
    oracle_summary,
    reduced_homology,
    taylor_betti,
)


@pytest.mark.parametrize("p", [2, 3, 32003])
@pytest.mark.parametrize(
    "n, gens, expected",
    [
        (3, ["x1*x2", "x2*x3"], {(0, 2): 2, (1, 3): 1}),
        (2, ["x1", "x2"], {(0, 1): 2, (1, 2): 1}),
        (3, ["x1*x2*x3"], {(0, 3): 1}),
    ],
)
def test_taylor_examples(n, gens, expected, p):
    I = ideal(n, *gens)
    assert taylor_betti(I, p) == GradedBettiTable(expected)
    assert koszul_betti(I, p) == GradedBettiTable(expected)


def test_taylor_and_koszul_agree_non_squarefree(example_ideal):
    assert taylor_betti(example_ideal, 2) == koszul_betti(example_ideal, 2)
    assert oracle_betti(example_ideal, method="koszul") == oracle_betti(example_ideal, method="taylor")


def test_field_dependent_resolution():
    # Stanley-Reisner ideal of the 6-vertex real projective plane: Betti numbers depend on char 2
    facets = [(1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 2, 6), (2, 3, 5), (2, 4, 5), (2, 4, 6), (3, 4, 6), (3, 5, 6)]
    I = SimplicialComplex.from_faces(6, facets).stanley_reisner_ideal()
    assert koszul_betti(I, 2) != koszul_betti(I, 3)
    assert depth_oracle(I, 3) == dim_oracle(I) and depth_oracle(I, 2) < dim_oracle(I)


def test_field_spec():
    assert FieldSpec(32003).characteristic == 32003
    with pytest.raises(ValueError):
        FieldSpec(4)


def test_reduced_homology_of_spheres():
    circle = [frozenset(), *(frozenset([i]) for i in range(3)), frozenset({0, 1}), frozenset({1, 2}), frozenset({0, 2})]
    assert reduced_homology(circle, 2) == {1: 1}
    assert reduced_homology([frozenset()], 2) == {-1: 1}


def test_depth_dim_cm(example_ideal):
    assert depth_oracle(example_ideal) == 1 and is_cm_oracle(example_ideal)
    I = ideal(3, "x1*x2", "x1*x3")
    assert depth_oracle(I) == 1 and not is_cm_oracle(I)
    m2 = MonomialIdeal(RingContext(3), RingContext(3).monomials_of_degree(2))
    assert depth_oracle(m2) == 0 and is_cm_oracle(m2)
    assert minimal_primes(I) == [frozenset({1}), frozenset({2, 3})]
    assert oracle_summary(example_ideal).cm_type == 3


def test_alexander_dual():
    assert alexander_dual(ideal(2, "x1*x2")) == ideal(2, "x1", "x2")
    tri = ideal(3, "x1*x2", "x1*x3", "x2*x3")
    assert alexander_dual(tri) == tri
    assert alexander_dual(ideal(2, "x1", "x2")) == ideal(2, "x1*x2")
    assert sorted(map(sorted, minimal_transversals([frozenset({1, 2}), frozenset({2, 3})]))) == [[1, 3], [2]]


def test_simplicial_complex_operations():
    path = SimplicialComplex.from_faces(4, [(1, 2), (2, 3), (3, 4)])
    assert path.deletion(2).facets == frozenset({frozenset({1}), frozenset({3, 4})})
    assert path.link(2).facets == frozenset({frozenset({1}), frozenset({3})})
    assert path.stanley_reisner_ideal() == ideal(4, "x1*x3", "x1*x4", "x2*x4")
    assert path.alexander_dual().alexander_dual() == path


@pytest.mark.parametrize(
    "n, facets, expected",
    [
        (3, [(1, 2, 3)], True),
        (4, [(1, 2), (2, 3), (3, 4)], True),
        (4, [(1, 2), (3, 4)], False),
        (1, [()], True),
    ],
)
def test_vertex_decomposable(n, facets, expected):
    assert is_vertex_decomposable(SimplicialComplex.from_faces(n, facets)) is expected
