import pytest

from conftest import EXAMPLE_GENS, ideal
from splitcm.betti import GradedBettiTable
from splitcm.monomial import MonomialIdeal, RingContext
from splitcm.oracle import taylor_betti
from splitcm.splitting import (
    LeafPrincipal,
    LeafUnit,
    LeafZero,
    Node,
    NotVertexSplittableError,
    admissible_splitting_vertices,
    betti_table,
    certificate_from_json,
    certificate_size,
    certificate_to_json,
    certify_vertex_splittable,
    depth_quotient,
    format_certificate,
    is_vertex_splittable,
    linear_quotients_order,
    reconstruct,
    reg_quotient,
    require_certificate,
    try_split_at,
)


def test_try_split_at():
    I1, I2 = try_split_at(ideal(3, "x1*x2", "x1*x3", "x2*x3"), 1)
    assert I1 == ideal(3, "x2", "x3") and I2 == ideal(3, "x2*x3")
    assert try_split_at(ideal(2, "x1^2", "x2^2"), 1) is None
    I1, I2 = try_split_at(ideal(3, "x1*x2", "x1*x3"), 2)
    assert I1 == ideal(3, "x1") and I2 == ideal(3, "x1*x3")
    # I_2 = 0 is allowed
    I1, I2 = try_split_at(ideal(3, "x1*x2", "x1*x3"), 1)
    assert I1 == ideal(3, "x2", "x3") and I2.is_zero()
    assert try_split_at(ideal(3, "x1*x2"), 3) is None


def test_certify_leaves():
    R = RingContext(2)
    assert isinstance(certify_vertex_splittable(ideal(2, "x1*x2")), LeafPrincipal)
    assert isinstance(certify_vertex_splittable(MonomialIdeal.zero(R)), LeafZero)
    assert isinstance(certify_vertex_splittable(MonomialIdeal.unit(R)), LeafUnit)
    assert certify_vertex_splittable(ideal(2, "x1^2", "x2^2")) is None
    assert not is_vertex_splittable(ideal(2, "x1^2", "x2^2"))
    with pytest.raises(NotVertexSplittableError):
        require_certificate(ideal(2, "x1^2", "x2^2"))


def test_example_ideal_certificate(example_ideal):
    cert = certify_vertex_splittable(example_ideal)
    assert isinstance(cert, Node)
    assert reconstruct(cert, example_ideal.ring) == example_ideal
    assert certificate_size(cert) >= 3
    assert "x1*I1 + I2" in format_certificate(cert, example_ideal.ring)


def test_certificate_json_roundtrip(example_ideal):
    cert = certify_vertex_splittable(example_ideal)
    assert certificate_from_json(certificate_to_json(cert)) == cert


def test_reconstruct_rejects_bad_certificate():
    bad = Node(1, LeafPrincipal(ideal(2, "x2").gens[0]), LeafPrincipal(ideal(2, "x2^2").gens[0]))
    # x2^2 is in (x2) so this is fine; now make I_2 escape I_1
    reconstruct(bad, RingContext(2))
    worse = Node(1, LeafPrincipal(ideal(2, "x2^2").gens[0]), LeafPrincipal(ideal(2, "x2").gens[0]))
    with pytest.raises(ValueError):
        reconstruct(worse, RingContext(2))


@pytest.mark.parametrize(
    "n, gens, expected",
    [
        (2, ["x1", "x2"], {(0, 1): 2, (1, 2): 1}),
        (3, ["x1*x2", "x2*x3"], {(0, 2): 2, (1, 3): 1}),
        (3, ["x1*x2", "x1*x3", "x2*x3"], {(0, 2): 3, (1, 3): 2}),
        (3, ["x1*x2*x3"], {(0, 3): 1}),
    ],
)
def test_betti_table_examples(n, gens, expected):
    I = ideal(n, *gens)
    table = betti_table(certify_vertex_splittable(I))
    assert table == GradedBettiTable(expected)
    assert table == taylor_betti(I, 2)


def test_betti_base_cases():
    R = RingContext(3)
    assert betti_table(certify_vertex_splittable(MonomialIdeal.zero(R))) == GradedBettiTable({})
    assert betti_table(certify_vertex_splittable(MonomialIdeal.unit(R))) == GradedBettiTable({(0, 0): 1})


def test_example_ideal_betti(example_ideal):
    table = betti_table(certify_vertex_splittable(example_ideal))
    expected = {(0, 2): 3, (0, 3): 2, (0, 4): 1, (1, 3): 2, (1, 4): 4, (1, 5): 2, (2, 5): 2, (2, 6): 1}
    assert table == GradedBettiTable(expected)


@pytest.mark.parametrize(
    "n, gens, depth, reg",
    [
        (3, ["x1*x2", "x1*x3"], 1, 1),
        (2, ["x1", "x2"], 0, 0),
        (4, ["x1", "x2", "x3", "x4"], 0, 0),
        (2, ["x1*x2"], 1, 1),
        (3, ["x1*x2", "x1*x3", "x2*x3"], 1, 1),
        (4, EXAMPLE_GENS, 1, 3),
    ],
)
def test_depth_and_reg(n, gens, depth, reg):
    I = ideal(n, *gens)
    cert = certify_vertex_splittable(I)
    assert depth_quotient(cert, I.ring) == depth
    assert reg_quotient(cert) == reg
    q = betti_table(cert).quotient()
    assert n - q.projdim == depth and q.reg == reg


def test_admissible_vertices_all_reconstruct(example_ideal):
    choices = admissible_splitting_vertices(example_ideal)
    assert choices
    for i, I1, I2 in choices:
        assert all(g.deg(i) == 0 for g in I2.gens)
        assert (I1.times_var(i) + I2) == example_ideal


def test_linear_quotients_order(example_ideal):
    order = linear_quotients_order(example_ideal)
    assert order is not None and sorted(order) == sorted(example_ideal.gens)
    assert linear_quotients_order(ideal(2, "x1^2", "x2^2")) is None
