import pytest

from splitcm.betti import GradedBettiTable


def test_basic_queries():
    t = GradedBettiTable({(0, 2): 3, (1, 3): 2})
    assert t[(0, 2)] == 3 and t.get((5, 5)) == 0
    assert t.projdim == 1 and t.reg == 2
    assert t.total(0) == 3 and t.row(1) == {3: 2}
    assert t.is_linear()
    assert not GradedBettiTable({(0, 2): 1, (0, 3): 1}).is_linear()


def test_zero_entries_dropped_and_negative_rejected():
    assert GradedBettiTable({(0, 1): 0}) == GradedBettiTable({})
    with pytest.raises(ValueError):
        GradedBettiTable({(0, 1): -1})


def test_shift_add_quotient():
    t = GradedBettiTable({(0, 2): 1})
    assert t.shift(1, 1) == GradedBettiTable({(1, 3): 1})
    assert (t + t)[(0, 2)] == 2
    q = GradedBettiTable({(0, 2): 3, (1, 3): 2}).quotient()
    assert q == GradedBettiTable({(0, 0): 1, (1, 2): 3, (2, 3): 2})
    assert q.projdim == 2 and q.reg == 1


def test_json_roundtrip_and_format():
    t = GradedBettiTable({(0, 2): 3, (1, 3): 2, (2, 5): 1})
    assert GradedBettiTable.from_json(t.to_json()) == t
    assert t.to_json() == [[0, 2, 3], [1, 3, 2], [2, 5, 1]]
    text = t.format()
    assert "3" in text and text.splitlines()[0].split()[:3] == ["0", "1", "2"]
    assert hash(t) == hash(GradedBettiTable(t.to_dict()))
