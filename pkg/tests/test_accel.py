import os
import subprocess
import sys
from itertools import combinations

import numpy as np
import pytest

from splitcm import _accel
from splitcm._accel import HAVE_NUMBA, polymatroidal_masks, rank_mod_p
from splitcm.families import is_polymatroidal
from splitcm.monomial import MonomialIdeal, RingContext

BACKENDS = ["numpy"] + (["numba"] if HAVE_NUMBA else [])


def reference_rank(a, p):
    a = [[int(x) % p for x in row] for row in a]
    r = 0
    cols = len(a[0]) if a else 0
    for c in range(cols):
        piv = next((i for i in range(r, len(a)) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = pow(a[r][c], -1, p)
        a[r] = [x * inv % p for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[r])]
        r += 1
    return r


@pytest.mark.parametrize("backend", BACKENDS)
@pytest.mark.parametrize("p", [2, 3, 32003])
def test_rank_matches_reference(backend, p):
    rng = np.random.default_rng(p)
    for _ in range(20):
        m, n = rng.integers(1, 12, size=2)
        a = rng.integers(-2, 3, size=(m, n))
        assert rank_mod_p(a, p, backend=backend) == reference_rank(a.tolist(), p)


@pytest.mark.parametrize("backend", BACKENDS)
def test_rank_edge_cases(backend):
    assert rank_mod_p(np.zeros((0, 3), dtype=np.int64), 2, backend=backend) == 0
    assert rank_mod_p([[2, 4], [6, 8]], 2, backend=backend) == 0
    assert rank_mod_p([[1, 1], [1, -1]], 2, backend=backend) == 1
    assert rank_mod_p([[1, 1], [1, -1]], 3, backend=backend) == 2
    with pytest.raises(ValueError):
        rank_mod_p([1, 2], 2, backend=backend)


@pytest.mark.skipif(not HAVE_NUMBA, reason="numba unavailable")
def test_backends_agree_on_polymatroid_scan():
    for n, d, k in [(2, 2, 3), (3, 2, 6), (2, 3, 4), (3, 3, 4)]:
        exps = np.array([u.exponents for u in RingContext(n).monomials_of_degree(d)])
        assert np.array_equal(polymatroidal_masks(exps, k, backend="numpy"),
                              polymatroidal_masks(exps, k, backend="numba"))


@pytest.mark.parametrize("backend", BACKENDS)
def test_polymatroid_scan_matches_direct_check(backend):
    ring = RingContext(3)
    monos = ring.monomials_of_degree(2)
    exps = np.array([u.exponents for u in monos])
    got = set(polymatroidal_masks(exps, 4, backend=backend).tolist())
    want = set()
    for k in range(1, 5):
        for combo in combinations(range(len(monos)), k):
            if is_polymatroidal(MonomialIdeal(ring, [monos[c] for c in combo])):
                want.add(sum(1 << c for c in combo))
    assert got == want


def test_disable_flag_selects_numpy():
    env = dict(os.environ, SPLITCM_DISABLE_JIT="1")
    out = subprocess.run([sys.executable, "-c", "from splitcm import _accel; print(_accel.BACKEND, _accel.HAVE_NUMBA)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.split() == ["numpy", "False"]


def test_requesting_missing_numba_raises(monkeypatch):
    monkeypatch.setattr(_accel, "HAVE_NUMBA", False)
    with pytest.raises(RuntimeError):
        rank_mod_p([[1]], 2, backend="numba")
