"""Hot numeric kernels with an optional numba JIT path.

Set ``SPLITCM_DISABLE_JIT=1`` to force the pure-numpy fallbacks (useful for
debugging and for the benchmark). The fallbacks run the same algorithms and
must return identical results.
"""

from __future__ import annotations

import os

import numpy as np

_DISABLED = os.environ.get("SPLITCM_DISABLE_JIT", "").strip().lower() in {"1", "true", "yes", "on"}

try:
    if _DISABLED:
        raise ImportError
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - depends on environment
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        if len(args) == 1 and callable(args[0]) and not kwargs:
            return args[0]

        def deco(func):
            return func

        return deco


BACKEND = "numba" if HAVE_NUMBA else "numpy"


# ---------------------------------------------------------------------------
# rank over GF(p)
# ---------------------------------------------------------------------------


@njit(cache=True, nogil=True)
def _rank_mod_p_jit(a, p):
    m, n = a.shape
    r = 0
    for c in range(n):
        if r == m:
            break
        piv = -1
        for i in range(r, m):
            if a[i, c] % p != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for k in range(n):
                tmp = a[r, k]
                a[r, k] = a[piv, k]
                a[piv, k] = tmp
        # Fermat inverse; p is prime
        x = a[r, c] % p
        inv = 1
        e = p - 2
        while e > 0:
            if e & 1:
                inv = (inv * x) % p
            x = (x * x) % p
            e >>= 1
        for k in range(c, n):
            a[r, k] = (a[r, k] * inv) % p
        for i in range(r + 1, m):
            f = a[i, c] % p
            if f != 0:
                for k in range(c, n):
                    a[i, k] = (a[i, k] - f * a[r, k]) % p
        r += 1
    return r


def _rank_mod_p_numpy(a: np.ndarray, p: int) -> int:
    m, n = a.shape
    r = 0
    for c in range(n):
        if r == m:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        a[r] = (a[r] * inv) % p
        below = a[r + 1 :, c]
        rows = np.nonzero(below)[0]
        if rows.size:
            rows = rows + r + 1
            a[rows] = (a[rows] - np.outer(a[rows, c], a[r])) % p
        r += 1
    return r


def rank_mod_p(matrix, p: int, *, backend: str | None = None) -> int:
    """Exact rank of an integer matrix reduced modulo the prime ``p``."""
    a = np.array(matrix, dtype=np.int64, copy=True)
    if a.ndim != 2:
        raise ValueError("rank_mod_p expects a 2-d matrix")
    if a.size == 0:
        return 0
    if p >= 3037000499:
        raise ValueError("prime too large for int64 elimination")
    a %= p
    backend = backend or BACKEND
    if backend == "numba":
        if not HAVE_NUMBA:
            raise RuntimeError("numba backend requested but unavailable")
        return int(_rank_mod_p_jit(a, p))
    return _rank_mod_p_numpy(a, p)


# ---------------------------------------------------------------------------
# exhaustive polymatroid (exchange property) scan
# ---------------------------------------------------------------------------


@njit(cache=True, nogil=True)
def _mask_is_polymatroidal(mask, exps, codes_to_idx, radix):
    N, n = exps.shape
    for a in range(N):
        if not (mask >> a) & 1:
            continue
        for b in range(N):
            if a == b or not (mask >> b) & 1:
                continue
            for i in range(n):
                if exps[a, i] <= exps[b, i]:
                    continue
                found = False
                for j in range(n):
                    if exps[a, j] >= exps[b, j]:
                        continue
                    code = 0
                    base = 1
                    for k in range(n):
                        e = exps[a, k]
                        if k == i:
                            e -= 1
                        elif k == j:
                            e += 1
                        code += e * base
                        base *= radix
                    w = codes_to_idx[code]
                    if w >= 0 and (mask >> w) & 1:
                        found = True
                        break
                if not found:
                    return False
    return True


@njit(cache=True, nogil=True)
def _scan_jit(exps, codes_to_idx, radix, max_gens, out):
    N = exps.shape[0]
    count = 0
    for k in range(1, max_gens + 1):
        if k > N:
            break
        # Gosper's hack over all k-subsets of N bits
        mask = (1 << k) - 1
        limit = 1 << N
        while mask < limit:
            if _mask_is_polymatroidal(mask, exps, codes_to_idx, radix):
                out[count] = mask
                count += 1
            c = mask & -mask
            r = mask + c
            mask = (((r ^ mask) >> 2) // c) | r
    return count


def _mask_is_polymatroidal_numpy(mask: int, exps: np.ndarray, codes_to_idx: np.ndarray, radix: int) -> bool:
    idx = np.array([a for a in range(exps.shape[0]) if (mask >> a) & 1], dtype=np.int64)
    sub = exps[idx]
    k, n = sub.shape
    weights = radix ** np.arange(n, dtype=np.int64)
    present = np.zeros(codes_to_idx.shape[0], dtype=bool)
    present[sub @ weights] = True
    # diff[a, b, i] = u_a[i] - u_b[i]
    diff = sub[:, None, :] - sub[None, :, :]
    for a in range(k):
        for b in range(k):
            if a == b:
                continue
            dec = np.nonzero(diff[a, b] > 0)[0]
            if dec.size == 0:
                continue
            inc = np.nonzero(diff[a, b] < 0)[0]
            base = sub[a] @ weights
            # candidate codes for every (i, j) pair at once
            cand = base - weights[dec][:, None] + weights[inc][None, :]
            ok = present[cand].any(axis=1)
            if not ok.all():
                return False
    return True


def _scan_numpy(exps, codes_to_idx, radix, max_gens):
    from itertools import combinations

    N = exps.shape[0]
    found = []
    for k in range(1, min(max_gens, N) + 1):
        for combo in combinations(range(N), k):
            mask = 0
            for a in combo:
                mask |= 1 << a
            if _mask_is_polymatroidal_numpy(mask, exps, codes_to_idx, radix):
                found.append(mask)
    return np.array(sorted(found), dtype=np.int64)


def polymatroidal_masks(exps, max_gens: int, *, backend: str | None = None) -> np.ndarray:
    """All generator subsets (as bitmasks over rows of ``exps``) with the exchange property.

    ``exps`` lists every monomial of one fixed degree; the result is sorted.
    """
    exps = np.ascontiguousarray(exps, dtype=np.int64)
    N, n = exps.shape
    if N > 62:
        raise ValueError("too many monomials for a 64-bit mask scan")
    radix = int(exps.max()) + 2 if N else 2
    weights = radix ** np.arange(n, dtype=np.int64)
    codes_to_idx = -np.ones(radix**n, dtype=np.int64)
    codes_to_idx[exps @ weights] = np.arange(N)
    backend = backend or BACKEND
    if backend == "numba":
        if not HAVE_NUMBA:
            raise RuntimeError("numba backend requested but unavailable")
        from math import comb

        total = sum(comb(N, k) for k in range(1, min(max_gens, N) + 1))
        out = np.empty(total, dtype=np.int64)
        count = _scan_jit(exps, codes_to_idx, radix, int(max_gens), out)
        return np.sort(out[:count])
    return _scan_numpy(exps, codes_to_idx, radix, max_gens)
