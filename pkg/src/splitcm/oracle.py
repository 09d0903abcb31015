"""Brute-force ground truth, independent of the splitting recursion.

Betti numbers come from two unrelated constructions:

* the Taylor complex tensored with K = GF(p), split by lcm multidegree;
* the upper Koszul simplicial complexes K^b(I) = {F squarefree : x^(b-F) in I},
  beta_{i,b}(I) = dim reduced H_{i-1}(K^b(I); K), over b in the lcm lattice.

The Taylor route is exponential in the number of generators and is capped;
``oracle_betti`` falls back to the Koszul route above the cap.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Optional

import numpy as np

from ._accel import rank_mod_p
from .betti import GradedBettiTable
from .monomial import Monomial, MonomialIdeal, RingContext

TAYLOR_MAX_GENS = 20
DEFAULT_PRIMES = (2, 32003)


class OracleCapacityError(ValueError):
    pass


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    k = 2
    while k * k <= p:
        if p % k == 0:
            return False
        k += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    characteristic: int = 2

    def __post_init__(self):
        if not _is_prime(self.characteristic):
            raise ValueError(f"field characteristic must be prime, got {self.characteristic}")

    @property
    def p(self) -> int:
        return self.characteristic


GF2 = FieldSpec(2)
GF32003 = FieldSpec(32003)


def _field(field) -> FieldSpec:
    if field is None:
        return GF2
    if isinstance(field, FieldSpec):
        return field
    return FieldSpec(int(field))


# ---------------------------------------------------------------------------
# Taylor complex
# ---------------------------------------------------------------------------


def _complex_homology(cells_by_size: dict[int, list[int]], boundary, p: int) -> dict[int, int]:
    """Homology ranks of a small chain complex given by a boundary callback.

    ``boundary(cell)`` yields (face, sign) pairs within the complex. Returns
    {size: dim H at that size}.
    """
    sizes = sorted(cells_by_size)
    index = {size: {c: k for k, c in enumerate(cells_by_size[size])} for size in sizes}
    ranks: dict[int, int] = {}
    for size in sizes:
        lower = index.get(size - 1)
        if not lower:
            ranks[size] = 0
            continue
        cells = cells_by_size[size]
        mat = np.zeros((len(cells), len(lower)), dtype=np.int64)
        for r, c in enumerate(cells):
            for face, sign in boundary(c):
                col = lower.get(face)
                if col is not None:
                    mat[r, col] += sign
        ranks[size] = rank_mod_p(mat, p)
    return {
        size: len(cells_by_size[size]) - ranks[size] - ranks.get(size + 1, 0)
        for size in sizes
    }


def taylor_betti(I: MonomialIdeal, field=None) -> GradedBettiTable:
    """beta_{i,j}(I) as homology of the Taylor complex over GF(p)."""
    p = _field(field).p
    gens = list(I.gens)
    m = len(gens)
    if m > TAYLOR_MAX_GENS:
        raise OracleCapacityError(f"Taylor complex capped at {TAYLOR_MAX_GENS} generators, got {m}")
    if m == 0:
        return GradedBettiTable()
    n = I.n
    G = np.array([g.exponents for g in gens], dtype=np.int64).reshape(m, n)
    size = 1 << m
    lcm = np.zeros((size, n), dtype=np.int64)
    card = np.zeros(size, dtype=np.int64)
    for b in range(m):
        lo, hi = 1 << b, 1 << (b + 1)
        lcm[lo:hi] = np.maximum(lcm[:lo], G[b])
        card[lo:hi] = card[:lo] + 1
    radix = int(G.max()) + 1
    keys = lcm @ (radix ** np.arange(n, dtype=np.int64))
    degs = lcm.sum(axis=1)
    masks = np.arange(1, size)
    _, inverse, counts = np.unique(keys[1:], return_inverse=True, return_counts=True)
    acc: dict[tuple[int, int], int] = {}
    # multidegrees carried by a single subset contribute one class each
    single = counts[inverse] == 1
    for mask in masks[single]:
        key = (int(card[mask]) - 1, int(degs[mask]))
        acc[key] = acc.get(key, 0) + 1
    order = np.argsort(inverse, kind="stable")
    grouped = masks[order][~single[order]]
    ginv = inverse[order][~single[order]]
    if grouped.size:
        splits = np.nonzero(np.diff(ginv))[0] + 1
        for group in np.split(grouped, splits):
            key0 = keys[group[0]]
            deg = int(degs[group[0]])
            cells: dict[int, list[int]] = {}
            for mask in group.tolist():
                cells.setdefault(int(card[mask]), []).append(mask)

            def boundary(mask, key0=key0):
                pos = 0
                for b in range(m):
                    if (mask >> b) & 1:
                        face = mask ^ (1 << b)
                        if face and keys[face] == key0:
                            yield face, (-1) ** pos
                        pos += 1

            for k, h in _complex_homology(cells, boundary, p).items():
                if h:
                    acc[(k - 1, deg)] = acc.get((k - 1, deg), 0) + h
    return GradedBettiTable(acc)


# ---------------------------------------------------------------------------
# upper Koszul simplicial complexes
# ---------------------------------------------------------------------------


def lcm_lattice(I: MonomialIdeal) -> set[tuple[int, ...]]:
    """Exponent vectors of lcms of all nonempty subsets of G(I)."""
    out: set[tuple[int, ...]] = set()
    for g in I.gens:
        e = g.exponents
        new = {tuple(max(a, b) for a, b in zip(e, f)) for f in out}
        out |= new
        out.add(e)
    return out


def reduced_homology(faces: Iterable[frozenset[int]], p: int) -> dict[int, int]:
    """{dim: rank of reduced homology} of a simplicial complex given by all its faces (incl. empty)."""
    faces = list(faces)
    if not faces:
        return {}
    cells: dict[int, list[tuple[int, ...]]] = {}
    for F in faces:
        cells.setdefault(len(F), []).append(tuple(sorted(F)))
    for v in cells.values():
        v.sort()

    def boundary(F):
        for pos in range(len(F)):
            yield F[:pos] + F[pos + 1 :], (-1) ** pos

    return {size - 1: h for size, h in _complex_homology(cells, boundary, p).items() if h}


def upper_koszul_complex(I: MonomialIdeal, b: tuple[int, ...]) -> list[frozenset[int]]:
    """Faces F of the simplex on supp(b) with x^(b - F) in I (0-based vertex labels)."""
    supp = [k for k, e in enumerate(b) if e > 0]
    bv = np.asarray(b, dtype=np.int64)
    G = np.array([g.exponents for g in I.gens], dtype=np.int64).reshape(len(I.gens), len(b))
    G = G[(G <= bv).all(axis=1)]
    if not len(G):
        return []
    s = len(supp)
    bits = (np.arange(1 << s)[:, None] >> np.arange(s)) & 1
    E = np.broadcast_to(bv, (1 << s, len(b))).copy()
    E[:, supp] -= bits
    hit = (G[None, :, :] <= E[:, None, :]).all(axis=2).any(axis=1)
    return [frozenset(supp[k] for k in range(s) if (m >> k) & 1) for m in np.flatnonzero(hit).tolist()]


def _squarefree_koszul_betti(I: MonomialIdeal, p: int) -> GradedBettiTable:
    # same construction on bitmasks: b and F are vertex subsets, x^(b-F) in I iff in_ideal[b ^ F]
    n = I.n
    masks = np.arange(1 << n, dtype=np.int64)
    in_ideal = np.zeros(1 << n, dtype=bool)
    gmasks = [sum(1 << (k - 1) for k in g.support()) for g in I.gens]
    for g in gmasks:
        in_ideal |= (masks & g) == g
    lattice: set[int] = set()
    for g in gmasks:
        lattice |= {g | b for b in lattice}
        lattice.add(g)
    acc: dict[tuple[int, int], int] = {}
    for b in lattice:
        faces = []
        F = b
        while True:
            if in_ideal[b ^ F]:
                faces.append(frozenset(k for k in range(n) if (F >> k) & 1))
            if F == 0:
                break
            F = (F - 1) & b
        deg = bin(b).count("1")
        for d, h in reduced_homology(faces, p).items():
            acc[(d + 1, deg)] = acc.get((d + 1, deg), 0) + h
    return GradedBettiTable(acc)


def koszul_betti(I: MonomialIdeal, field=None) -> GradedBettiTable:
    """beta_{i,b}(I) = dim reduced H_{i-1}(K^b(I)), summed into total degrees."""
    p = _field(field).p
    if I.is_squarefree() and not I.is_unit() and I.n <= 16:
        return _squarefree_koszul_betti(I, p)
    acc: dict[tuple[int, int], int] = {}
    for b in lcm_lattice(I):
        for d, h in reduced_homology(upper_koszul_complex(I, b), p).items():
            key = (d + 1, sum(b))
            acc[key] = acc.get(key, 0) + h
    return GradedBettiTable(acc)


def oracle_betti(I: MonomialIdeal, field=None, method: str = "auto") -> GradedBettiTable:
    if method == "taylor" or (method == "auto" and len(I.gens) <= 12):
        return taylor_betti(I, field)
    if method in ("koszul", "auto"):
        return koszul_betti(I, field)
    raise ValueError(f"unknown oracle method {method!r}")


# ---------------------------------------------------------------------------
# dimension, depth, CM
# ---------------------------------------------------------------------------


def minimal_primes(I: MonomialIdeal) -> list[frozenset[int]]:
    """Inclusion-minimal variable sets (1-based) meeting every generator support."""
    if I.is_unit():
        raise ValueError("the unit ideal has no minimal primes")
    n = I.n
    supports = [sum(1 << (k - 1) for k in g.support()) for g in I.gens]
    covers = [c for c in range(1 << n) if all(c & s for s in supports)]
    minimal = [c for c in covers if not any(d != c and d & c == d for d in covers)]
    return [frozenset(k + 1 for k in range(n) if (c >> k) & 1) for c in sorted(minimal)]


def dim_oracle(I: MonomialIdeal) -> int:
    return I.n - min(len(P) for P in minimal_primes(I))


def depth_oracle(I: MonomialIdeal, field=None, method: str = "auto") -> int:
    """depth S/I = n - projdim S/I (Auslander-Buchsbaum) from oracle Betti numbers."""
    if I.is_unit():
        raise ValueError("S/S is the zero module")
    if I.is_zero():
        return I.n
    return I.n - 1 - oracle_betti(I, field, method).projdim


def is_cm_oracle(I: MonomialIdeal, field=None, method: str = "auto") -> bool:
    return depth_oracle(I, field, method) == dim_oracle(I)


@dataclass(frozen=True)
class OracleSummary:
    depth: int
    krull_dim: int
    projdim: int
    reg: int
    cm: bool
    cm_type: Optional[int]
    level: Optional[bool]
    pseudo_gorenstein: Optional[bool]
    gorenstein: bool


def oracle_summary(I: MonomialIdeal, field=None, method: str = "auto") -> OracleSummary:
    if I.is_unit() or I.is_zero():
        raise ValueError("oracle summary needs a proper nonzero ideal")
    q = oracle_betti(I, field, method).quotient()
    p = q.projdim
    depth = I.n - p
    dim = dim_oracle(I)
    cm = depth == dim
    typ = level = pg = None
    if cm:
        last = q.row(p)
        typ = sum(last.values())
        top = q.get((p, p + q.reg))
        level, pg = typ == top, top == 1
    return OracleSummary(depth, dim, p, q.reg, cm, typ, level, pg, bool(cm and typ == 1))


# ---------------------------------------------------------------------------
# Alexander duality and simplicial complexes
# ---------------------------------------------------------------------------


def _minimal_sets(sets: Iterable[frozenset[int]]) -> list[frozenset[int]]:
    ss = sorted(set(sets), key=lambda s: (len(s), sorted(s)))
    keep: list[frozenset[int]] = []
    for s in ss:
        if not any(t <= s for t in keep):
            keep.append(s)
    return keep


def minimal_transversals(family: list[frozenset[int]]) -> list[frozenset[int]]:
    """Berge's incremental algorithm."""
    trans = [frozenset()]
    for E in family:
        nxt = []
        for T in trans:
            if T & E:
                nxt.append(T)
            else:
                nxt.extend(T | {v} for v in E)
        trans = _minimal_sets(nxt)
    return trans


def alexander_dual(I: MonomialIdeal) -> MonomialIdeal:
    """Squarefree I -> ideal generated by x_T over minimal transversals T of the generator supports."""
    if not I.is_squarefree():
        raise ValueError("Alexander duality needs a squarefree ideal")
    n = I.n
    family = [frozenset(g.support()) for g in I.gens]
    return MonomialIdeal(I.ring, [Monomial.from_support(n, T) for T in minimal_transversals(family)])


@dataclass(frozen=True)
class SimplicialComplex:
    """Complex on vertices 1..num_vertices given by its facets (void complex: no facets)."""

    num_vertices: int
    facets: frozenset[frozenset[int]]

    def __post_init__(self):
        fs = [frozenset(F) for F in self.facets]
        for F in fs:
            if any(not 1 <= v <= self.num_vertices for v in F):
                raise ValueError(f"face {sorted(F)} uses a vertex outside 1..{self.num_vertices}")
        maximal = [F for F in set(fs) if not any(F < G for G in fs)]
        object.__setattr__(self, "facets", frozenset(maximal))

    @classmethod
    def from_faces(cls, n: int, faces: Iterable[Iterable[int]]) -> "SimplicialComplex":
        return cls(n, frozenset(frozenset(F) for F in faces))

    def faces(self) -> set[frozenset[int]]:
        out: set[frozenset[int]] = set()
        for F in self.facets:
            items = sorted(F)
            for r in range(len(items) + 1):
                out.update(frozenset(c) for c in combinations(items, r))
        return out

    def contains(self, face: Iterable[int]) -> bool:
        f = frozenset(face)
        return any(f <= F for F in self.facets)

    def vertices(self) -> set[int]:
        return set().union(*self.facets) if self.facets else set()

    def is_simplex(self) -> bool:
        return len(self.facets) == 1

    def deletion(self, x: int) -> "SimplicialComplex":
        return SimplicialComplex(self.num_vertices, frozenset(F - {x} for F in self.facets))

    def link(self, x: int) -> "SimplicialComplex":
        return SimplicialComplex(self.num_vertices, frozenset(F - {x} for F in self.facets if x in F))

    def alexander_dual(self) -> "SimplicialComplex":
        """{X \\ F : F not a face}."""
        X = frozenset(range(1, self.num_vertices + 1))
        faces = self.faces()
        nonfaces = []
        for r in range(self.num_vertices + 1):
            for c in combinations(sorted(X), r):
                if frozenset(c) not in faces:
                    nonfaces.append(X - frozenset(c))
        return SimplicialComplex(self.num_vertices, frozenset(nonfaces))

    def stanley_reisner_ideal(self) -> MonomialIdeal:
        """Generated by x_F over minimal non-faces F."""
        faces = self.faces()
        ring = RingContext(self.num_vertices)
        gens = []
        for r in range(self.num_vertices + 1):
            for c in combinations(range(1, self.num_vertices + 1), r):
                if frozenset(c) not in faces:
                    gens.append(Monomial.from_support(self.num_vertices, c))
        return MonomialIdeal(ring, gens)

    def dual_stanley_reisner_ideal(self) -> MonomialIdeal:
        """I_{Delta^vee}, generated by x_{X \\ F} over facets F."""
        X = frozenset(range(1, self.num_vertices + 1))
        ring = RingContext(self.num_vertices)
        return MonomialIdeal(ring, [Monomial.from_support(self.num_vertices, X - F) for F in self.facets])


def is_vertex_decomposable(delta: SimplicialComplex, max_vertices: int = 8) -> bool:
    if delta.num_vertices > max_vertices:
        raise OracleCapacityError(f"vertex decomposability capped at {max_vertices} vertices")
    return _vd(delta.facets)


@lru_cache(maxsize=None)
def _vd(facets: frozenset[frozenset[int]]) -> bool:
    if len(facets) <= 1:
        return True
    vertices = sorted(set().union(*facets))
    for x in vertices:
        dl = _maximal(F - {x} for F in facets)
        lk = _maximal(F - {x} for F in facets if x in F)
        # shedding: no facet of the deletion is a face of the link
        if any(any(D <= L for L in lk) for D in dl):
            continue
        if _vd(lk) and _vd(dl):
            return True
    return False


def _maximal(sets) -> frozenset[frozenset[int]]:
    ss = set(sets)
    return frozenset(F for F in ss if not any(F < G for G in ss))
