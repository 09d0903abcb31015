"""Reproducible corpora and the cross-validation scans run over them.

Every scan returns a :class:`ScanResult`; a scan passes iff ``failures`` is
empty. Corpus scans fan out over processes when ``SPLITCM_THREADS`` > 1.
"""

from __future__ import annotations

import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement
from typing import Callable, Iterable, Iterator, Sequence

import numpy as np

from ._accel import polymatroidal_masks
from .cm import _recursive_invariants, _table_invariants, gorenstein_shape, is_cm, is_principal_or_variables
from .families import (
    classify_cm_polymatroidal,
    is_polymatroidal,
    is_tspread_strongly_stable,
    tspread_cm_criterion,
    tspread_monomials,
)
from .graphs import (
    SimpleGraph,
    all_perfect_elimination_orders,
    complement,
    cover_ideal,
    edge_ideal,
    edge_ideal_certificate,
    is_bicm,
    is_cochordal,
)
from .monomial import Monomial, MonomialIdeal, RingContext, add_variable, colon_by_variable
from .oracle import (
    DEFAULT_PRIMES,
    SimplicialComplex,
    alexander_dual,
    depth_oracle,
    dim_oracle,
    is_cm_oracle,
    is_vertex_decomposable,
    oracle_betti,
    oracle_summary,
    taylor_betti,
)
from .splitting import (
    Node,
    LeafUnit,
    LeafZero,
    admissible_splitting_vertices,
    betti_table,
    certify_vertex_splittable,
    linear_quotients_order,
    reconstruct,
)


@dataclass
class ScanResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    notes: dict = field(default_factory=dict)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "checked": self.checked,
            "ok": self.ok,
            "failures": self.failures[:50],
            "num_failures": len(self.failures),
            "notes": self.notes,
        }


def num_workers() -> int:
    try:
        return max(1, int(os.environ.get("SPLITCM_THREADS", "1")))
    except ValueError:
        return 1


def parallel_map(fn: Callable, items: Sequence) -> list:
    workers = num_workers()
    if workers == 1 or len(items) < 64:
        return [fn(x) for x in items]
    chunk = max(1, len(items) // (workers * 8))
    with ProcessPoolExecutor(max_workers=workers) as ex:
        return list(ex.map(fn, items, chunksize=chunk))


# ---------------------------------------------------------------------------
# corpora
# ---------------------------------------------------------------------------


def _antichains(monos: list[Monomial], max_size: int) -> Iterator[tuple[Monomial, ...]]:
    def rec(start: int, chosen: list[Monomial]) -> Iterator[tuple[Monomial, ...]]:
        if chosen:
            yield tuple(chosen)
        if len(chosen) == max_size:
            return
        for k in range(start, len(monos)):
            u = monos[k]
            if any(v.divides(u) or u.divides(v) for v in chosen):
                continue
            chosen.append(u)
            yield from rec(k + 1, chosen)
            chosen.pop()

    yield from rec(0, [])


def exhaustive_ideals(max_vars: int = 3, max_gens: int = 4, max_degree: int = 3) -> list[MonomialIdeal]:
    """Every nonzero proper ideal with n <= max_vars, <= max_gens generators of degree 1..max_degree."""
    out = []
    for n in range(1, max_vars + 1):
        ring = RingContext(n)
        monos = [m for d in range(1, max_degree + 1) for m in ring.monomials_of_degree(d)]
        out.extend(MonomialIdeal(ring, gens) for gens in _antichains(monos, max_gens))
    return out


def random_ideals(n: int = 4, count: int = 500, seed: int = 0, max_gens: int = 6, max_degree: int = 3) -> list[MonomialIdeal]:
    """Distinct random ideals: 1..max_gens random monomials of degree 1..max_degree, minimalized."""
    rng = random.Random(seed)
    ring = RingContext(n)
    by_degree = {d: ring.monomials_of_degree(d) for d in range(1, max_degree + 1)}
    seen: set[MonomialIdeal] = set()
    out = []
    attempts = 0
    while len(out) < count and attempts < 100 * count:
        attempts += 1
        k = rng.randint(1, max_gens)
        gens = [rng.choice(by_degree[rng.randint(1, max_degree)]) for _ in range(k)]
        I = MonomialIdeal(ring, gens)
        if I not in seen:
            seen.add(I)
            out.append(I)
    return out


def polymatroidal_ideals(max_vars: int = 4, max_degree: int = 3, max_gens: int = 8) -> list[MonomialIdeal]:
    """All polymatroidal ideals with n <= max_vars, degree <= max_degree, <= max_gens generators.

    For each (n, d) the exchange property is scanned over every generator
    subset by the accelerated kernel.
    """
    out = []
    for n in range(1, max_vars + 1):
        ring = RingContext(n)
        for d in range(1, max_degree + 1):
            monos = ring.monomials_of_degree(d)
            exps = np.array([m.exponents for m in monos], dtype=np.int64)
            for mask in polymatroidal_masks(exps, max_gens).tolist():
                out.append(MonomialIdeal(ring, [monos[k] for k in range(len(monos)) if (mask >> k) & 1]))
    return out


def tspread_strongly_stable_ideals(t: Sequence[int], max_vars: int = 5) -> list[MonomialIdeal]:
    """Every nonzero t-spread strongly stable ideal inside m^2 with effective n <= max_vars.

    Such an ideal is fixed by its set of t-spread monomials, an up-set of the
    poset generated by multiplication and index lowering; the up-sets are
    enumerated directly.
    """
    t = tuple(t)
    d = len(t) + 1
    out = []
    for n in range(1, max_vars + 1):
        ring = RingContext(n)
        elems = [u for deg in range(2, d + 1) for u in tspread_monomials(n, t, deg)]
        S = set(elems)
        up: dict[Monomial, set[Monomial]] = {}
        for u in elems:
            ups = set()
            for j in range(1, n + 1):
                v = u.times_var(j)
                if v in S:
                    ups.add(v)
            for k in u.support():
                for j in range(1, k):
                    v = u.times_var(k, -1).times_var(j)
                    if v in S:
                        ups.add(v)
            up[u] = ups
        # larger degree / smaller indices first, so every up-neighbour is decided earlier
        order = sorted(elems, key=lambda u: (-u.degree, u.indices()))
        chosen: set[Monomial] = set()

        def rec(k: int) -> None:
            if k == len(order):
                if chosen:
                    I = MonomialIdeal(ring, chosen)
                    if I.effective_num_vars() == n:
                        out.append(I)
                return
            rec(k + 1)
            u = order[k]
            if up[u] <= chosen:
                chosen.add(u)
                rec(k + 1)
                chosen.discard(u)

        rec(0)
    return out


def simplicial_complexes(max_vertices: int = 5) -> list[SimplicialComplex]:
    """All complexes (facet antichains, void complex included) on 1..n for n <= max_vertices."""
    out = []
    for n in range(1, max_vertices + 1):
        subsets = [frozenset(c) for r in range(n + 1) for c in combinations(range(1, n + 1), r)]

        def rec(start: int, chosen: list[frozenset[int]]) -> Iterator[list[frozenset[int]]]:
            yield list(chosen)
            for k in range(start, len(subsets)):
                s = subsets[k]
                if any(s <= c or c <= s for c in chosen):
                    continue
                chosen.append(s)
                yield from rec(k + 1, chosen)
                chosen.pop()

        out.extend(SimplicialComplex(n, frozenset(fs)) for fs in rec(0, []))
    return out


def random_graphs(max_vertices: int = 8, samples: int = 200, densities=(0.3, 0.5, 0.7), seed: int = 0) -> list[SimpleGraph]:
    """Erdos-Renyi graphs, vertex count uniform in 2..max_vertices."""
    rng = random.Random(seed)
    out = []
    for p in densities:
        for _ in range(samples):
            n = rng.randint(2, max_vertices)
            edges = [e for e in combinations(range(1, n + 1), 2) if rng.random() < p]
            out.append(SimpleGraph.from_edges(n, edges))
    return out


def core_corpus(seed: int = 0, random_count: int = 500) -> list[MonomialIdeal]:
    return exhaustive_ideals() + random_ideals(4, random_count, seed)


# ---------------------------------------------------------------------------
# scans
# ---------------------------------------------------------------------------


def _timed(fn):
    def wrapper(*args, **kwargs):
        t0 = time.perf_counter()
        res = fn(*args, **kwargs)
        res.seconds = time.perf_counter() - t0
        return res

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


def _oracle_one(I: MonomialIdeal, primes=DEFAULT_PRIMES):
    cert = certify_vertex_splittable(I)
    tables = [taylor_betti(I, p) for p in primes]
    if cert is None:
        return False, None, all(tb == tables[0] for tb in tables)
    rec = betti_table(cert)
    return True, [tb == rec for tb in tables], None


@_timed
def scan_oracle_equivalence(ideals: Sequence[MonomialIdeal], primes=DEFAULT_PRIMES) -> ScanResult:
    """Recursive Betti table == Taylor complex over each prime, on every vertex splittable ideal."""
    res = ScanResult("oracle_equivalence")
    field_disagree = 0
    vs = 0
    for I, (is_vs, agree, same) in zip(ideals, parallel_map(_oracle_one, list(ideals))):
        if not is_vs:
            field_disagree += not same
            continue
        vs += 1
        res.checked += 1
        for p, ok in zip(primes, agree):
            if not ok:
                res.failures.append(f"{I} (n={I.n}) over GF({p})")
    res.notes = {"vertex_splittable": vs, "not_vertex_splittable": len(ideals) - vs,
                 "non_vs_field_discrepancies": field_disagree}
    return res


def _colon_sum_one(I: MonomialIdeal) -> list[str]:
    cert = certify_vertex_splittable(I)
    if cert is None or not I.in_square_of_maximal() or len(I.gens) < 2:
        return []
    cm, _ = is_cm(I, cert)
    bad = []
    for i, I1, I2 in admissible_splitting_vertices(I):
        colon = colon_by_variable(I, i)
        summ = add_variable(I, i)
        if colon != I1 or summ != add_variable(I2, i):
            bad.append(f"{I}: colon/sum mismatch at x{i}")
            continue
        rhs = is_cm_oracle(colon) and is_cm_oracle(summ) and depth_oracle(colon) == depth_oracle(summ)
        if rhs != cm:
            bad.append(f"{I}: CM={cm} but condition at x{i} gives {rhs}")
    return bad


@_timed
def scan_colon_sum_criterion(ideals: Sequence[MonomialIdeal]) -> ScanResult:
    """CM(I) iff (I:x_i), (I,x_i) CM with equal depth, for every admissible splitting vertex."""
    res = ScanResult("colon_sum_criterion")
    eligible = [I for I in ideals if I.in_square_of_maximal() and len(I.gens) >= 2]
    for bad in parallel_map(_colon_sum_one, eligible):
        res.failures.extend(bad)
    res.checked = sum(1 for I in eligible if certify_vertex_splittable(I) is not None)
    return res


def _gorenstein_one(I: MonomialIdeal):
    if certify_vertex_splittable(I) is None:
        return None
    return oracle_summary(I).gorenstein


@_timed
def scan_gorenstein(ideals: Sequence[MonomialIdeal], rule: str = "principal_or_variables") -> ScanResult:
    """Oracle Gorenstein (CM, type 1) against a syntactic rule.

    ``rule="principal_or_variables"`` is the narrow statement; ``"shape"``
    is :func:`~splitcm.cm.gorenstein_shape`. Failures inside m^2 are
    counted separately in ``notes``.
    """
    test = {"principal_or_variables": is_principal_or_variables, "shape": gorenstein_shape}[rule]
    res = ScanResult(f"gorenstein[{rule}]")
    count = in_m2 = 0
    for I, gor in zip(ideals, parallel_map(_gorenstein_one, list(ideals))):
        if gor is None:
            continue
        res.checked += 1
        count += gor
        syn = test(I)
        if gor != syn:
            in_m2 += I.in_square_of_maximal()
            res.failures.append(f"{I}: oracle Gorenstein={gor}, syntactic={syn}")
    res.notes = {"gorenstein": count, "failures_inside_m2": in_m2}
    return res


def _level_one(I: MonomialIdeal):
    cert = certify_vertex_splittable(I)
    if not isinstance(cert, Node) or not I.in_square_of_maximal():
        return None
    if not is_cm_oracle(I):
        return None
    typ, lv, pg, _ = _recursive_invariants(cert, I.ring)
    typ_o, lv_o, pg_o = _table_invariants(oracle_betti(I))
    typ_t, lv_t, pg_t = _table_invariants(betti_table(cert))
    return (typ, lv, pg), (typ_o, lv_o, pg_o), (typ_t, lv_t, pg_t)


@_timed
def scan_level_pseudo_gorenstein(ideals: Sequence[MonomialIdeal]) -> ScanResult:
    """Recursive type/level/pseudo-Gorenstein == Betti-table definitions on CM ideals with a split."""
    res = ScanResult("level_pseudo_gorenstein")
    stats = {"level": 0, "pseudo_gorenstein": 0}
    for I, r in zip(ideals, parallel_map(_level_one, list(ideals))):
        if r is None:
            continue
        res.checked += 1
        rec, ora, tab = r
        stats["level"] += rec[1]
        stats["pseudo_gorenstein"] += rec[2]
        if not rec == ora == tab:
            res.failures.append(f"{I}: recursion {rec}, oracle {ora}, recursive table {tab}")
    res.notes = stats
    return res


def is_linear_quotients_order(order: Sequence[Monomial]) -> bool:
    for k in range(1, len(order)):
        u = order[k]
        colon = MonomialIdeal(RingContext(u.num_vars), [v.colon(u) for v in order[:k]])
        if any(g.degree != 1 for g in colon.gens):
            return False
    return True


def _lq_one(I: MonomialIdeal):
    if certify_vertex_splittable(I) is None:
        return None
    order = linear_quotients_order(I)
    return order is not None and sorted(order) == sorted(I.gens) and is_linear_quotients_order(order)


@_timed
def scan_linear_quotients(ideals: Sequence[MonomialIdeal]) -> ScanResult:
    """Every vertex splittable ideal has a linear-quotients order."""
    res = ScanResult("linear_quotients")
    for I, ok in zip(ideals, parallel_map(_lq_one, list(ideals))):
        if ok is None:
            continue
        res.checked += 1
        if not ok:
            res.failures.append(str(I))
    return res


def _poly_one(I: MonomialIdeal):
    cert = certify_vertex_splittable(I)
    if cert is None:
        return None
    cls = classify_cm_polymatroidal(I)
    cm_rec = is_cm(I, cert)[0]
    cm_ora = is_cm_oracle(I)
    return cls.tag.value, cls.is_cm, cm_rec, cm_ora


@_timed
def scan_polymatroidal(ideals: Sequence[MonomialIdeal]) -> ScanResult:
    """Polymatroidal I: vertex splittable, and CM iff principal / Veronese / squarefree Veronese."""
    res = ScanResult("polymatroidal_classification")
    tags: dict[str, int] = {}
    for I, r in zip(ideals, parallel_map(_poly_one, list(ideals))):
        res.checked += 1
        if r is None:
            res.failures.append(f"{I}: polymatroidal but not certified vertex splittable")
            continue
        tag, cls_cm, cm_rec, cm_ora = r
        tags[tag] = tags.get(tag, 0) + 1
        if not cls_cm == cm_rec == cm_ora:
            res.failures.append(f"{I}: class {tag}, recursive CM {cm_rec}, oracle CM {cm_ora}")
    res.notes = {"by_class": dict(sorted(tags.items()))}
    return res


def _tspread_one(args):
    I, t = args
    ss = is_tspread_strongly_stable(I, t)
    vs = certify_vertex_splittable(I) is not None
    crit = tspread_cm_criterion(I, t) if ss else None
    cm_ora = is_cm_oracle(I)
    cm_rec = is_cm(I)[0] if vs else None
    return ss, vs, crit, cm_ora, cm_rec


@_timed
def scan_tspread(spreads=((0,), (1,), (2,), (0, 0), (1, 1)), max_vars: int = 5) -> ScanResult:
    """t-spread strongly stable I in m^2: vertex splittable, and witness criterion iff CM."""
    res = ScanResult("tspread_criterion")
    per_t = {}
    for t in spreads:
        ideals = tspread_strongly_stable_ideals(t, max_vars)
        cm_count = 0
        for I, (ss, vs, crit, cm_ora, cm_rec) in zip(ideals, parallel_map(_tspread_one, [(I, t) for I in ideals])):
            res.checked += 1
            if not ss:
                res.failures.append(f"{I}: enumerated as {t}-spread strongly stable but check says no")
            if not vs:
                res.failures.append(f"{I}: {t}-spread strongly stable but not vertex splittable")
            if crit != cm_ora or (cm_rec is not None and cm_rec != cm_ora):
                res.failures.append(f"{I} t={t}: criterion {crit}, oracle CM {cm_ora}, recursive CM {cm_rec}")
            cm_count += cm_ora
        per_t[",".join(map(str, t))] = {"ideals": len(ideals), "cm": cm_count}
    res.notes = {"per_t": per_t}
    return res


def _duality_one(delta: SimplicialComplex):
    return is_vertex_decomposable(delta), certify_vertex_splittable(delta.dual_stanley_reisner_ideal()) is not None


@_timed
def scan_duality(max_vertices: int = 5) -> ScanResult:
    """Delta vertex decomposable iff I_{Delta^vee} vertex splittable."""
    res = ScanResult("duality")
    complexes = simplicial_complexes(max_vertices)
    vd_count = 0
    for delta, (vd, vs) in zip(complexes, parallel_map(_duality_one, complexes)):
        res.checked += 1
        vd_count += vd
        if vd != vs:
            facets = sorted(sorted(F) for F in delta.facets)
            res.failures.append(f"n={delta.num_vertices} facets={facets}: VD={vd}, dual VS={vs}")
    res.notes = {"vertex_decomposable": vd_count}
    return res


def _graph_one(args):
    G, max_orders = args
    bad = []
    rep = is_bicm(G)
    I = edge_ideal(G)
    cochordal = is_cochordal(G)
    cert = certify_vertex_splittable(I)
    if cochordal != (cert is not None):
        bad.append(f"cochordal={cochordal} but vertex splittable={cert is not None}")
    cm_rec = None
    if cert is not None:
        cm_rec = is_cm(I, cert)[0] if not I.is_zero() else True
        built = edge_ideal_certificate(G)
        if reconstruct(built, I.ring) != I or betti_table(built) != betti_table(cert):
            bad.append("neighbourhood-split certificate disagrees with search")
    definitional = cochordal and bool(cm_rec)
    if rep.bicm != definitional:
        bad.append(f"is_bicm={rep.bicm} but CM and cochordal gives {definitional}")
    if alexander_dual(I) != cover_ideal(G):
        bad.append("cover ideal != Alexander dual of edge ideal")
    for p in DEFAULT_PRIMES:
        if I.is_zero():
            continue
        table = oracle_betti(I, p)
        oracle_verdict = table.is_linear() and depth_oracle(I, p) == dim_oracle(I)
        if oracle_verdict != rep.bicm:
            bad.append(f"oracle over GF({p}) says bi-CM={oracle_verdict}")
    literal_disagree = 0
    if cochordal and G.num_vertices <= max_orders:
        H = complement(G)
        verdicts = set()
        for peo in all_perfect_elimination_orders(H, limit=2000):
            r = is_bicm(G, peo)
            verdicts.add((r.bicm, r.projdim))
            literal_disagree += is_bicm(G, peo, literal=True).bicm != r.bicm
        if len(verdicts) > 1:
            bad.append(f"verdict depends on elimination order: {sorted(verdicts, key=str)}")
    if rep.bicm and rep.projdim is not None and not I.is_zero():
        if rep.projdim != oracle_betti(I).projdim + 1:
            bad.append(f"reported projdim {rep.projdim} != oracle {oracle_betti(I).projdim + 1}")
    return bad, rep.bicm, literal_disagree


@_timed
def scan_graphs(graphs: Sequence[SimpleGraph], max_order_check_vertices: int = 6) -> ScanResult:
    """is_bicm against CM + cochordal, both fields of the oracle, and every PEO on small graphs."""
    res = ScanResult("bicm_graphs")
    bicm = 0
    literal = 0
    for G, (bad, b, lit) in zip(graphs, parallel_map(_graph_one, [(G, max_order_check_vertices) for G in graphs])):
        res.checked += 1
        bicm += b
        literal += lit
        res.failures.extend(f"{sorted(G.edges)} on {G.num_vertices}: {msg}" for msg in bad)
    res.notes = {"bicm": bicm, "literal_condition_order_disagreements": literal}
    return res


SCANS = {
    "oracle": lambda seed: scan_oracle_equivalence(core_corpus(seed)),
    "colon-sum": lambda seed: scan_colon_sum_criterion(core_corpus(seed)),
    "gorenstein": lambda seed: scan_gorenstein(core_corpus(seed)),
    "level": lambda seed: scan_level_pseudo_gorenstein(core_corpus(seed)),
    "linear-quotients": lambda seed: scan_linear_quotients(core_corpus(seed)),
    "polymatroidal": lambda seed: scan_polymatroidal(polymatroidal_ideals()),
    "tspread": lambda seed: scan_tspread(),
    "duality": lambda seed: scan_duality(),
    "graphs": lambda seed: scan_graphs(random_graphs(seed=seed)),
}
