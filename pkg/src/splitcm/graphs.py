"""Simple graphs, chordality, edge/cover ideals and bi-Cohen-Macaulay recognition."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Optional

from .monomial import Monomial, MonomialIdeal, ParseError, RingContext, _strip
from .splitting import LeafZero, LeafPrincipal, Node, SplitCertificate, try_split_at, variables_certificate


class NotCochordalError(ValueError):
    pass


@dataclass(frozen=True)
class SimpleGraph:
    num_vertices: int
    edges: frozenset[tuple[int, int]] = field(default=frozenset())

    def __post_init__(self):
        norm = set()
        for e in self.edges:
            i, j = e
            if i == j:
                raise ValueError(f"loop at vertex {i}")
            if not (1 <= i <= self.num_vertices and 1 <= j <= self.num_vertices):
                raise ValueError(f"edge {e} outside vertex set 1..{self.num_vertices}")
            norm.add((min(i, j), max(i, j)))
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Iterable[int]]) -> "SimpleGraph":
        return cls(n, frozenset(tuple(e) for e in edges))

    @classmethod
    def complete(cls, n: int) -> "SimpleGraph":
        return cls(n, frozenset(combinations(range(1, n + 1), 2)))

    @classmethod
    def cycle(cls, n: int) -> "SimpleGraph":
        return cls(n, frozenset((i, i % n + 1) for i in range(1, n + 1)))

    @property
    def vertices(self) -> range:
        return range(1, self.num_vertices + 1)

    def has_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edges

    def neighbors(self, i: int) -> set[int]:
        return {b if a == i else a for a, b in self.edges if i in (a, b)}

    def adjacency(self) -> dict[int, set[int]]:
        adj = {v: set() for v in self.vertices}
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return adj

    def isolated_vertices(self) -> list[int]:
        adj = self.adjacency()
        return [v for v in self.vertices if not adj[v]]

    def delete_vertex(self, v: int) -> "SimpleGraph":
        """G minus v; labels and vertex count are kept, v becomes isolated."""
        return SimpleGraph(self.num_vertices, frozenset(e for e in self.edges if v not in e))

    def relabel(self, perm: dict[int, int]) -> "SimpleGraph":
        return SimpleGraph(self.num_vertices, frozenset((perm[a], perm[b]) for a, b in self.edges))

    def induced(self, keep: Iterable[int]) -> tuple["SimpleGraph", list[int]]:
        """Induced subgraph relabeled 1..k, with the list mapping new label -> old label."""
        old = sorted(set(keep))
        new = {v: k + 1 for k, v in enumerate(old)}
        edges = frozenset((new[a], new[b]) for a, b in self.edges if a in new and b in new)
        return SimpleGraph(len(old), edges), old

    def to_text(self) -> str:
        lines = [f"graph {self.num_vertices}"] + [f"edge {a} {b}" for a, b in sorted(self.edges)]
        return "\n".join(lines) + "\n"


def parse_graph(text: str) -> SimpleGraph:
    """``graph <n>`` header then ``edge <i> <j>`` lines; ``#`` comments."""
    lines = [s for s in (_strip(line) for line in text.splitlines()) if s]
    if not lines:
        raise ParseError("empty input: expected 'graph <n>' header")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "graph" or not head[1].isdigit() or int(head[1]) < 1:
        raise ParseError(f"bad header {lines[0]!r}; expected 'graph <n>'")
    n = int(head[1])
    edges = []
    for s in lines[1:]:
        parts = s.split()
        if len(parts) != 3 or parts[0] != "edge" or not parts[1].isdigit() or not parts[2].isdigit():
            raise ParseError(f"bad line {s!r}; expected 'edge <i> <j>'")
        edges.append((int(parts[1]), int(parts[2])))
    try:
        return SimpleGraph.from_edges(n, edges)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def complement(G: SimpleGraph) -> SimpleGraph:
    all_pairs = set(combinations(G.vertices, 2))
    return SimpleGraph(G.num_vertices, frozenset(all_pairs - G.edges))


# ---------------------------------------------------------------------------
# chordality
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EliminationOrder:
    order: tuple[int, ...]

    def position(self) -> dict[int, int]:
        return {v: k for k, v in enumerate(self.order)}


def is_perfect_elimination_order(G: SimpleGraph, order: Iterable[int]) -> bool:
    """Each vertex's later neighbours form a clique."""
    order = tuple(order)
    if sorted(order) != list(G.vertices):
        return False
    pos = {v: k for k, v in enumerate(order)}
    adj = G.adjacency()
    for v in order:
        later = [w for w in adj[v] if pos[w] > pos[v]]
        for a, b in combinations(later, 2):
            if b not in adj[a]:
                return False
    return True


def maximum_cardinality_search(G: SimpleGraph) -> list[int]:
    """Visit order of MCS; ties go to the smallest label."""
    adj = G.adjacency()
    weight = {v: 0 for v in G.vertices}
    visited: list[int] = []
    remaining = set(G.vertices)
    while remaining:
        v = min(remaining, key=lambda u: (-weight[u], u))
        remaining.remove(v)
        visited.append(v)
        for w in adj[v]:
            if w in remaining:
                weight[w] += 1
    return visited


def perfect_elimination_order(G: SimpleGraph) -> Optional[EliminationOrder]:
    """A verified perfect elimination order, or None when G is not chordal."""
    order = tuple(reversed(maximum_cardinality_search(G)))
    if is_perfect_elimination_order(G, order):
        return EliminationOrder(order)
    return None


def is_chordal(G: SimpleGraph) -> bool:
    return perfect_elimination_order(G) is not None


def is_cochordal(G: SimpleGraph) -> bool:
    return is_chordal(complement(G))


def all_perfect_elimination_orders(G: SimpleGraph, limit: int = 10_000) -> list[EliminationOrder]:
    """Every perfect elimination order (by repeatedly removing simplicial vertices)."""
    adj = G.adjacency()
    out: list[EliminationOrder] = []

    def rec(prefix: list[int], alive: set[int]) -> None:
        if len(out) >= limit:
            return
        if not alive:
            out.append(EliminationOrder(tuple(prefix)))
            return
        for v in sorted(alive):
            nb = adj[v] & alive
            if all(b in adj[a] for a, b in combinations(sorted(nb), 2)):
                rec(prefix + [v], alive - {v})

    rec([], set(G.vertices))
    return out


# ---------------------------------------------------------------------------
# edge and cover ideals
# ---------------------------------------------------------------------------


def edge_ideal(G: SimpleGraph) -> MonomialIdeal:
    n = G.num_vertices
    return MonomialIdeal(RingContext(n), [Monomial.from_support(n, e) for e in G.edges])


def minimal_vertex_covers(G: SimpleGraph) -> list[frozenset[int]]:
    n = G.num_vertices
    emask = [(1 << (a - 1)) | (1 << (b - 1)) for a, b in G.edges]
    covers = [c for c in range(1 << n) if all(c & e for e in emask)]
    cover_set = set(covers)
    minimal = [c for c in covers if not any((c & ~(1 << k)) in cover_set for k in range(n) if (c >> k) & 1)]
    return [frozenset(k + 1 for k in range(n) if (c >> k) & 1) for c in minimal]


def cover_ideal(G: SimpleGraph) -> MonomialIdeal:
    n = G.num_vertices
    return MonomialIdeal(RingContext(n), [Monomial.from_support(n, C) for C in minimal_vertex_covers(G)])


def edge_ideal_splitting(G: SimpleGraph, peo: EliminationOrder) -> tuple[int, MonomialIdeal, MonomialIdeal]:
    """I(G) = x_v (x_j : j in N(v)) + I(G - v) for v the first non-isolated vertex of ``peo``.

    ``peo`` must be a perfect elimination order of the complement of G.
    """
    if not is_perfect_elimination_order(complement(G), peo.order):
        raise NotCochordalError("order is not a perfect elimination order of the complement")
    if not G.edges:
        raise ValueError("the edgeless graph has the zero edge ideal; nothing to split")
    adj = G.adjacency()
    v = next(u for u in peo.order if adj[u])
    ring = RingContext(G.num_vertices)
    I1 = MonomialIdeal(ring, [ring.variable(j) for j in sorted(adj[v])])
    I2 = edge_ideal(G.delete_vertex(v))
    parts = try_split_at(edge_ideal(G), v)
    if parts is None or parts != (I1, I2):
        raise AssertionError("edge-ideal decomposition is not a vertex splitting")
    return v, I1, I2


def edge_ideal_certificate(G: SimpleGraph, peo: Optional[EliminationOrder] = None) -> SplitCertificate:
    """Full certificate for I(G) by repeated neighbourhood splits along a PEO of G^c."""
    if peo is None:
        peo = perfect_elimination_order(complement(G))
        if peo is None:
            raise NotCochordalError("graph is not cochordal")
    if not G.edges:
        return LeafZero()
    if len(G.edges) == 1:
        return LeafPrincipal(next(iter(edge_ideal(G).gens)))
    v, I1, _ = edge_ideal_splitting(G, peo)
    rest = G.delete_vertex(v)
    rest_order = EliminationOrder(tuple(u for u in peo.order if u != v) + (v,))
    # v is isolated in G - v, hence universal in its complement; moving it last keeps the order perfect
    inner = variables_certificate(I1.support(), I1.ring)
    return Node(v, inner, edge_ideal_certificate(rest, rest_order))


# ---------------------------------------------------------------------------
# bi-Cohen-Macaulay graphs
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BicmReport:
    bicm: bool
    peo: Optional[tuple[int, ...]]
    projdim: Optional[int] = None
    witness_violation: Optional[dict] = None

    def to_json(self) -> dict:
        out = {"bicm": self.bicm, "peo": list(self.peo) if self.peo is not None else None}
        if self.projdim is not None:
            out["projdim"] = self.projdim
        if self.witness_violation is not None:
            out["witness_violation"] = self.witness_violation
        return out


def forward_degrees(G: SimpleGraph, order: Iterable[int]) -> list[int]:
    """|N_G(v_k) intersected with {v_k, ..., v_m}| along ``order``."""
    order = list(order)
    pos = {v: k for k, v in enumerate(order)}
    adj = G.adjacency()
    return [sum(1 for w in adj[v] if pos[w] > pos[v]) for v in order]


def bicm_condition(G: SimpleGraph, order: Iterable[int], literal: bool = False) -> BicmReport:
    """Check the forward-degree identity f(i) = f(j) + (j - i) along a PEO of the complement.

    f(k) = |N_G(v_k) cap {v_k, ..., v_m}|, over positions with f > 0. The identity
    alone is order dependent: the path 1-4-2 ordered (4, 1, 2) has a single
    active position and passes vacuously although x4*(x1, x2) is not CM. Unless
    ``literal`` is set, the last active position must also have f = 1, which
    makes the test exact for every perfect elimination order.
    """
    order = tuple(order)
    f = forward_degrees(G, order)
    active = [k for k in range(len(order)) if f[k] > 0]
    for a in active:
        for b in active:
            if a < b and f[a] != f[b] + (b - a):
                return BicmReport(False, order, None, {
                    "i": order[a], "j": order[b], "forward_i": f[a], "forward_j": f[b],
                    "position_i": a + 1, "position_j": b + 1,
                })
    if active and not literal and f[active[-1]] != 1:
        last = active[-1]
        return BicmReport(False, order, None, {
            "i": order[last], "j": order[last], "forward_i": f[last], "forward_j": f[last],
            "position_i": last + 1, "position_j": last + 1,
        })
    projdim = f[active[0]] + active[0] if active else 0
    return BicmReport(True, order, projdim)


def is_bicm(G: SimpleGraph, peo: Optional[EliminationOrder] = None, literal: bool = False) -> BicmReport:
    """bi-CM test: G^c chordal and the forward-degree identity along a PEO of G^c.

    Isolated vertices are dropped first (they do not change I(G)). On success the
    report carries projdim S/I(G) = |N(i) cap {i..n}| + (i - 1).
    """
    isolated = set(G.isolated_vertices())
    H, old = G.induced(v for v in G.vertices if v not in isolated)
    if not H.edges:
        return BicmReport(True, tuple(old), 0)
    if peo is None:
        found = perfect_elimination_order(complement(H))
        if found is None:
            return BicmReport(False, None)
        order = found.order
    else:
        kept = [v for v in peo.order if v not in isolated]
        new = {v: k + 1 for k, v in enumerate(old)}
        order = tuple(new[v] for v in kept)
        if not is_perfect_elimination_order(complement(H), order):
            raise NotCochordalError("given order is not a perfect elimination order of the complement")
    rep = bicm_condition(H, order, literal)
    mapped = tuple(old[v - 1] for v in order)
    viol = None
    if rep.witness_violation is not None:
        viol = dict(rep.witness_violation)
        viol["i"] = old[viol["i"] - 1]
        viol["j"] = old[viol["j"] - 1]
    return BicmReport(rep.bicm, mapped, rep.projdim, viol)
