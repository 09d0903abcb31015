"""Vertex splittings: certificates, Betti tables, depth and regularity.

A vertex splitting of I at x_i is I = x_i*I_1 + I_2 where G(x_i*I_1) are the
generators divisible by x_i, G(I_2) the rest, and I_2 is contained in I_1.
The parts are forced by the variable, so the search in
:func:`certify_vertex_splittable` only chooses the variable.

I_2 is kept in the ambient n-variable ring; it never involves x_i, so every
depth/dimension identity below is the n-variable one. ``I_2 = 0`` is allowed.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from typing import Iterator, Optional, Union

from .betti import GradedBettiTable
from .monomial import Monomial, MonomialIdeal, RingContext, is_subideal


class NotVertexSplittableError(ValueError):
    pass


@dataclass(frozen=True)
class LeafUnit:
    kind = "unit"


@dataclass(frozen=True)
class LeafZero:
    kind = "zero"


@dataclass(frozen=True)
class LeafPrincipal:
    generator: Monomial
    kind = "principal"


@dataclass(frozen=True)
class Node:
    var: int
    inner: "SplitCertificate"
    outer: "SplitCertificate"
    kind = "node"


SplitCertificate = Union[LeafUnit, LeafZero, LeafPrincipal, Node]


def try_split_at(I: MonomialIdeal, i: int) -> Optional[tuple[MonomialIdeal, MonomialIdeal]]:
    """Return (I_1, I_2) if x_i is a splitting vertex candidate of I, else None.

    Only the containment I_2 in I_1 is checked here; recursive splittability of
    the parts is the caller's business.
    """
    I.ring.check_var(i)
    with_x = [g for g in I.gens if g.deg(i)]
    if not with_x:
        return None
    I1 = MonomialIdeal(I.ring, [g.times_var(i, -1) for g in with_x])
    I2 = MonomialIdeal(I.ring, [g for g in I.gens if not g.deg(i)])
    if not is_subideal(I2, I1):
        return None
    return I1, I2


def splitting_candidates(I: MonomialIdeal) -> Iterator[tuple[int, MonomialIdeal, MonomialIdeal]]:
    """Every variable (increasing index) passing :func:`try_split_at`, with its parts."""
    for i in I.support():
        parts = try_split_at(I, i)
        if parts is not None:
            yield (i, *parts)


_CACHE: dict[MonomialIdeal, Optional[SplitCertificate]] = {}
_CACHE_LOCK = threading.Lock()


def clear_cache() -> None:
    with _CACHE_LOCK:
        _CACHE.clear()


def certify_vertex_splittable(I: MonomialIdeal) -> Optional[SplitCertificate]:
    """A certificate that I is vertex splittable, or None if it is not."""
    if I.is_unit():
        return LeafUnit()
    if I.is_zero():
        return LeafZero()
    if len(I.gens) == 1:
        return LeafPrincipal(I.gens[0])
    hit = _CACHE.get(I, _MISSING)
    if hit is not _MISSING:
        return hit
    result = None
    for i, I1, I2 in splitting_candidates(I):
        c1 = certify_vertex_splittable(I1)
        if c1 is None:
            continue
        c2 = certify_vertex_splittable(I2)
        if c2 is None:
            continue
        result = Node(i, c1, c2)
        break
    with _CACHE_LOCK:
        _CACHE[I] = result
    return result


_MISSING = object()


def is_vertex_splittable(I: MonomialIdeal) -> bool:
    return certify_vertex_splittable(I) is not None


def admissible_splitting_vertices(I: MonomialIdeal) -> list[tuple[int, MonomialIdeal, MonomialIdeal]]:
    """Variables x_i for which I = x_i*I_1 + I_2 with I_1, I_2 vertex splittable."""
    return [
        (i, I1, I2)
        for i, I1, I2 in splitting_candidates(I)
        if is_vertex_splittable(I1) and is_vertex_splittable(I2)
    ]


def require_certificate(I: MonomialIdeal, cert: Optional[SplitCertificate] = None) -> SplitCertificate:
    if cert is None:
        cert = certify_vertex_splittable(I)
    if cert is None:
        raise NotVertexSplittableError(f"{I} is not vertex splittable")
    return cert


def reconstruct(cert: SplitCertificate, ring: RingContext) -> MonomialIdeal:
    """The ideal a certificate describes; checks the splitting conditions at every node."""
    if isinstance(cert, LeafUnit):
        return MonomialIdeal.unit(ring)
    if isinstance(cert, LeafZero):
        return MonomialIdeal.zero(ring)
    if isinstance(cert, LeafPrincipal):
        return MonomialIdeal(ring, (cert.generator,))
    I1 = reconstruct(cert.inner, ring)
    I2 = reconstruct(cert.outer, ring)
    i = cert.var
    if any(g.deg(i) for g in I2.gens):
        raise ValueError(f"x{i} divides a generator of the outer part")
    if not is_subideal(I2, I1):
        raise ValueError("outer part is not contained in inner part")
    xI1 = I1.times_var(i)
    I = xI1 + I2
    if set(I.gens) != set(xI1.gens) | set(I2.gens) or set(xI1.gens) & set(I2.gens):
        raise ValueError("generators do not split as a disjoint union")
    return I


def betti_table(cert: SplitCertificate) -> GradedBettiTable:
    """Graded Betti numbers of the ideal from beta(I) = beta(I_1)[j-1] + beta(I_2) + beta(I_2)[i-1, j-1]."""
    if isinstance(cert, LeafZero):
        return GradedBettiTable()
    if isinstance(cert, LeafUnit):
        return GradedBettiTable({(0, 0): 1})
    if isinstance(cert, LeafPrincipal):
        return GradedBettiTable({(0, cert.generator.degree): 1})
    b1 = betti_table(cert.inner)
    b2 = betti_table(cert.outer)
    return b1.shift(0, 1) + b2 + b2.shift(1, 1)


def depth_quotient(cert: SplitCertificate, ring: RingContext) -> int:
    """depth S/I via depth S/I = min{depth S/I_1, depth S/I_2 - 1}."""
    d = _depth(cert, ring.n)
    if d == math.inf:
        raise ValueError("S/S is the zero module; depth is undefined")
    return int(d)


def _depth(cert: SplitCertificate, n: int) -> float:
    if isinstance(cert, LeafUnit):
        return math.inf
    if isinstance(cert, LeafZero):
        return n
    if isinstance(cert, LeafPrincipal):
        return n if cert.generator.degree == 0 else n - 1
    return min(_depth(cert.inner, n), _depth(cert.outer, n) - 1)


def reg_quotient(cert: SplitCertificate) -> int:
    """reg S/I via reg S/I = max{reg S/I_1 + 1, reg S/I_2} (I_2 = 0 dropped)."""
    if isinstance(cert, LeafUnit):
        raise ValueError("S/S is the zero module; regularity is undefined")
    return _reg(cert)


def _reg(cert: SplitCertificate) -> Optional[int]:
    # None encodes reg of S/0, which never dominates; -1 encodes S/S (reg S/I_1 + 1 = 0)
    if isinstance(cert, LeafUnit):
        return -1
    if isinstance(cert, LeafZero):
        return None
    if isinstance(cert, LeafPrincipal):
        return cert.generator.degree - 1
    r1 = _reg(cert.inner)
    r2 = _reg(cert.outer)
    return r1 + 1 if r2 is None else max(r1 + 1, r2)


def certificate_size(cert: SplitCertificate) -> int:
    if isinstance(cert, Node):
        return 1 + certificate_size(cert.inner) + certificate_size(cert.outer)
    return 1


def variables_certificate(indices, ring: RingContext) -> SplitCertificate:
    """Certificate for (x_a, x_b, ...): split off the smallest variable each time."""
    idx = sorted(set(indices))
    if not idx:
        return LeafZero()
    if len(idx) == 1:
        return LeafPrincipal(ring.variable(idx[0]))
    return Node(idx[0], LeafUnit(), variables_certificate(idx[1:], ring))


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------


def certificate_to_json(cert: SplitCertificate) -> dict:
    if isinstance(cert, Node):
        return {
            "kind": "node",
            "var": cert.var,
            "inner": certificate_to_json(cert.inner),
            "outer": certificate_to_json(cert.outer),
        }
    if isinstance(cert, LeafPrincipal):
        return {"kind": "principal", "gen": list(cert.generator.exponents)}
    return {"kind": cert.kind}


def certificate_from_json(obj: dict) -> SplitCertificate:
    kind = obj["kind"]
    if kind == "unit":
        return LeafUnit()
    if kind == "zero":
        return LeafZero()
    if kind == "principal":
        return LeafPrincipal(Monomial(tuple(obj["gen"])))
    if kind == "node":
        return Node(int(obj["var"]), certificate_from_json(obj["inner"]), certificate_from_json(obj["outer"]))
    raise ValueError(f"unknown certificate kind {kind!r}")


def format_certificate(cert: SplitCertificate, ring: RingContext, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(cert, Node):
        I = reconstruct(cert, ring)
        return "\n".join(
            [
                f"{pad}{I} = x{cert.var}*I1 + I2",
                f"{pad}  I1:",
                format_certificate(cert.inner, ring, indent + 2),
                f"{pad}  I2:",
                format_certificate(cert.outer, ring, indent + 2),
            ]
        )
    if isinstance(cert, LeafPrincipal):
        return f"{pad}({cert.generator})  [principal]"
    return f"{pad}{'(1)' if isinstance(cert, LeafUnit) else '(0)'}  [{cert.kind}]"


# ---------------------------------------------------------------------------
# linear quotients
# ---------------------------------------------------------------------------


def _colon_is_linear(prev: list[Monomial], u: Monomial) -> bool:
    # (prev) : u is generated by v / gcd(v, u); linear means its minimal generators are variables
    if not prev:
        return True
    quotients = MonomialIdeal(RingContext(u.num_vars), [v.colon(u) for v in prev])
    return all(g.degree == 1 for g in quotients.gens)


def linear_quotients_order(I: MonomialIdeal, max_nodes: int = 200_000) -> Optional[list[Monomial]]:
    """An order u_1, ..., u_m of G(I) with every (u_1..u_{k-1}) : u_k generated by variables.

    Greedy extension with backtracking; candidates are tried by increasing degree.
    Returns None when no order exists (or the node budget is exhausted).
    """
    gens = sorted(I.gens, key=lambda g: (g.degree, g.exponents))
    if len(gens) <= 1:
        return list(gens)
    budget = [max_nodes]
    seen_dead: set[frozenset[int]] = set()

    def rec(order: list[int], used: frozenset[int]) -> Optional[list[int]]:
        if len(order) == len(gens):
            return order
        if used in seen_dead:
            return None
        budget[0] -= 1
        if budget[0] < 0:
            return None
        prev = [gens[k] for k in order]
        for k in range(len(gens)):
            if k in used:
                continue
            if _colon_is_linear(prev, gens[k]):
                found = rec(order + [k], used | {k})
                if found is not None:
                    return found
        seen_dead.add(used)
        return None

    for start in range(len(gens)):
        res = rec([start], frozenset([start]))
        if res is not None:
            return [gens[k] for k in res]
    return None
