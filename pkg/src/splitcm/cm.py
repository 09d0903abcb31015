"""Cohen-Macaulay certification of vertex splittable ideals.

The engine is depth S/I == dim S/I with depth from the splitting recursion.
The colon/sum recursion (CM(I) iff CM(I_1), CM(I_2) and
depth S/I_1 = depth S/I_2 - 1, for I inside m^2) is produced alongside as an
explanation tree and checked against the engine at every node.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Optional

from .betti import GradedBettiTable
from .monomial import MonomialIdeal, RingContext, krull_dim_quotient
from .splitting import (
    LeafPrincipal,
    LeafUnit,
    LeafZero,
    Node,
    SplitCertificate,
    betti_table,
    depth_quotient,
    reconstruct,
    reg_quotient,
    require_certificate,
)


class ConsistencyError(RuntimeError):
    """Two routes to the same invariant disagreed. Always a bug."""


class NotCohenMacaulayError(ValueError):
    pass


@dataclass(frozen=True)
class HomologicalSummary:
    depth: int
    krull_dim: int
    projdim: int
    reg: int
    cm: bool
    cm_type: Optional[int]
    level: Optional[bool]
    pseudo_gorenstein: Optional[bool]
    gorenstein: bool

    def to_json(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class CMExplanation:
    """One node of the colon/sum recursion.

    ``criterion_applies`` is False when the ideal is not inside m^2 (or is a
    leaf); then only the direct depth == dim verdict is recorded.
    """

    ideal: str
    cm: bool
    depth: int
    dim: int
    criterion_applies: bool
    var: Optional[int] = None
    depth_colon: Optional[int] = None
    depth_sum: Optional[int] = None
    colon: Optional["CMExplanation"] = None
    outer: Optional["CMExplanation"] = None

    def to_json(self) -> dict:
        out = {"ideal": self.ideal, "cm": self.cm, "depth": self.depth, "dim": self.dim,
               "criterion_applies": self.criterion_applies}
        if self.var is not None:
            out.update(var=self.var, depth_colon=self.depth_colon, depth_sum=self.depth_sum)
        if self.colon is not None:
            out["colon"] = self.colon.to_json()
        if self.outer is not None:
            out["outer"] = self.outer.to_json()
        return out

    def format(self, indent: int = 0) -> str:
        pad = "  " * indent
        tag = "CM" if self.cm else "not CM"
        line = f"{pad}{self.ideal}: depth {self.depth}, dim {self.dim} -> {tag}"
        if self.var is None:
            return line
        if not self.criterion_applies:
            return line + f"  [split at x{self.var}; not inside m^2, criterion not applied]"
        lines = [
            line,
            f"{pad}  split at x{self.var}: depth S/(I:x{self.var}) = {self.depth_colon}, "
            f"depth S/(I,x{self.var}) = {self.depth_sum}",
        ]
        if self.colon is not None:
            lines.append(self.colon.format(indent + 1))
        if self.outer is not None:
            lines.append(self.outer.format(indent + 1))
        return "\n".join(lines)


def _is_cm_direct(cert: SplitCertificate, ring: RingContext) -> bool:
    if isinstance(cert, LeafUnit):
        raise ValueError("S/S is the zero module")
    I = reconstruct(cert, ring)
    return depth_quotient(cert, ring) == krull_dim_quotient(I)


def explain_cm(cert: SplitCertificate, ring: RingContext) -> CMExplanation:
    I = reconstruct(cert, ring)
    depth = depth_quotient(cert, ring)
    dim = krull_dim_quotient(I)
    cm = depth == dim
    if not isinstance(cert, Node):
        return CMExplanation(str(I), cm, depth, dim, criterion_applies=False)
    if not I.in_square_of_maximal():
        return CMExplanation(str(I), cm, depth, dim, criterion_applies=False, var=cert.var)
    i = cert.var
    # (I : x_i) = I_1, and (I, x_i) = (I_2, x_i) is CM iff I_2 is, with depth one less
    colon = explain_cm(cert.inner, ring)
    outer = explain_cm(cert.outer, ring)
    depth_sum = outer.depth - 1
    verdict = colon.cm and outer.cm and colon.depth == depth_sum
    if verdict != cm:
        raise ConsistencyError(f"colon/sum recursion disagrees with depth == dim on {I}")
    return CMExplanation(str(I), cm, depth, dim, True, i, colon.depth, depth_sum, colon, outer)


def is_cm(I: MonomialIdeal, cert: Optional[SplitCertificate] = None) -> tuple[bool, CMExplanation]:
    """CM verdict for a vertex splittable ideal with its explanation tree."""
    cert = require_certificate(I, cert)
    if I.is_unit():
        raise ValueError("S/S is the zero module")
    expl = explain_cm(cert, I.ring)
    return expl.cm, expl


def _require_cm(cert: SplitCertificate, ring: RingContext) -> None:
    if not _is_cm_direct(cert, ring):
        raise NotCohenMacaulayError(f"{reconstruct(cert, ring)} is not Cohen-Macaulay")


# ---------------------------------------------------------------------------
# recursive type / level / pseudo-Gorenstein, valid for CM certificates
# ---------------------------------------------------------------------------


def _recursive_invariants(cert: SplitCertificate, ring: RingContext) -> tuple[int, bool, bool, int]:
    """(CM-type, level, pseudo-Gorenstein, reg) of S/I for a CM certificate.

    At a node with I_1 != S and I_2 != 0 this is the additive type formula and
    the level/pseudo-Gorenstein criteria on reg S/I_1 + 1 versus reg S/I_2.
    I_1 = S means I = (x_i) + I_2 and S/I has the invariants of S/I_2;
    I_2 = 0 means I = x_i*I_1, a degree shift of I_1.
    """
    if isinstance(cert, LeafZero):
        return 1, True, True, 0
    if isinstance(cert, LeafPrincipal):
        return 1, True, True, cert.generator.degree - 1
    if isinstance(cert, LeafUnit):
        raise ValueError("S/S is the zero module")
    if isinstance(cert.inner, LeafUnit):
        return _recursive_invariants(cert.outer, ring)
    t1, lv1, pg1, r1 = _recursive_invariants(cert.inner, ring)
    if isinstance(cert.outer, LeafZero):
        return t1, lv1, pg1, r1 + 1
    t2, lv2, pg2, r2 = _recursive_invariants(cert.outer, ring)
    level = lv1 and lv2 and r1 + 1 == r2
    pg = (pg1 and r1 + 1 > r2) or (pg2 and r1 + 1 < r2)
    return t1 + t2, level, pg, max(r1 + 1, r2)


def _table_invariants(table: GradedBettiTable) -> tuple[int, bool, bool]:
    q = table.quotient()
    p = q.projdim
    reg = q.reg
    last = q.row(p)
    top = q.get((p, p + reg))
    if top < 1:
        raise ConsistencyError("extremal Betti number beta_{p,p+reg} vanished")
    typ = sum(last.values())
    return typ, typ == top, top == 1


def cm_type(I: MonomialIdeal, cert: Optional[SplitCertificate] = None) -> int:
    cert = require_certificate(I, cert)
    _require_cm(cert, I.ring)
    rec = _recursive_invariants(cert, I.ring)[0]
    tab = _table_invariants(betti_table(cert))[0]
    if rec != tab:
        raise ConsistencyError(f"CM-type recursion {rec} != Betti table {tab} on {I}")
    return rec


def gorenstein_shape(I: MonomialIdeal) -> bool:
    """Variables plus at most one further generator, i.e. (x_A) + (u) with u free of x_A.

    Inside m^2 this is exactly "principal"; outside m^2 it also admits
    mixed ideals such as (x1^2, x2), which are complete intersections.
    """
    return sum(1 for u in I.gens if u.degree > 1) <= 1


def is_principal_or_variables(I: MonomialIdeal) -> bool:
    """The narrower syntactic test: principal, or generated by a subset of the variables."""
    return I.is_zero() or I.is_principal() or I.is_generated_by_variables()


def is_gorenstein(I: MonomialIdeal, cert: Optional[SplitCertificate] = None) -> bool:
    """Syntactic Gorenstein test for a vertex splittable I (see :func:`gorenstein_shape`)."""
    require_certificate(I, cert)
    return gorenstein_shape(I)


def is_level(I: MonomialIdeal, cert: Optional[SplitCertificate] = None) -> bool:
    return _level_pg(I, cert)[0]


def is_pseudo_gorenstein(I: MonomialIdeal, cert: Optional[SplitCertificate] = None) -> bool:
    return _level_pg(I, cert)[1]


def _level_pg(I: MonomialIdeal, cert: Optional[SplitCertificate]) -> tuple[bool, bool]:
    cert = require_certificate(I, cert)
    _require_cm(cert, I.ring)
    _, lv, pg, _ = _recursive_invariants(cert, I.ring)
    _, lv_t, pg_t = _table_invariants(betti_table(cert))
    if (lv, pg) != (lv_t, pg_t):
        raise ConsistencyError(f"level/pseudo-Gorenstein recursion disagrees with Betti table on {I}")
    return lv, pg


def homological_summary(cert: SplitCertificate, ring: RingContext) -> HomologicalSummary:
    """All invariants of S/I, each cross-checked between recursion and Betti table."""
    I = reconstruct(cert, ring)
    if I.is_unit() or I.is_zero():
        raise ValueError("homological summary needs a proper nonzero ideal")
    depth = depth_quotient(cert, ring)
    dim = krull_dim_quotient(I)
    table = betti_table(cert)
    projdim = ring.n - depth
    reg = reg_quotient(cert)
    if table.projdim + 1 != projdim:
        raise ConsistencyError(f"projdim: depth recursion gives {projdim}, table gives {table.projdim + 1}")
    if table.reg - 1 != reg:
        raise ConsistencyError(f"reg: recursion gives {reg}, table gives {table.reg - 1}")
    cm = depth == dim
    typ = level = pg = None
    if cm:
        typ, level, pg, reg_rec = _recursive_invariants(cert, ring)
        typ_t, level_t, pg_t = _table_invariants(table)
        if (typ, level, pg, reg_rec) != (typ_t, level_t, pg_t, reg):
            raise ConsistencyError(f"type/level/pseudo-Gorenstein mismatch on {I}")
    gorenstein = bool(cm and typ == 1)
    if gorenstein != gorenstein_shape(I):
        raise ConsistencyError(f"Gorenstein classification mismatch on {I}")
    return HomologicalSummary(depth, dim, projdim, reg, cm, typ, level, pg, gorenstein)


def summarize(I: MonomialIdeal) -> HomologicalSummary:
    return homological_summary(require_certificate(I), I.ring)


def cm_report(I: MonomialIdeal, explain: bool = False) -> dict:
    """JSON report {cm, depth, dim, projdim, reg, cm_type?, gorenstein, level?, pseudo_gorenstein?, explanation?}."""
    cert = require_certificate(I)
    s = homological_summary(cert, I.ring)
    out = {
        "cm": s.cm,
        "depth": s.depth,
        "dim": s.krull_dim,
        "projdim": s.projdim,
        "reg": s.reg,
        "gorenstein": s.gorenstein,
    }
    if s.cm:
        out.update(cm_type=s.cm_type, level=s.level, pseudo_gorenstein=s.pseudo_gorenstein)
    if explain:
        out["explanation"] = explain_cm(cert, I.ring).to_json()
    return out
