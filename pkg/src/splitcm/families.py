"""t-spread strongly stable and (componentwise) polymatroidal ideals."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement
from typing import Optional, Sequence

from .monomial import Monomial, MonomialIdeal, RingContext, degree_component


class FamilyPreconditionError(ValueError):
    pass


# ---------------------------------------------------------------------------
# t-spread
# ---------------------------------------------------------------------------


def _spread(t: Sequence[int]) -> tuple[int, ...]:
    t = tuple(int(x) for x in t)
    if not t or any(x < 0 for x in t):
        raise ValueError("spread vector needs at least one nonnegative entry")
    return t


def is_tspread_monomial(u: Monomial, t: Sequence[int]) -> bool:
    """i_{j+1} - i_j >= t_j along the sorted indices of u (with multiplicity)."""
    t = _spread(t)
    idx = u.indices()
    if len(idx) > len(t) + 1:
        raise ValueError(f"{u} has degree {len(idx)} > {len(t) + 1}")
    return all(idx[k + 1] - idx[k] >= t[k] for k in range(len(idx) - 1))


def tspread_monomials(n: int, t: Sequence[int], degree: int) -> list[Monomial]:
    t = _spread(t)
    out = []
    for combo in combinations_with_replacement(range(1, n + 1), degree):
        if all(combo[k + 1] - combo[k] >= t[k] for k in range(degree - 1)):
            out.append(Monomial.from_support(n, combo))
    return out


def is_tspread_strongly_stable(I: MonomialIdeal, t: Sequence[int]) -> bool:
    """Closed under u -> x_i (u / x_j), i < j, whenever the result is t-spread.

    Every t-spread monomial of I has degree at most len(t) + 1, so the check
    runs over all of them.
    """
    t = _spread(t)
    d = len(t) + 1
    for g in I.gens:
        if g.degree > d or not is_tspread_monomial(g, t):
            raise FamilyPreconditionError(f"generator {g} is not {t}-spread")
    n = I.n
    for deg in range(1, d + 1):
        for u in tspread_monomials(n, t, deg):
            if not I.contains(u):
                continue
            for j in u.support():
                for i in range(1, j):
                    v = u.times_var(j, -1).times_var(i)
                    if is_tspread_monomial(v, t) and not I.contains(v):
                        return False
    return True


def tspread_witnesses(n: int, t: Sequence[int]) -> list[Monomial]:
    """x_{n-(t_1+..+t_{l-1})} x_{n-(t_2+..+t_{l-1})} ... x_{n-t_{l-1}} x_n for l = 2..d."""
    t = _spread(t)
    out = []
    for l in range(2, len(t) + 2):
        idx = [n - sum(t[k:l - 1]) for k in range(l - 1)] + [n]
        if idx[0] >= 1:
            out.append(Monomial.from_support(n, idx))
    return out


def tspread_cm_criterion(I: MonomialIdeal, t: Sequence[int]) -> bool:
    """CM test for t-spread strongly stable I in m^2: some witness lies in G(I).

    The ring is first shrunk to the largest variable dividing a generator.
    """
    t = _spread(t)
    if I.is_zero() or not I.in_square_of_maximal():
        raise FamilyPreconditionError("criterion needs a nonzero ideal inside m^2")
    if not is_tspread_strongly_stable(I, t):
        raise FamilyPreconditionError(f"{I} is not {t}-spread strongly stable")
    n = I.effective_num_vars()
    gens = {g.exponents[:n] for g in I.gens}
    return any(w.exponents in gens for w in tspread_witnesses(n, t))


def restrict_ring(I: MonomialIdeal, n: int) -> MonomialIdeal:
    """View I (not involving x_{n+1}, ...) in K[x_1..x_n]."""
    if I.effective_num_vars() > n:
        raise ValueError("ideal involves variables beyond the target ring")
    return MonomialIdeal(RingContext(n), [Monomial(g.exponents[:n]) for g in I.gens])


# ---------------------------------------------------------------------------
# polymatroidal
# ---------------------------------------------------------------------------


def _single_degree(I: MonomialIdeal) -> Optional[int]:
    degs = set(I.degrees())
    if len(degs) > 1:
        raise FamilyPreconditionError(f"{I} is not generated in a single degree")
    return degs.pop() if degs else None


def is_polymatroidal(I: MonomialIdeal) -> bool:
    """Exchange property on G(I): for u, v and x_i with deg_i u > deg_i v there is
    x_j with deg_j u < deg_j v and x_j (u / x_i) in G(I)."""
    _single_degree(I)
    G = set(I.gens)
    n = I.n
    for u in I.gens:
        for v in I.gens:
            if u == v:
                continue
            for i in range(1, n + 1):
                if u.deg(i) <= v.deg(i):
                    continue
                w = u.times_var(i, -1)
                if not any(u.deg(j) < v.deg(j) and w.times_var(j) in G for j in range(1, n + 1)):
                    return False
    return True


def is_componentwise_polymatroidal(I: MonomialIdeal) -> bool:
    """I_<j> polymatroidal for min..max generator degree.

    Above the top generator degree D, I_<j> = m^(j-D) I_<D> is a product of
    polymatroidal ideals, so no further degrees are checked.
    """
    if I.is_zero():
        return True
    degs = I.degrees()
    return all(is_polymatroidal(degree_component(I, j)) for j in range(min(degs), max(degs) + 1))


class PolymatroidalTag(enum.Enum):
    PRINCIPAL = "principal"
    VERONESE = "veronese"
    SQUAREFREE_VERONESE = "squarefree_veronese"
    NOT_CM = "not_cm"


@dataclass(frozen=True)
class PolymatroidalClassification:
    tag: PolymatroidalTag
    num_vars: Optional[int] = None
    degree: Optional[int] = None

    @property
    def is_cm(self) -> bool:
        return self.tag is not PolymatroidalTag.NOT_CM

    def to_json(self) -> dict:
        out = {"tag": self.tag.value}
        if self.num_vars is not None:
            out.update(n=self.num_vars, d=self.degree)
        return out


def classify_cm_polymatroidal(I: MonomialIdeal) -> PolymatroidalClassification:
    """Principal, Veronese on its support, squarefree Veronese on its support, or not CM."""
    if I.is_zero() or I.is_unit():
        raise FamilyPreconditionError("classification needs a proper nonzero ideal")
    if not is_polymatroidal(I):
        raise FamilyPreconditionError(f"{I} is not polymatroidal")
    if len(I.gens) == 1:
        return PolymatroidalClassification(PolymatroidalTag.PRINCIPAL)
    d = I.gens[0].degree
    supp = I.support()
    G = set(I.gens)
    n = I.n
    ver = {Monomial.from_support(n, c) for c in combinations_with_replacement(supp, d)}
    if G == ver:
        return PolymatroidalClassification(PolymatroidalTag.VERONESE, len(supp), d)
    if d <= len(supp):
        sq = {Monomial.from_support(n, c) for c in combinations(supp, d)}
        if G == sq:
            return PolymatroidalClassification(PolymatroidalTag.SQUAREFREE_VERONESE, len(supp), d)
    return PolymatroidalClassification(PolymatroidalTag.NOT_CM)


def veronese(n: int, d: int) -> MonomialIdeal:
    """m^d in K[x_1..x_n]."""
    if n < 1 or d < 1:
        raise ValueError("need n >= 1 and d >= 1")
    ring = RingContext(n)
    return MonomialIdeal(ring, ring.monomials_of_degree(d))


def squarefree_veronese(n: int, d: int) -> MonomialIdeal:
    """I_{n,d}: all squarefree monomials of degree d."""
    if n < 1 or d < 1:
        raise ValueError("need n >= 1 and d >= 1")
    if d > n:
        raise ValueError(f"squarefree Veronese needs d <= n, got d={d} > n={n}")
    return MonomialIdeal(RingContext(n), [Monomial.from_support(n, c) for c in combinations(range(1, n + 1), d)])
