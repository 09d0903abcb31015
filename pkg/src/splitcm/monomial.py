"""Monomials and monomial ideals of S = K[x_1, ..., x_n].

Variables are addressed by 1-based index everywhere in the public API so that
``i`` always means ``x_i``. Exponent vectors are stored 0-based internally.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import Iterable, Iterator


class RingMismatchError(ValueError):
    """Monomials or ideals from rings with different numbers of variables."""


class ParseError(ValueError):
    """Malformed ideal or graph text."""


@dataclass(frozen=True)
class RingContext:
    num_vars: int

    def __post_init__(self):
        if int(self.num_vars) < 1:
            raise ValueError("a polynomial ring needs at least one variable")

    @property
    def n(self) -> int:
        return self.num_vars

    def check_var(self, i: int) -> None:
        if not 1 <= i <= self.num_vars:
            raise IndexError(f"variable index {i} outside 1..{self.num_vars}")

    def variable(self, i: int) -> "Monomial":
        self.check_var(i)
        return Monomial(tuple(1 if k == i - 1 else 0 for k in range(self.num_vars)))

    def one(self) -> "Monomial":
        return Monomial((0,) * self.num_vars)

    def monomials_of_degree(self, d: int) -> list["Monomial"]:
        """All monomials of total degree ``d``, sorted lexicographically on exponents."""
        out = []
        for combo in combinations_with_replacement(range(self.num_vars), d):
            e = [0] * self.num_vars
            for k in combo:
                e[k] += 1
            out.append(Monomial(tuple(e)))
        return sorted(out)


@dataclass(frozen=True, order=True)
class Monomial:
    exponents: tuple[int, ...]

    def __post_init__(self):
        if any(e < 0 for e in self.exponents):
            raise ValueError("exponents must be nonnegative")

    @classmethod
    def from_support(cls, n: int, indices: Iterable[int]) -> "Monomial":
        """Product of ``x_i`` over 1-based ``indices`` (repeats raise the exponent)."""
        e = [0] * n
        for i in indices:
            if not 1 <= i <= n:
                raise IndexError(f"variable index {i} outside 1..{n}")
            e[i - 1] += 1
        return cls(tuple(e))

    @property
    def num_vars(self) -> int:
        return len(self.exponents)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def deg(self, i: int) -> int:
        """Exponent of ``x_i`` (1-based)."""
        return self.exponents[i - 1]

    def support(self) -> tuple[int, ...]:
        return tuple(k + 1 for k, e in enumerate(self.exponents) if e)

    def indices(self) -> tuple[int, ...]:
        """Sorted variable indices with multiplicity: x1^2*x3 -> (1, 1, 3)."""
        return tuple(k + 1 for k, e in enumerate(self.exponents) for _ in range(e))

    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exponents)

    def _check(self, other: "Monomial") -> None:
        if len(other.exponents) != len(self.exponents):
            raise RingMismatchError("monomials live in rings of different size")

    def divides(self, other: "Monomial") -> bool:
        self._check(other)
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def __mul__(self, other: "Monomial") -> "Monomial":
        self._check(other)
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def lcm(self, other: "Monomial") -> "Monomial":
        self._check(other)
        return Monomial(tuple(max(a, b) for a, b in zip(self.exponents, other.exponents)))

    def gcd(self, other: "Monomial") -> "Monomial":
        self._check(other)
        return Monomial(tuple(min(a, b) for a, b in zip(self.exponents, other.exponents)))

    def quotient(self, other: "Monomial") -> "Monomial":
        """self / other; requires other | self."""
        if not other.divides(self):
            raise ValueError(f"{other} does not divide {self}")
        return Monomial(tuple(a - b for a, b in zip(self.exponents, other.exponents)))

    def colon(self, other: "Monomial") -> "Monomial":
        """self / gcd(self, other), the generator of (self) : (other)."""
        self._check(other)
        return Monomial(tuple(max(a - b, 0) for a, b in zip(self.exponents, other.exponents)))

    def times_var(self, i: int, power: int = 1) -> "Monomial":
        e = list(self.exponents)
        e[i - 1] += power
        return Monomial(tuple(e))

    def __str__(self) -> str:
        parts = []
        for k, e in enumerate(self.exponents):
            if e == 1:
                parts.append(f"x{k + 1}")
            elif e > 1:
                parts.append(f"x{k + 1}^{e}")
        return "*".join(parts) if parts else "1"


def _minimal(gens: Iterable[Monomial]) -> tuple[Monomial, ...]:
    # sorting by degree first means a divisor is always seen before its multiples
    keep: list[Monomial] = []
    for u in sorted(set(gens), key=lambda m: (m.degree, m.exponents)):
        if not any(v.divides(u) for v in keep):
            keep.append(u)
    return tuple(sorted(keep))


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal given by its minimal generators, stored in lex order.

    Any generating set may be passed; it is minimalized on construction, so two
    ideals compare equal exactly when they are equal as ideals.
    """

    ring: RingContext
    gens: tuple[Monomial, ...] = field(default=())

    def __post_init__(self):
        gens = tuple(self.gens)
        for g in gens:
            if g.num_vars != self.ring.num_vars:
                raise RingMismatchError(
                    f"generator {g} has {g.num_vars} variables, ring has {self.ring.num_vars}"
                )
        object.__setattr__(self, "gens", _minimal(gens))

    # constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, ring: RingContext) -> "MonomialIdeal":
        return cls(ring, ())

    @classmethod
    def unit(cls, ring: RingContext) -> "MonomialIdeal":
        return cls(ring, (ring.one(),))

    @classmethod
    def maximal(cls, ring: RingContext) -> "MonomialIdeal":
        return cls(ring, [ring.variable(i) for i in range(1, ring.n + 1)])

    @classmethod
    def from_exponents(cls, n: int, exps: Iterable[Iterable[int]]) -> "MonomialIdeal":
        return cls(RingContext(n), [Monomial(tuple(e)) for e in exps])

    @classmethod
    def parse(cls, text: str) -> "MonomialIdeal":
        return parse_ideal(text)

    # predicates -----------------------------------------------------------

    @property
    def n(self) -> int:
        return self.ring.num_vars

    def __len__(self) -> int:
        return len(self.gens)

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self.gens)

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return len(self.gens) == 1 and self.gens[0].degree == 0

    def is_principal(self) -> bool:
        return len(self.gens) == 1 and not self.is_unit()

    def is_squarefree(self) -> bool:
        return all(g.is_squarefree() for g in self.gens)

    def is_generated_by_variables(self) -> bool:
        return bool(self.gens) and all(g.degree == 1 for g in self.gens)

    def in_square_of_maximal(self) -> bool:
        """True iff I is contained in m^2, i.e. every generator has degree >= 2."""
        return all(g.degree >= 2 for g in self.gens)

    def degrees(self) -> list[int]:
        return [g.degree for g in self.gens]

    def support(self) -> tuple[int, ...]:
        s: set[int] = set()
        for g in self.gens:
            s.update(g.support())
        return tuple(sorted(s))

    def effective_num_vars(self) -> int:
        """Largest variable index dividing some generator (0 for the zero/unit ideal)."""
        s = self.support()
        return s[-1] if s else 0

    def _check(self, other) -> None:
        n = other.ring.num_vars if isinstance(other, MonomialIdeal) else other.num_vars
        if n != self.ring.num_vars:
            raise RingMismatchError("objects live in rings of different size")

    def contains(self, u: Monomial) -> bool:
        self._check(u)
        return any(g.divides(u) for g in self.gens)

    __contains__ = contains

    def is_subideal(self, other: "MonomialIdeal") -> bool:
        """True iff self is contained in other."""
        return is_subideal(self, other)

    # operations -----------------------------------------------------------

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._check(other)
        return MonomialIdeal(self.ring, self.gens + other.gens)

    def times_var(self, i: int) -> "MonomialIdeal":
        self.ring.check_var(i)
        return MonomialIdeal(self.ring, [g.times_var(i) for g in self.gens])

    def colon_var(self, i: int) -> "MonomialIdeal":
        return colon_by_variable(self, i)

    def add_var(self, i: int) -> "MonomialIdeal":
        return add_variable(self, i)

    def __str__(self) -> str:
        if not self.gens:
            return "(0)"
        return "(" + ", ".join(str(g) for g in reversed(self.gens)) + ")"

    def to_text(self) -> str:
        lines = [f"ring {self.n}"]
        lines.extend(str(g) for g in reversed(self.gens))
        return "\n".join(lines) + "\n"


def minimalize(gens: Iterable[Monomial], ring: RingContext | None = None) -> MonomialIdeal:
    """Ideal generated by ``gens``, with the divisibility-minimal generators kept."""
    gens = list(gens)
    if ring is None:
        if not gens:
            raise ValueError("cannot infer the ring of an empty generator list")
        ring = RingContext(gens[0].num_vars)
    return MonomialIdeal(ring, gens)


def contains(I: MonomialIdeal, u: Monomial) -> bool:
    return I.contains(u)


def is_subideal(A: MonomialIdeal, B: MonomialIdeal) -> bool:
    A._check(B)
    return all(B.contains(g) for g in A.gens)


def colon_by_variable(I: MonomialIdeal, i: int) -> MonomialIdeal:
    I.ring.check_var(i)
    out = []
    for g in I.gens:
        if g.deg(i):
            out.append(g.times_var(i, -1))
        else:
            out.append(g)
    return MonomialIdeal(I.ring, out)


def add_variable(I: MonomialIdeal, i: int) -> MonomialIdeal:
    return MonomialIdeal(I.ring, I.gens + (I.ring.variable(i),))


def degree_component(I: MonomialIdeal, j: int) -> MonomialIdeal:
    """The ideal generated by the degree-``j`` monomials of I."""
    if j < 0:
        raise ValueError("degree must be nonnegative")
    out = set()
    for g in I.gens:
        if g.degree > j:
            continue
        for w in I.ring.monomials_of_degree(j - g.degree):
            out.add(g * w)
    return MonomialIdeal(I.ring, out)


def _min_hitting_set_size(sets: list[frozenset[int]], best: int) -> int:
    # branch on the elements of an unhit set; prune against the incumbent
    def rec(remaining: list[frozenset[int]], size: int) -> None:
        nonlocal best
        if size >= best:
            return
        if not remaining:
            best = size
            return
        if size + 1 >= best:
            return
        pick = min(remaining, key=len)
        for v in sorted(pick):
            rec([s for s in remaining if v not in s], size + 1)

    rec(sets, 0)
    return best


def krull_dim_quotient(I: MonomialIdeal) -> int:
    """dim S/I = n - (minimum number of variables meeting every generator support)."""
    if I.is_unit():
        raise ValueError("S/S is the zero module; its dimension is undefined")
    if I.is_zero():
        return I.n
    supports = sorted({frozenset(g.support()) for g in I.gens}, key=len)
    # supports that contain another support are redundant for hitting
    reduced = [s for s in supports if not any(t < s for t in supports)]
    return I.n - _min_hitting_set_size(reduced, I.n + 1)


# ---------------------------------------------------------------------------
# text format
# ---------------------------------------------------------------------------

_FACTOR = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


def parse_monomial(token: str, n: int) -> Monomial:
    token = token.strip()
    if token == "1":
        return Monomial((0,) * n)
    e = [0] * n
    for factor in token.split("*"):
        m = _FACTOR.match(factor.strip())
        if not m:
            raise ParseError(f"bad factor {factor!r} in {token!r}")
        i = int(m.group(1))
        if not 1 <= i <= n:
            raise ParseError(f"variable x{i} outside ring of {n} variables")
        e[i - 1] += int(m.group(2)) if m.group(2) is not None else 1
    return Monomial(tuple(e))


def parse_ideal(text: str) -> MonomialIdeal:
    """Parse ``ring <n>`` followed by one generator per line (``x1^2*x3``)."""
    lines = [s for s in (_strip(line) for line in text.splitlines()) if s]
    if not lines:
        raise ParseError("empty input: expected 'ring <n>' header")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "ring" or not head[1].isdigit() or int(head[1]) < 1:
        raise ParseError(f"bad header {lines[0]!r}; expected 'ring <n>'")
    n = int(head[1])
    return MonomialIdeal(RingContext(n), [parse_monomial(s, n) for s in lines[1:]])
