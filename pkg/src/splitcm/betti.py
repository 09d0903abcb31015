"""Graded Betti tables.

Tables always describe the ideal I, not the quotient. ``quotient()`` returns the
entries of S/I under beta_{i,j}(S/I) = beta_{i-1,j}(I) for i >= 1 and
beta_{0,0}(S/I) = 1.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Mapping
from typing import Iterable, Iterator


class GradedBettiTable(Mapping):
    """Finitely supported map (i, j) -> beta_{i,j} > 0."""

    __slots__ = ("_entries",)

    def __init__(self, entries: Mapping[tuple[int, int], int] | Iterable[tuple[tuple[int, int], int]] = ()):
        items = entries.items() if isinstance(entries, Mapping) else entries
        acc: Counter = Counter()
        for (i, j), c in items:
            if c < 0:
                raise ValueError("Betti numbers are nonnegative")
            acc[(int(i), int(j))] += int(c)
        self._entries = {k: v for k, v in sorted(acc.items()) if v}

    def __getitem__(self, key):
        return self._entries[key]

    def get(self, key, default=0):
        return self._entries.get(key, default)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def __eq__(self, other) -> bool:
        if isinstance(other, GradedBettiTable):
            return self._entries == other._entries
        if isinstance(other, Mapping):
            return self._entries == {k: v for k, v in other.items() if v}
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self._entries.items()))

    def __repr__(self) -> str:
        return f"GradedBettiTable({self._entries})"

    def to_dict(self) -> dict[tuple[int, int], int]:
        return dict(self._entries)

    def shift(self, di: int = 0, dj: int = 0) -> "GradedBettiTable":
        return GradedBettiTable({(i + di, j + dj): c for (i, j), c in self._entries.items()})

    def __add__(self, other: "GradedBettiTable") -> "GradedBettiTable":
        return GradedBettiTable(list(self.items()) + list(other.items()))

    def total(self, i: int) -> int:
        return sum(c for (a, _), c in self._entries.items() if a == i)

    def row(self, i: int) -> dict[int, int]:
        """Degrees and counts in homological position ``i``."""
        return {j: c for (a, j), c in self._entries.items() if a == i}

    @property
    def projdim(self) -> int:
        if not self._entries:
            raise ValueError("the zero module has no projective dimension")
        return max(i for i, _ in self._entries)

    @property
    def reg(self) -> int:
        if not self._entries:
            raise ValueError("the zero module has no regularity")
        return max(j - i for i, j in self._entries)

    def is_linear(self) -> bool:
        """All generators in one degree d and beta_{i,j} = 0 unless j = i + d."""
        return len({j - i for i, j in self._entries}) <= 1

    def quotient(self) -> "GradedBettiTable":
        return GradedBettiTable([((0, 0), 1)] + [((i + 1, j), c) for (i, j), c in self._entries.items()])

    def to_json(self) -> list[list[int]]:
        return [[i, j, c] for (i, j), c in self._entries.items()]

    @classmethod
    def from_json(cls, rows) -> "GradedBettiTable":
        return cls({(i, j): c for i, j, c in rows})

    def format(self) -> str:
        """Macaulay2-style table: columns i, rows j - i."""
        if not self._entries:
            return "(zero)"
        cols = range(0, self.projdim + 1)
        lo = min(j - i for i, j in self._entries)
        hi = self.reg
        width = max(len(str(c)) for c in self._entries.values()) + 1
        lines = ["     " + "".join(f"{i:>{width}}" for i in cols)]
        for r in range(lo, hi + 1):
            cells = []
            for i in cols:
                c = self._entries.get((i, i + r), 0)
                cells.append(f"{(c if c else '.'):>{width}}")
            lines.append(f"{r:>3}: " + "".join(cells))
        return "\n".join(lines)
