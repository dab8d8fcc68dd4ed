"""Companion matrices over the boolean semiring and their digraph structure.

A (0,1) companion matrix of order n has ones on the superdiagonal and an
arbitrary (0,1) last row; the last row alone identifies the matrix.  In the
adjacency digraph (vertices 1..n, edge i -> j when entry (i, j) is 1) every
vertex i < n has the single edge i -> i+1, and vertex n has an edge n -> i
for each i whose row bit is 1.  Consequently every elementary cycle passes
through vertex n, and the edge n -> i closes exactly one cycle, of length
n - i + 1.

The matrix is irreducible (digraph strongly connected) exactly when the
first row bit is 1: the edge n -> 1 is the only way back into vertex 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence


class ReducibleError(ValueError):
    """The operation needs a strongly connected (irreducible) matrix."""


def wielandt_bound(n: int) -> int:
    """Sharp upper bound (n-1)**2 + 1 for exponents of primitive matrices of order n."""
    return (n - 1) ** 2 + 1


def _parse_bits(row: Sequence[int] | str) -> tuple[int, ...]:
    if isinstance(row, str):
        if not row or any(c not in "01" for c in row):
            raise ValueError(f"row must be a nonempty string over 0/1, got {row!r}")
        return tuple(int(c) for c in row)
    bits = tuple(row)
    if any(b not in (0, 1) for b in bits):
        raise ValueError(f"row bits must be 0 or 1, got {bits!r}")
    return bits


@dataclass(frozen=True)
class CompanionSpec:
    """Order n plus the last row of a (0,1) companion matrix.

    The row may be given as a bit string such as "10011000" or as a
    sequence of 0/1 ints; bit i (1-based) is the entry in column i of the
    last row.  Orders below 2 are rejected.
    """

    n: int
    row: tuple[int, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 2:
            raise ValueError(f"order must be an integer >= 2, got {self.n!r}")
        bits = _parse_bits(self.row)
        if len(bits) != self.n:
            raise ValueError(f"row has {len(bits)} bits, expected n={self.n}")
        object.__setattr__(self, "row", bits)

    @classmethod
    def from_text(cls, text: str) -> "CompanionSpec":
        """Parse the wire format: decimal order, whitespace, n-bit row ("8 10011000")."""
        parts = text.split()
        if len(parts) != 2:
            raise ValueError(f"expected 'n row', got {text!r}")
        try:
            n = int(parts[0])
        except ValueError:
            raise ValueError(f"order is not an integer: {parts[0]!r}") from None
        return cls(n, parts[1])

    @property
    def row_string(self) -> str:
        return "".join(str(b) for b in self.row)

    def bit(self, i: int) -> int:
        """Row bit in 1-based column i."""
        if not 1 <= i <= self.n:
            raise ValueError(f"column {i} out of [1, {self.n}]")
        return self.row[i - 1]


@dataclass(frozen=True)
class VertexPartition:
    """Split of the vertices 1..n by the last row.

    `support` holds the columns with a 1 (vertex n has an edge there),
    `zeros` the columns with a 0.  Irreducible specs always have vertex 1
    in the support.
    """

    zeros: frozenset[int]
    support: frozenset[int]


def is_irreducible(spec: CompanionSpec) -> bool:
    """True when the digraph is strongly connected, i.e. the row starts with 1."""
    return spec.row[0] == 1


def vertex_partition(spec: CompanionSpec) -> VertexPartition:
    support = frozenset(i for i in range(1, spec.n + 1) if spec.row[i - 1])
    zeros = frozenset(range(1, spec.n + 1)) - support
    return VertexPartition(zeros=zeros, support=support)


def longest_run(indices: Iterable[int]) -> int:
    """Length of the longest block of consecutive integers in `indices` (0 if empty)."""
    present = set(indices)
    best = 0
    for i in present:
        if i - 1 in present:
            continue
        j = i
        while j + 1 in present:
            j += 1
        best = max(best, j - i + 1)
    return best


def cycle_lengths(spec: CompanionSpec) -> tuple[int, ...]:
    """Sorted distinct elementary cycle lengths of the companion digraph.

    Every elementary cycle uses exactly one edge out of vertex n, and the
    edge n -> i yields length n - i + 1, so the set is
    {n - i + 1 : row bit i = 1}.  Raises ReducibleError when the row
    starts with 0.
    """
    if not is_irreducible(spec):
        raise ReducibleError("cycle lengths need an irreducible spec (row must start with 1)")
    return tuple(sorted(spec.n - i + 1 for i in range(1, spec.n + 1) if spec.row[i - 1]))


def imprimitivity_index(spec: CompanionSpec) -> int:
    """gcd of all elementary cycle lengths; 1 means primitive."""
    return math.gcd(*cycle_lengths(spec))


def is_primitive(spec: CompanionSpec) -> bool:
    """True when the spec is irreducible and its cycle lengths have gcd 1."""
    return is_irreducible(spec) and imprimitivity_index(spec) == 1


@dataclass(frozen=True)
class BoolMatrix:
    """Square (0,1) matrix with each row stored as a bitmask (bit j-1 = column j)."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1 or len(self.rows) != self.n:
            raise ValueError(f"need exactly n={self.n} row bitmasks, got {len(self.rows)}")
        full = (1 << self.n) - 1
        if any(r < 0 or r > full for r in self.rows):
            raise ValueError("row bitmask out of range for the given order")

    @classmethod
    def from_lists(cls, entries: Sequence[Sequence[int]]) -> "BoolMatrix":
        n = len(entries)
        rows = []
        for r in entries:
            if len(r) != n or any(v not in (0, 1) for v in r):
                raise ValueError("entries must form a square 0/1 matrix")
            rows.append(sum(v << j for j, v in enumerate(r)))
        return cls(n, tuple(rows))

    @classmethod
    def identity(cls, n: int) -> "BoolMatrix":
        return cls(n, tuple(1 << i for i in range(n)))

    @classmethod
    def ones(cls, n: int) -> "BoolMatrix":
        full = (1 << n) - 1
        return cls(n, (full,) * n)

    def entry(self, i: int, j: int) -> int:
        """Entry in 1-based (row i, column j)."""
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise ValueError(f"({i}, {j}) out of [1, {self.n}]^2")
        return (self.rows[i - 1] >> (j - 1)) & 1

    def to_lists(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.n)] for r in self.rows]

    @property
    def is_all_ones(self) -> bool:
        full = (1 << self.n) - 1
        return all(r == full for r in self.rows)


def companion_matrix(spec: CompanionSpec) -> BoolMatrix:
    """Build the (0,1) companion matrix: superdiagonal ones, last row = spec row."""
    rows = [1 << i for i in range(1, spec.n)]
    rows.append(sum(b << j for j, b in enumerate(spec.row)))
    return BoolMatrix(spec.n, tuple(rows))
