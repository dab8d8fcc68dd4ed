"""Ground-truth exponent computations by boolean matrix powering.

Powers are taken over the boolean semiring (1 + 1 = 1), so entry (i, j) of
the k-th power is 1 exactly when the digraph has an i -> j walk of length
k.  Every scan is cut off at the Wielandt bound (n-1)**2 + 1: a primitive
matrix turns all-positive by then, so reaching the cutoff without an
all-positive power certifies the matrix is not primitive, with no
probabilistic slack.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import BoolMatrix, wielandt_bound


class NotPrimitiveError(ValueError):
    """No power of the matrix within the Wielandt bound is all-positive."""


def bool_product(x: BoolMatrix, y: BoolMatrix) -> BoolMatrix:
    """Boolean matrix product: (xy)_ij = OR_k (x_ik AND y_kj)."""
    if x.n != y.n:
        raise ValueError(f"order mismatch: {x.n} vs {y.n}")
    out = []
    for mask in x.rows:
        acc = 0
        m = mask
        while m:
            low = m & -m
            acc |= y.rows[low.bit_length() - 1]
            m ^= low
        out.append(acc)
    return BoolMatrix(x.n, tuple(out))


def has_positive_power(m: BoolMatrix) -> bool:
    """Primitivity test: is some power within the Wielandt bound all-positive?

    Positivity propagates along further powers of a primitive matrix, so
    it is enough to look at the single power at the cutoff, reached here
    by binary powering.
    """
    k = wielandt_bound(m.n)
    acc = None
    base = m
    while k:
        if k & 1:
            acc = base if acc is None else bool_product(acc, base)
        k >>= 1
        if k:
            base = bool_product(base, base)
    return acc.is_all_ones


def _require_primitive(m: BoolMatrix) -> None:
    if not has_positive_power(m):
        raise NotPrimitiveError(f"matrix of order {m.n} is not primitive")


def _check_vertex(m: BoolMatrix, i: int) -> None:
    if not 1 <= i <= m.n:
        raise ValueError(f"vertex {i} out of [1, {m.n}]")


def exponent(m: BoolMatrix) -> int:
    """Smallest k with m**k all-positive, found by direct powering.

    Raises NotPrimitiveError when no power up to the Wielandt bound is
    all-positive (and hence none at all).
    """
    bound = wielandt_bound(m.n)
    power = m
    for k in range(1, bound + 1):
        if power.is_all_ones:
            return k
        if k < bound:
            power = bool_product(power, m)
    raise NotPrimitiveError(f"no all-positive power up to the Wielandt bound {bound}")


def _row_walks(m: BoolMatrix, i: int) -> list[int]:
    """Bitmask of vertices reachable from i by a walk of length l, for l = 1..bound."""
    out = []
    reach = m.rows[i - 1]
    for _ in range(wielandt_bound(m.n)):
        out.append(reach)
        acc = 0
        front = reach
        while front:
            low = front & -front
            acc |= m.rows[low.bit_length() - 1]
            front ^= low
        reach = acc
    return out


def local_exponent(m: BoolMatrix, i: int, j: int) -> int:
    """Smallest k such that i -> j walks of every length >= k exist.

    Scans the walk trace downward from the Wielandt bound for the last
    missing length; positivity at the bound is guaranteed for primitive
    input, which is what makes the downward scan sound.
    """
    _check_vertex(m, i)
    _check_vertex(m, j)
    _require_primitive(m)
    walks = _row_walks(m, i)
    bit = 1 << (j - 1)
    for length in range(len(walks), 0, -1):
        if not walks[length - 1] & bit:
            return length + 1
    return 1


def row_exponent(m: BoolMatrix, i: int) -> int:
    """Smallest k such that row i of m**k (and of every later power) is all-positive."""
    _check_vertex(m, i)
    _require_primitive(m)
    walks = _row_walks(m, i)
    full = (1 << m.n) - 1
    for length in range(len(walks), 0, -1):
        if walks[length - 1] != full:
            return length + 1
    return 1


@dataclass(frozen=True)
class PowerTrace:
    """All boolean powers m**1 .. m**bound of one matrix, bound = (n-1)**2 + 1."""

    n: int
    powers: tuple[BoolMatrix, ...]

    @classmethod
    def compute(cls, m: BoolMatrix) -> "PowerTrace":
        bound = wielandt_bound(m.n)
        powers = [m]
        for _ in range(bound - 1):
            powers.append(bool_product(powers[-1], m))
        return cls(m.n, tuple(powers))

    def power(self, k: int) -> BoolMatrix:
        """m**k for 1 <= k <= bound."""
        if not 1 <= k <= len(self.powers):
            raise ValueError(f"power {k} out of [1, {len(self.powers)}]")
        return self.powers[k - 1]


@dataclass(frozen=True)
class LocalExponentTable:
    """Local exponents exp(m : i, j) for every vertex pair of one primitive matrix."""

    n: int
    values: tuple[tuple[int, ...], ...]

    def get(self, i: int, j: int) -> int:
        return self.values[i - 1][j - 1]


def local_exponent_table(m: BoolMatrix) -> LocalExponentTable:
    """Tabulate all local exponents with one walk trace per source vertex."""
    _require_primitive(m)
    bound = wielandt_bound(m.n)
    values = []
    for i in range(1, m.n + 1):
        walks = _row_walks(m, i)
        row_vals = []
        for j in range(1, m.n + 1):
            bit = 1 << (j - 1)
            v = 1
            for length in range(bound, 0, -1):
                if not walks[length - 1] & bit:
                    v = length + 1
                    break
            row_vals.append(v)
        values.append(tuple(row_vals))
    return LocalExponentTable(m.n, tuple(values))
