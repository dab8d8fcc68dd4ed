"""Counting formulas and the exhaustive exponent census over companion specs.

The census enumerates every irreducible last row of a given order (there
are 2**(n-1) of them), computes the exponent of each primitive one via
the rule dispatcher, and aggregates an exponent histogram, the attained
exponent set, and one lexicographically smallest witness row per
exponent.  Output is deterministic: the CSV and JSON emitters produce
byte-identical text for identical inputs and tool version.
"""

from __future__ import annotations

import json
import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

from . import formulas, oracle
from ._version import __version__
from .core import CompanionSpec, companion_matrix
from .frobenius import conductor

MAX_CENSUS_ORDER = 20


class DispatchMismatchError(AssertionError):
    """The rule dispatcher and the powering oracle disagreed on some spec."""


def _distinct_prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def count_imprimitive(n: int) -> int:
    """Number of irreducible specs of order n whose cycle lengths share a factor.

    Inclusion-exclusion over the distinct prime factors p of n: the specs
    with every cycle length divisible by p are those whose support sits
    among the n/p vertices congruent to 1 mod p, giving 2**(n/p - 1) per
    prime (vertex 1 is always in the support).
    """
    if n < 3:
        raise ValueError(f"order must be >= 3, got {n}")
    primes = _distinct_prime_factors(n)
    total = 0
    for mask in range(1, 1 << len(primes)):
        prod = 1
        for idx, p in enumerate(primes):
            if mask >> idx & 1:
                prod *= p
        term = 1 << (n // prod - 1)
        total += term if bin(mask).count("1") % 2 else -term
    return total


def count_primitive(n: int) -> int:
    """Number of primitive specs of order n: 2**(n-1) - count_imprimitive(n)."""
    return (1 << (n - 1)) - count_imprimitive(n)


def _row_gcd(n: int, y: int) -> int:
    """gcd of cycle lengths for the irreducible row "1" + (n-1 bits of y, MSB first)."""
    g = n
    rem = y
    while rem and g > 1:
        low = rem & -rem
        # bit k of y is row position n - k, i.e. cycle length k + 1
        g = math.gcd(g, low.bit_length())
        rem ^= low
    return g


def list_imprimitive(n: int) -> list[str]:
    """All irreducible last rows (full n-bit strings) with cycle-length gcd > 1, sorted."""
    if not 3 <= n <= 24:
        raise ValueError(f"order must be in [3, 24], got {n}")
    width = n - 1
    return [
        "1" + format(y, f"0{width}b")
        for y in range(1 << width)
        if _row_gcd(n, y) > 1
    ]


@dataclass(frozen=True)
class StringCountTable:
    """counts[x][k]: length-n binary strings with x zeros and longest zero run exactly k."""

    n: int
    counts: tuple[tuple[int, ...], ...]

    def count(self, x: int, k: int) -> int:
        if x < 0 or k < 0 or k > x or x > self.n:
            return 0
        return self.counts[x][k]


@lru_cache(maxsize=None)
def string_count_table(n: int) -> StringCountTable:
    """Tabulate all (zeros, longest-zero-run) counts for length n in one DP pass.

    The scan state is (zeros so far, current zero run, best run so far);
    appending a 1 resets the run, appending a 0 extends it.
    """
    if n < 0:
        raise ValueError(f"length must be >= 0, got {n}")
    states: dict[tuple[int, int, int], int] = {(0, 0, 0): 1}
    for _ in range(n):
        nxt: dict[tuple[int, int, int], int] = {}
        for (zeros, run, best), c in states.items():
            one = (zeros, 0, best)
            nxt[one] = nxt.get(one, 0) + c
            zero = (zeros + 1, run + 1, max(best, run + 1))
            nxt[zero] = nxt.get(zero, 0) + c
        states = nxt
    counts = [[0] * (n + 1) for _ in range(n + 1)]
    for (zeros, _run, best), c in states.items():
        counts[zeros][best] += c
    return StringCountTable(n, tuple(tuple(row) for row in counts))


def f_strings(n: int, x: int, k: int) -> int:
    """Number of length-n binary strings with x zeros whose longest zero run is exactly k.

    Returns 0 outside 0 <= k <= x <= n and for negative n.
    """
    if n < 0 or x < 0 or k < 0 or k > x or x > n:
        return 0
    return string_count_table(n).count(x, k)


def _runs_avoiding(r: int, n: int) -> int:
    # counts[c] = strings seen so far that end in exactly c ones, c < r
    counts = [1] + [0] * (r - 1)
    for _ in range(n):
        total = sum(counts)
        nxt = [0] * r
        nxt[0] = total
        for c in range(1, r):
            nxt[c] = counts[c - 1]
        counts = nxt
    return sum(counts)


def t_runs(r: int, n: int) -> int:
    """Number of length-n binary strings containing no run of r consecutive ones (r >= 2)."""
    if r < 2:
        raise ValueError(f"run length must be >= 2, got {r}")
    if n < 0:
        raise ValueError(f"length must be >= 0, got {n}")
    return _runs_avoiding(r, n)


def count_positive_trace_with_exponent(n: int, t: int) -> int:
    """Number of positive-trace primitive specs of order n with exponent t.

    A positive-trace spec has exponent n + (longest zero run), and only
    the n-2 bits in columns 2..n-1 are free, so this counts the
    (n-2)-bit strings whose longest zero run is exactly t - n, over all
    zero totals.
    """
    if n < 3:
        raise ValueError(f"order must be >= 3, got {n}")
    if not n <= t <= 2 * (n - 1):
        raise ValueError(f"exponent {t} outside [{n}, {2 * (n - 1)}]")
    k = t - n
    return sum(f_strings(n - 2, x, k) for x in range(k, n - 1))


def block_prefix_upper_count(n: int) -> int:
    """Run-avoidance sum bounding the specs the block-prefix rule covers.

    Sum over m of T_{m+1}(n - m - 3), with the r = 1 boundary taken as
    T_1(length) = 1 (only the all-zeros string avoids every single 1).
    The sum ignores how trailing zeros merge with the fixed zero at
    vertex n, so direct enumeration can come in under it; tests pin the
    bound direction.
    """
    if n < 3:
        raise ValueError(f"order must be >= 3, got {n}")
    return sum(_runs_avoiding(m + 1, n - m - 3) for m in range(n - 2))


def two_coprime_exponent_claim(n: int, s: int, t: int) -> int:
    """Predicted attained exponent 2(n-s) + t(s-1) from a two-coprime-cycle construction.

    Requires gcd(s, t) = 1 with s > t >= 1, order n at least the
    conductor of {s, t}, and n - s dominating both s - t and t.  The
    value is a membership claim for the exponent set of order n; it is
    checked against the census rather than built from an explicit row.
    """
    if not s > t >= 1:
        raise ValueError(f"need s > t >= 1, got s={s}, t={t}")
    if math.gcd(s, t) != 1:
        raise ValueError(f"gcd({s}, {t}) must be 1")
    if max(s - t, t, n - s) != n - s:
        raise ValueError(f"n - s = {n - s} must dominate s - t and t")
    if n < conductor((s, t)):
        raise ValueError(f"order {n} below the conductor of {{{s}, {t}}}")
    return 2 * (n - s) + t * (s - 1)


def gap_progression_exponent_claim(n: int, smallest_cycle: int, start: int) -> int:
    """Predicted attained exponent n + q*l + (start - 2), q = floor((l-2)/(n-l-start+1)) + 1.

    `l` is the smallest cycle length and `start` the first generator of
    the underlying progression, with l + 1 <= start <= n - l so the
    divisor stays positive.  Like the two-coprime claim, this is a
    census-checked membership value, not a dispatch rule.
    """
    l = smallest_cycle
    if not l + 1 <= start <= n - l:
        raise ValueError(f"start must lie in [{l + 1}, {n - l}], got {start}")
    q = (l - 2) // (n - l - start + 1) + 1
    if n < q * l:
        raise ValueError(f"order {n} below q*l = {q * l}")
    return n + q * l + (start - 2)


@dataclass(frozen=True)
class CensusRecord:
    """Exhaustive exponent census of the irreducible specs of one order."""

    n: int
    histogram: dict[int, int]
    exponent_set: tuple[int, ...]
    witnesses: dict[int, str]
    imprimitive_count: int
    reducible_count: int

    @property
    def total_irreducible(self) -> int:
        return 1 << (self.n - 1)

    @property
    def primitive_count(self) -> int:
        return sum(self.histogram.values())

    def membership(self, m: int) -> tuple[bool, str | None]:
        """Is m an attained exponent, plus the smallest witness row when it is."""
        return m in self.histogram, self.witnesses.get(m)

    def to_csv(self) -> str:
        lines = ["n,exponent,count,witness_row"]
        for e in self.exponent_set:
            lines.append(f"{self.n},{e},{self.histogram[e]},{self.witnesses[e]}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        payload = {
            "n": self.n,
            "total_irreducible": self.total_irreducible,
            "imprimitive_count": self.imprimitive_count,
            "histogram": {str(e): self.histogram[e] for e in self.exponent_set},
            "exponent_set": list(self.exponent_set),
            "witnesses": {str(e): self.witnesses[e] for e in self.exponent_set},
            "tool_version": __version__,
        }
        return json.dumps(payload, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "CensusRecord":
        data = json.loads(text)
        exponents = tuple(data["exponent_set"])
        return cls(
            n=data["n"],
            histogram={int(k): v for k, v in data["histogram"].items()},
            exponent_set=exponents,
            witnesses={int(k): v for k, v in data["witnesses"].items()},
            imprimitive_count=data["imprimitive_count"],
            reducible_count=data["total_irreducible"],
        )


def membership(record: CensusRecord, m: int) -> tuple[bool, str | None]:
    """Point query against a computed census."""
    return record.membership(m)


def _census_chunk(n: int, start: int, stop: int, check_oracle: bool):
    histogram: Counter[int] = Counter()
    witnesses: dict[int, str] = {}
    imprimitive = 0
    width = n - 1
    for y in range(start, stop):
        if _row_gcd(n, y) > 1:
            imprimitive += 1
            continue
        row = "1" + format(y, f"0{width}b")
        report = formulas.exponent(CompanionSpec(n, row))
        if check_oracle:
            true_exp = oracle.exponent(companion_matrix(CompanionSpec(n, row)))
            if true_exp != report.value:
                raise DispatchMismatchError(
                    f"dispatch rule {report.rule} gave {report.value}, "
                    f"oracle gave {true_exp} for spec {n} {row}")
        histogram[report.value] += 1
        if report.value not in witnesses:
            witnesses[report.value] = row
    return histogram, witnesses, imprimitive


def _census_chunk_star(args):
    return _census_chunk(*args)


def census(n: int, jobs: int = 1, check_oracle: bool = False) -> CensusRecord:
    """Enumerate all 2**(n-1) irreducible specs of order n and aggregate exponents.

    With jobs > 1 the row index space is split into contiguous ranges
    processed by worker processes; partial histograms merge by addition
    and witnesses by lexicographic minimum, so the output is identical to
    a sequential run.
    """
    if not 3 <= n <= MAX_CENSUS_ORDER:
        raise ValueError(f"order must be in [3, {MAX_CENSUS_ORDER}], got {n}")
    if jobs < 1:
        raise ValueError(f"jobs must be >= 1, got {jobs}")
    total = 1 << (n - 1)
    if jobs == 1:
        parts = [_census_chunk(n, 0, total, check_oracle)]
    else:
        step = -(-total // (jobs * 4))
        bounds = list(range(0, total, step)) + [total]
        tasks = [(n, lo, hi, check_oracle) for lo, hi in zip(bounds, bounds[1:])]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_census_chunk_star, tasks))

    histogram: Counter[int] = Counter()
    witnesses: dict[int, str] = {}
    imprimitive = 0
    for part_hist, part_wit, part_imp in parts:
        histogram.update(part_hist)
        for value, row in part_wit.items():
            if value not in witnesses or row < witnesses[value]:
                witnesses[value] = row
        imprimitive += part_imp
    exponents = tuple(sorted(histogram))
    return CensusRecord(
        n=n,
        histogram={e: histogram[e] for e in exponents},
        exponent_set=exponents,
        witnesses={e: witnesses[e] for e in exponents},
        imprimitive_count=imprimitive,
        reducible_count=total,
    )
