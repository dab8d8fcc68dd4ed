"""Conductors of numerical semigroups (coin-problem style).

For positive integers a_1 < ... < a_u with gcd 1, the conductor is the
smallest c >= 0 such that every integer >= c is a nonnegative integer
combination of the generators.  The classical Frobenius number is the
largest non-representable integer, i.e. the conductor minus one; the code
says "conductor" throughout because the exponent rules consume exactly
that convention and the off-by-one is easy to smuggle in otherwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable


class NotCoprimeError(ValueError):
    """The generators share a common factor, so the conductor does not exist."""


@dataclass(frozen=True)
class GeneratorSet:
    """Sorted distinct positive generators together with their gcd."""

    values: tuple[int, ...]
    gcd: int

    @classmethod
    def of(cls, gens: "GeneratorSet | Iterable[int]") -> "GeneratorSet":
        if isinstance(gens, GeneratorSet):
            return gens
        values = tuple(sorted(set(gens)))
        if not values or values[0] < 1:
            raise ValueError(f"generators must be positive integers, got {values!r}")
        return cls(values, math.gcd(*values))


def _representable_table(gens: GeneratorSet, limit: int) -> list[bool]:
    """table[x] for 0 <= x <= limit: is x a sum of generators with repetition."""
    table = [False] * (limit + 1)
    table[0] = True
    values = gens.values
    for x in range(1, limit + 1):
        table[x] = any(table[x - g] for g in values if g <= x)
    return table


def representable(x: int, gens: GeneratorSet | Iterable[int]) -> bool:
    """Is x a nonnegative integer combination of the generators?"""
    if x < 0:
        raise ValueError(f"x must be nonnegative, got {x}")
    return _representable_table(GeneratorSet.of(gens), x)[x]


def conductor(gens: GeneratorSet | Iterable[int]) -> int:
    """Smallest c such that every integer >= c is representable.

    Sieves representability on [0, (min-1)(max-1) + 1].  The largest
    non-representable integer of any gcd-1 generator set lies below
    (min-1)(max-1): every residue class modulo the smallest generator is
    reached within min-1 generator additions, each at most max.
    """
    g = GeneratorSet.of(gens)
    if g.gcd != 1:
        raise NotCoprimeError(f"gcd of generators {g.values} is {g.gcd}, conductor undefined")
    limit = (g.values[0] - 1) * (g.values[-1] - 1) + 1
    table = _representable_table(g, limit)
    for x in range(limit, -1, -1):
        if not table[x]:
            return x + 1
    return 0


def pair_conductor(a: int, b: int) -> int:
    """Conductor of two coprime generators >= 2: (a-1)(b-1)."""
    if a < 2 or b < 2:
        raise ValueError(f"pair conductor needs both generators >= 2, got {a}, {b}")
    g = math.gcd(a, b)
    if g != 1:
        raise NotCoprimeError(f"gcd({a}, {b}) = {g} != 1")
    return (a - 1) * (b - 1)


def progression_conductor(start: int, step: int, steps: int) -> int:
    """Conductor of the arithmetic progression start + j*step for j = 0..steps.

    Closed form (floor((start-2)/steps) + 1)*start + (step-1)*(start-1),
    valid for start >= 2, step >= 1, steps >= 1 with gcd(start, step) = 1
    (which is the gcd of the whole progression).
    """
    if start < 2 or step < 1 or steps < 1:
        raise ValueError(
            f"need start >= 2, step >= 1, steps >= 1, got {start}, {step}, {steps}")
    g = math.gcd(start, step)
    if g != 1:
        raise NotCoprimeError(f"progression gcd is {g}, not 1")
    return ((start - 2) // steps + 1) * start + (step - 1) * (start - 1)
