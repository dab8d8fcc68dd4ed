"""Cross-validation suites behind the `verify` CLI command.

Each family re-derives a batch of facts two independent ways (closed form
against enumeration, dispatch rules against the powering oracle) and
reports one PASS/FAIL line.  Families honor the requested maximum order
but keep their own caps where the work grows too fast to be useful at the
command line.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import counting, formulas, frobenius, oracle
from .core import (
    CompanionSpec,
    companion_matrix,
    cycle_lengths,
    is_primitive,
    longest_run,
    vertex_partition,
    wielandt_bound,
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def _irreducible_specs(n: int):
    width = n - 1
    for y in range(1 << width):
        yield CompanionSpec(n, "1" + format(y, f"0{width}b"))


def _primitive_specs(n: int):
    for spec in _irreducible_specs(n):
        if is_primitive(spec):
            yield spec


_census_cache: dict[int, counting.CensusRecord] = {}


def _census(n: int) -> counting.CensusRecord:
    if n not in _census_cache:
        _census_cache[n] = counting.census(n)
    return _census_cache[n]


def _check_cycle_structure(n_max: int) -> CheckResult:
    checked = 0
    for n in range(3, n_max + 1):
        for spec in _irreducible_specs(n):
            lengths = cycle_lengths(spec)
            part = vertex_partition(spec)
            if len(lengths) != len(part.support) or max(lengths) != n:
                return CheckResult("cycle-structure", False, f"bad lengths for {spec.n} {spec.row_string}")
            checked += 1
    # walk counter: entry (i, j) of the k-th power == an i -> j walk of length k
    for n in range(3, min(n_max, 6) + 1):
        for spec in _irreducible_specs(n):
            m = companion_matrix(spec)
            trace = oracle.PowerTrace.compute(m)
            adj = [set() for _ in range(n + 1)]
            for i in range(1, n + 1):
                for j in range(1, n + 1):
                    if m.entry(i, j):
                        adj[i].add(j)
            for i in range(1, n + 1):
                frontier = {i}
                for k in range(1, wielandt_bound(n) + 1):
                    frontier = set().union(*(adj[v] for v in frontier)) if frontier else set()
                    power = trace.power(k)
                    for j in range(1, n + 1):
                        if (j in frontier) != bool(power.entry(i, j)):
                            return CheckResult(
                                "cycle-structure", False,
                                f"walk mismatch at {spec.n} {spec.row_string} ({i},{j},{k})")
    return CheckResult("cycle-structure", True, f"{checked} specs, walk counter to order {min(n_max, 6)}")


def _check_primitivity(n_max: int) -> CheckResult:
    checked = 0
    for n in range(3, n_max + 1):
        for spec in _irreducible_specs(n):
            by_gcd = is_primitive(spec)
            by_power = oracle.has_positive_power(companion_matrix(spec))
            if by_gcd != by_power:
                return CheckResult(
                    "primitivity", False,
                    f"gcd test and power test disagree on {spec.n} {spec.row_string}")
            checked += 1
    return CheckResult("primitivity", True, f"{checked} irreducible specs to order {n_max}")


def _check_local_exponent_maxima(n_max: int) -> CheckResult:
    checked = 0
    for n in range(3, n_max + 1):
        for spec in _primitive_specs(n):
            m = companion_matrix(spec)
            table = oracle.local_exponent_table(m)
            overall = oracle.exponent(m)
            max_local = max(table.get(i, j) for i in range(1, n + 1) for j in range(1, n + 1))
            max_row = max(oracle.row_exponent(m, i) for i in range(1, n + 1))
            if not overall == max_local == max_row:
                return CheckResult(
                    "local-exponent-maxima", False,
                    f"{spec.n} {spec.row_string}: exp={overall} max_local={max_local} max_row={max_row}")
            checked += 1
    return CheckResult("local-exponent-maxima", True, f"{checked} primitive specs to order {n_max}")


def _check_dispatch(n_max: int) -> CheckResult:
    checked = 0
    for n in range(3, n_max + 1):
        for spec in _primitive_specs(n):
            report = formulas.exponent(spec)
            true_exp = oracle.exponent(companion_matrix(spec))
            if report.value != true_exp:
                return CheckResult(
                    "dispatch-soundness", False,
                    f"{spec.n} {spec.row_string}: rule {report.rule} gave {report.value}, oracle {true_exp}")
            checked += 1
    return CheckResult("dispatch-soundness", True, f"{checked} primitive specs to order {n_max}")


def _check_range_uniqueness(n_max: int) -> CheckResult:
    for n in range(3, n_max + 1):
        record = _census(n)
        bound = wielandt_bound(n)
        if record.exponent_set[0] != n or record.exponent_set[-1] > bound:
            return CheckResult("range-uniqueness", False, f"exponent set out of range at order {n}")
        if record.histogram[n] != 1 or record.witnesses[n] != "1" * n:
            return CheckResult("range-uniqueness", False, f"exponent {n} not unique at order {n}")
        expected_top = "11" + "0" * (n - 2)
        if record.histogram.get(bound) != 1 or record.witnesses.get(bound) != expected_top:
            return CheckResult("range-uniqueness", False, f"Wielandt bound not uniquely attained at order {n}")
    return CheckResult("range-uniqueness", True, f"orders 3..{n_max}")


def _check_conductors() -> CheckResult:
    pairs = 0
    for a in range(2, 31):
        for b in range(a + 1, 31):
            if math.gcd(a, b) != 1:
                continue
            if frobenius.pair_conductor(a, b) != frobenius.conductor((a, b)):
                return CheckResult("conductors", False, f"pair formula off at ({a}, {b})")
            pairs += 1
    progressions = 0
    for start in range(2, 13):
        for step in range(1, 4):
            if math.gcd(start, step) != 1:
                continue
            for steps in range(1, 5):
                gens = tuple(start + j * step for j in range(steps + 1))
                if frobenius.progression_conductor(start, step, steps) != frobenius.conductor(gens):
                    return CheckResult("conductors", False, f"progression formula off at {gens}")
                progressions += 1
    for gens in [(2, 3), (3, 5), (4, 5, 8), (5, 6, 7), (6, 10, 15), (7, 11), (9, 12, 13)]:
        c = frobenius.conductor(gens)
        if c > 0 and frobenius.representable(c - 1, gens):
            return CheckResult("conductors", False, f"{gens}: {c - 1} unexpectedly representable")
        if not all(frobenius.representable(x, gens) for x in range(c, c + max(gens) + 1)):
            return CheckResult("conductors", False, f"{gens}: certification window fails")
    return CheckResult("conductors", True, f"{pairs} pairs, {progressions} progressions, windows")


def _check_counting(n_max: int) -> CheckResult:
    for n in range(3, n_max + 1):
        enumerated = sum(1 for spec in _irreducible_specs(n) if not is_primitive(spec))
        if counting.count_imprimitive(n) != enumerated:
            return CheckResult("counting", False, f"imprimitive count off at order {n}")
    for n in range(0, min(n_max, 10) + 1):
        table = counting.string_count_table(n)
        if sum(table.count(x, k) for x in range(n + 1) for k in range(n + 1)) != 1 << n:
            return CheckResult("counting", False, f"string counts do not sum to 2^{n}")
    for r in range(2, 6):
        for n in range(0, min(n_max, 10) + 1):
            brute = sum(
                1 for v in range(1 << n)
                if "1" * r not in format(v, f"0{n}b")
            ) if n else 1
            if counting.t_runs(r, n) != brute:
                return CheckResult("counting", False, f"run-avoidance count off at r={r}, n={n}")
    for n in range(3, min(n_max, 10) + 1):
        actual: dict[int, int] = {}
        for spec in _primitive_specs(n):
            if spec.row[-1] == 1:
                value = formulas.exponent(spec).value
                actual[value] = actual.get(value, 0) + 1
        for t in range(n, 2 * (n - 1) + 1):
            if counting.count_positive_trace_with_exponent(n, t) != actual.get(t, 0):
                return CheckResult("counting", False, f"positive-trace count off at n={n}, t={t}")
    return CheckResult("counting", True, f"orders 3..{n_max}")


def _check_membership(n_max: int) -> CheckResult:
    for n in range(3, n_max + 1):
        record = _census(n)
        missing = [t for t in range(n, 2 * (n - 1) + 1) if t not in record.histogram]
        if missing:
            return CheckResult("membership", False, f"[{n}, {2 * (n - 1)}] not covered at order {n}: {missing}")
    for n in range(4, n_max + 1):
        top = 3 * n - 4 if n % 2 else 2 * n - 2
        for spec in _primitive_specs(n):
            if spec.row[-1] != 0 or cycle_lengths(spec)[0] != 2:
                continue
            value = formulas.exponent(spec).value
            if not n <= value <= top:
                return CheckResult(
                    "membership", False,
                    f"smallest-cycle-2 exponent {value} outside [{n}, {top}] at {spec.row_string}")
        if n % 2:
            record = _census(n)
            for x in range((n - 3) // 2 + 1):
                if 2 * n - 1 + 2 * x not in record.histogram:
                    return CheckResult("membership", False, f"{2 * n - 1 + 2 * x} missing from order {n}")
    for n in range(5, n_max + 1):
        enumerated = 0
        for spec in _primitive_specs(n):
            if spec.row[-1] != 0:
                continue
            part = vertex_partition(spec)
            run = longest_run(part.zeros)
            if all(v in part.zeros for v in range(2, run + 2)):
                enumerated += 1
        if counting.block_prefix_upper_count(n) < enumerated:
            return CheckResult("membership", False, f"block-prefix bound below enumeration at order {n}")
    return CheckResult("membership", True, f"orders 3..{n_max}")


def run_all(n_max: int) -> list[CheckResult]:
    """Run every family up to the requested order (3 <= n_max <= 12)."""
    if not 3 <= n_max <= 12:
        raise ValueError(f"n-max must be in [3, 12], got {n_max}")
    return [
        _check_cycle_structure(n_max),
        _check_primitivity(n_max),
        _check_local_exponent_maxima(min(n_max, 8)),
        _check_dispatch(n_max),
        _check_range_uniqueness(n_max),
        _check_conductors(),
        _check_counting(n_max),
        _check_membership(n_max),
    ]
