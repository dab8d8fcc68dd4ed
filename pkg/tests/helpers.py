"""Independent brute-force oracles for cross-checking the library.

Nothing here reuses library internals: products are triple loops over
nested lists, cycle enumeration goes through networkx, walk checks step
frontier sets, representability does a bounded coefficient search, and
string statistics are measured on explicitly enumerated strings.
"""

from __future__ import annotations

import networkx as nx


def naive_bool_product(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    n = len(a)
    return [
        [int(any(a[i][k] and b[k][j] for k in range(n))) for j in range(n)]
        for i in range(n)
    ]


def walk_exists(entries: list[list[int]], i: int, j: int, length: int) -> bool:
    """Frontier-stepping walk check on 1-based vertices."""
    n = len(entries)
    frontier = {i}
    for _ in range(length):
        frontier = {w + 1 for v in frontier for w in range(n) if entries[v - 1][w]}
        if not frontier:
            return False
    return j in frontier


def stabilization_point(entries: list[list[int]], i: int, j: int, horizon: int) -> int:
    """Smallest k with i -> j walks at every length in [k, horizon], by frontier stepping."""
    missing = [L for L in range(1, horizon + 1) if not walk_exists(entries, i, j, L)]
    return missing[-1] + 1 if missing else 1


def digraph_cycle_lengths(entries: list[list[int]]) -> tuple[int, ...]:
    g = nx.DiGraph()
    n = len(entries)
    g.add_nodes_from(range(1, n + 1))
    for i in range(n):
        for j in range(n):
            if entries[i][j]:
                g.add_edge(i + 1, j + 1)
    return tuple(sorted({len(c) for c in nx.simple_cycles(g)}))


def coefficient_search_representable(x: int, gens) -> bool:
    gens = tuple(sorted(set(gens)))

    def search(rest: int, idx: int) -> bool:
        if rest == 0:
            return True
        if idx == len(gens):
            return False
        g = gens[idx]
        return any(search(rest - c * g, idx + 1) for c in range(rest // g + 1))

    return search(x, 0)


def scan_conductor(gens) -> int:
    """Scan upward until min(gens) consecutive representable integers appear.

    Once that many consecutive values are representable, everything above
    follows by adding the smallest generator.
    """
    window = min(gens)
    streak = 0
    x = 0
    while True:
        if coefficient_search_representable(x, gens):
            streak += 1
            if streak == window:
                return x - window + 1
        else:
            streak = 0
        x += 1


def longest_zero_run(bits: str) -> int:
    return max((len(part) for part in bits.split("1")), default=0)


def longest_consecutive_run(indices) -> int:
    present = sorted(set(indices))
    best = run = 0
    prev = None
    for v in present:
        run = run + 1 if prev is not None and v == prev + 1 else 1
        best = max(best, run)
        prev = v
    return best


def irreducible_rows(n: int):
    for y in range(1 << (n - 1)):
        yield "1" + format(y, f"0{n - 1}b")


def binary_strings(n: int):
    for v in range(1 << n):
        yield format(v, f"0{n}b") if n else ""
