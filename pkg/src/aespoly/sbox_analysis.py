"""Cycle structure of byte permutations, discrete logs base z^5+1, and Landau's function."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from . import gf256
from .permpoly import SIZE, invert_table

ALPHA = 0x21  # z^5 + 1


@dataclass(frozen=True)
class CycleDecomposition:
    """Disjoint cycles, each a tuple whose next entry is the image of the previous."""

    cycles: tuple[tuple[int, ...], ...]

    def lengths(self) -> list[int]:
        return [len(c) for c in self.cycles]

    def cycle_of(self, a: int) -> tuple[int, ...]:
        for c in self.cycles:
            if a in c:
                return c
        raise KeyError(a)

    def to_table(self) -> tuple[int, ...]:
        out = [-1] * sum(len(c) for c in self.cycles)
        for c in self.cycles:
            for k, a in enumerate(c):
                out[a] = c[(k + 1) % len(c)]
        return tuple(out)


def cycle_decomposition(table: Sequence[int], start_order: Sequence[int] | None = None) -> CycleDecomposition:
    """Cycles of ``table``.

    By default each cycle starts at its smallest byte and cycles are sorted by
    that byte.  ``start_order`` instead names the elements to try, in order, as
    starting points of new cycles.
    """
    invert_table(table)  # raises on non-bijective input
    n = len(table)
    order = range(n) if start_order is None else list(start_order)
    seen = [False] * n
    cycles = []
    for start in order:
        if seen[start]:
            continue
        cyc = []
        a = start
        while not seen[a]:
            seen[a] = True
            cyc.append(a)
            a = table[a]
        cycles.append(tuple(cyc))
    if not all(seen):
        raise ValueError("start_order does not reach every element")
    return CycleDecomposition(tuple(cycles))


def permutation_order(d: CycleDecomposition) -> int:
    return math.lcm(*d.lengths()) if d.cycles else 1


def table_power(table: Sequence[int], e: int) -> tuple[int, ...]:
    """``table`` composed with itself ``e`` times, by repeated squaring."""
    result = tuple(range(len(table)))
    base = tuple(table)
    while e:
        if e & 1:
            result = tuple(base[v] for v in result)
        base = tuple(base[v] for v in base)
        e >>= 1
    return result


def discrete_log_table(alpha: int = ALPHA) -> dict[int, int]:
    if not gf256.is_primitive(alpha):
        raise ValueError(f"{gf256.to_hex(alpha)} is not primitive")
    logs = {}
    v = 1
    for e in range(255):
        logs[v] = e
        v = gf256.mul(v, alpha)
    return logs


def alpha_scan_order(alpha: int = ALPHA) -> list[int]:
    """0, then alpha^1, alpha^2, ..., alpha^255 = 1."""
    return [0] + [gf256.power(alpha, e) for e in range(1, 256)]


def alpha_power(a: int, logs: dict[int, int]) -> str:
    if a == 0:
        return "0"
    e = logs[a]
    return "α" if e == 1 else f"α^{e}"


def discrete_log_format(d: CycleDecomposition, fmt: str = "alpha", closed: bool = False) -> str:
    """One line per cycle, either as powers of z^5+1 or as hex bytes.

    ``closed`` repeats the first entry at the end, as in [a, f(a), ..., a].
    """
    logs = discrete_log_table()
    lines = []
    for cyc in d.cycles:
        items = list(cyc) + ([cyc[0]] if closed else [])
        if fmt == "alpha":
            words = [alpha_power(a, logs) for a in items]
        elif fmt == "hex":
            words = [f"{a:02x}" for a in items]
        else:
            raise ValueError(f"unknown format {fmt!r}")
        lines.append("[" + ", ".join(words) + "]")
    return "\n".join(lines)


def alpha_scan_cycles(table: Sequence[int]) -> CycleDecomposition:
    """Cycles started at the first unseen element among alpha, alpha^2, alpha^3, ...

    0 is placed last in the scan so it never opens a cycle unless it is a fixed point.
    """
    order = alpha_scan_order()[1:] + [0]
    return cycle_decomposition(table, start_order=order)


def _primes_upto(n: int) -> list[int]:
    sieve = [True] * (n + 1)
    sieve[:2] = [False] * min(2, n + 1)
    for p in range(2, math.isqrt(n) + 1):
        if sieve[p]:
            sieve[p * p::p] = [False] * len(sieve[p * p::p])
    return [p for p, ok in enumerate(sieve) if ok]


def landau_max_order(n: int) -> int:
    """Landau's g(n): largest element order in the symmetric group on n points.

    Knapsack over primes: best[s] is the largest product of coprime prime
    powers whose sum is at most s.
    """
    if n < 1:
        raise ValueError("n must be positive")
    best = [1] * (n + 1)
    for p in _primes_upto(n):
        new = list(best)
        pk = p
        while pk <= n:
            for s in range(pk, n + 1):
                cand = best[s - pk] * pk
                if cand > new[s]:
                    new[s] = cand
            pk *= p
        best = new
    return best[n]
