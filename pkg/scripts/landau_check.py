#!/usr/bin/env python3
"""Landau's g(n) by knapsack, cross-checked against partition brute force for small n.

Also prints a witness partition for g(256) and the sum of the primes whose
product is 451,129,701,092,070.
"""
import math

from sympy import factorint
from sympy.utilities.iterables import partitions

from aespoly.sbox_analysis import landau_max_order


def brute(n):
    return max(math.lcm(*(k for k, m in p.items() for _ in range(m))) for p in partitions(n))


def main():
    for n in range(1, 46):
        assert landau_max_order(n) == brute(n), n
    print("knapsack == brute force for n = 1..45")

    g = landau_max_order(256)
    parts = [p ** e for p, e in sorted(factorint(g).items())]
    print(f"g(256) = {g}")
    print(f"witness: {' + '.join(map(str, parts))} = {sum(parts)}, lcm = {math.lcm(*parts)}")

    published = 451_129_701_092_070
    factors = factorint(published)
    print(f"451129701092070 = {' * '.join(map(str, sorted(factors)))}; the parts sum to {sum(factors)}")
    print(f"ratio g(256) / 451129701092070 = {g / published:.3f}")


if __name__ == "__main__":
    main()
