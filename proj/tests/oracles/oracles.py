#!/usr/bin/env python3
"""Independent brute-force oracles used to freeze expected values in the C++ tests.

Nothing here shares code with the library; run it with plain python3.
"""
from fractions import Fraction
from itertools import combinations, permutations
from math import ceil, floor, comb


def r_value(m):
    k, K = floor(m), floor(2 * m)
    return sum(ceil(Fraction(i) / (i - m)) for i in range(k + 2, K + 1))


def complete(n):
    return n, [(a, b) for a, b in combinations(range(n), 2)]


def induced_edges(edges, s):
    s = set(s)
    return sum(1 for a, b in edges if a in s and b in s)


def max_density(n, edges):
    best = None
    for size in range(1, n + 1):
        for s in combinations(range(n), size):
            d = Fraction(induced_edges(edges, s), size)
            if best is None or d > best[0]:
                best = (d, s)
    return best


def max_two_density(n, edges):
    best = Fraction(1, 2)
    for size in range(3, n + 1):
        for s in combinations(range(n), size):
            best = max(best, Fraction(induced_edges(edges, s) - 1, size - 2))
    return best


def max_degenerate_edges(n, edges, d):
    adj = [set() for _ in range(n)]
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    best = 0
    for order in permutations(range(n)):
        pos = {v: i for i, v in enumerate(order)}
        best = max(best, sum(min(d, sum(1 for w in adj[v] if pos[w] > pos[v])) for v in range(n)))
    return best


def gap_bound(v, d, k, eps):
    return Fraction(comb(d - 1, 2) if d >= 1 else 1) - (d - k - eps) * (v - 2)


def connected(n, edges):
    adj = [set() for _ in range(n)]
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    seen, stack = {0}, [0]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == n


if __name__ == "__main__":
    for m in (Fraction(39, 2), Fraction(18), Fraction(1, 2), Fraction(3, 2), Fraction(19)):
        print("r_value", m, r_value(m))
    print("K4+pendant m", max_density(5, complete(4)[1] + [(3, 4)]))
    print("C4+chord m", max_density(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]))
    print("P3 m", max_density(3, [(0, 1), (1, 2)]))
    print("tree5 m", max_density(5, [(0, 1), (0, 2), (2, 3), (2, 4)]))
    print("K4 m2", max_two_density(*complete(4)))
    print("K5 d=2", max_degenerate_edges(*complete(5), 2))
    print("K6 d=3", max_degenerate_edges(*complete(6), 3))
    # Gap-bound sweep over labelled connected graphs on 3..5 vertices (up to 7 is done in C++).
    bad = {}
    for n in range(3, 6):
        all_pairs = list(combinations(range(n), 2))
        for mask in range(1, 1 << len(all_pairs)):
            edges = [all_pairs[i] for i in range(len(all_pairs)) if mask >> i & 1]
            if not connected(n, edges):
                continue
            d2 = Fraction(len(edges) - 1, n - 2)
            k = floor(d2)
            eps = d2 - k
            for d in range(1, 6):
                lhs = len(edges) - max_degenerate_edges(n, edges, d)
                if lhs < gap_bound(n, d, k, eps):
                    bad.setdefault((n, d), 0)
                    bad[(n, d)] += 1
    print("gap-bound violations by (v,d):", bad)
