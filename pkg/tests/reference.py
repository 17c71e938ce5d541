"""Slow reference implementations used to check the real ones.

Nothing here imports the code under test except the value types.
"""

from __future__ import annotations

import itertools
from collections import Counter

from unionstar.graph import Graph
from unionstar.labels import Label


def as_sets(seq):
    return [frozenset(a) for a in seq]


def ref_is_m_star(sets: list[frozenset]) -> bool:
    """The star definition written out literally over frozensets (1-based indices)."""
    m = len(sets)
    if len(set(sets)) != m:
        return False
    A = [None] + list(sets)
    if m <= 1:
        return True
    if m == 2:
        return A[2] < A[1]
    if m == 3:
        return A[1] == A[2] | A[3]
    if A[1] != A[2] | A[4]:
        return False
    i = 1
    while 2 * i <= m:
        if not A[2 * i] < A[1]:
            return False
        if 2 * i + 1 <= m and not A[2 * i + 1] < A[2 * i]:
            return False
        i += 1
    return True


def all_stars(k: int, m: int, include_empty: bool = False) -> list[list[Label]]:
    """Every m-star over subsets of [k], by filtering all ordered m-tuples."""
    family = [Label(b, k) for b in range(0 if include_empty else 1, 1 << k)]
    return [list(t) for t in itertools.permutations(family, m) if ref_is_m_star(as_sets(t))]


def brute_force_colorable(g: Graph, k: int) -> bool:
    """Try every assignment of nonempty subsets of [k] to the edges."""
    labels = range(1, 1 << k)
    for combo in itertools.product(labels, repeat=len(g.edges)):
        unions = [0] * g.n
        for (u, v), bits in zip(g.edges, combo):
            unions[u] |= bits
            unions[v] |= bits
        if 0 not in unions and len(set(unions)) == g.n:
            return True
    return False


def tree_sizes_after_removal(edges: set, n: int, removed) -> tuple[int, int]:
    adj = {v: set() for v in range(n)}
    for u, v in edges:
        if (u, v) != removed:
            adj[u].add(v)
            adj[v].add(u)

    def reach(s):
        seen, stack = {s}, [s]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen)

    return reach(removed[0]), reach(removed[1])


def rescan_minimal_forest(tree_edges: list, n: int) -> list:
    """Delete the first deletable edge, restart the scan, repeat."""
    edges = set(tree_edges)
    while True:
        for e in sorted(edges):
            a, b = tree_sizes_after_removal(edges, n, e)
            if a >= 3 and b >= 3:
                edges.discard(e)
                break
        else:
            return sorted(edges)


def degree_histogram(g: Graph) -> Counter:
    return Counter(len(a) for a in g.adjacency)
