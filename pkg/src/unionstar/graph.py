"""Simple undirected graphs on vertices ``0..n-1``, edge-list I/O and generators."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

import numpy as np

Edge = tuple[int, int]

FAMILIES = ("path", "cycle", "star", "complete", "hypercube", "complete-binary-tree", "random")


class GraphError(ValueError):
    """Malformed graph input: parse errors, loops, duplicates, bad parameters."""


class RetryExhausted(GraphError):
    """Random generation failed to produce an eligible graph."""


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph. ``edges`` is sorted; an edge's id is its index."""

    n: int
    edges: tuple[Edge, ...] = field(default=())

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError(f"negative vertex count {self.n}")
        normed = []
        for u, v in self.edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge ({u}, {v}) outside 0..{self.n - 1}")
            normed.append(_norm(u, v))
        normed.sort()
        for a, b in zip(normed, normed[1:]):
            if a == b:
                raise GraphError(f"duplicate edge {a}")
        object.__setattr__(self, "edges", tuple(normed))

    @classmethod
    def from_edges(cls, edges: Iterable[Edge], n: int | None = None) -> Graph:
        edges = list(edges)
        if n is None:
            n = 1 + max((max(e) for e in edges), default=-1)
        return cls(n, tuple(edges))

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(nbrs)) for nbrs in adj)

    @cached_property
    def edge_index(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edges)}

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return _norm(u, v) in self.edge_index


def components(g: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by smallest vertex."""
    seen = [False] * g.n
    out = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        comp = [start]
        stack = [start]
        while stack:
            u = stack.pop()
            for w in g.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        out.append(sorted(comp))
    return out


def min_component_order(g: Graph) -> int:
    return min((len(c) for c in components(g)), default=0)


def is_eligible(g: Graph) -> bool:
    """No component of order at most two (and at least one vertex)."""
    return g.n > 0 and min_component_order(g) >= 3


def read_graph(text: str) -> Graph:
    """Parse the edge-list format.

    ``#`` starts a comment, an optional first line ``n <count>`` fixes the
    vertex count, and every other line is ``u v``.
    """
    declared = None
    edges: list[Edge] = []
    seen: set[Edge] = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "n":
            if declared is not None or edges:
                raise GraphError(f"line {lineno}: 'n' header must come first")
            if len(parts) != 2 or not parts[1].isdigit():
                raise GraphError(f"line {lineno}: expected 'n <count>'")
            declared = int(parts[1])
            continue
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphError(f"line {lineno}: vertex ids must be integers") from None
        if u < 0 or v < 0:
            raise GraphError(f"line {lineno}: negative vertex id")
        if u == v:
            raise GraphError(f"line {lineno}: loop at vertex {u}")
        e = _norm(u, v)
        if e in seen:
            raise GraphError(f"line {lineno}: duplicate edge {u} {v}")
        seen.add(e)
        edges.append(e)
    n = 1 + max((max(e) for e in edges), default=-1)
    if declared is not None:
        if declared < n:
            raise GraphError(f"header declares n={declared} but vertex {n - 1} is used")
        n = declared
    return Graph(n, tuple(edges))


def write_graph(g: Graph) -> str:
    lines = [f"n {g.n}"]
    lines += [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs at least one vertex")
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle length must be at least 3")
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def star(leaves: int) -> Graph:
    """K_{1,leaves} with center 0."""
    if leaves < 1:
        raise GraphError("star needs at least one leaf")
    return Graph(leaves + 1, tuple((0, i) for i in range(1, leaves + 1)))


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs at least one vertex")
    return Graph(n, tuple((u, v) for u in range(n) for v in range(u + 1, n)))


def hypercube(d: int) -> Graph:
    """Q_d; vertex ``x`` is adjacent to ``x ^ (1 << b)``."""
    if d < 1:
        raise GraphError("hypercube dimension must be at least 1")
    return Graph(1 << d, tuple((x, x | 1 << b) for x in range(1 << d) for b in range(d) if not x >> b & 1))


def complete_binary_tree(depth: int) -> Graph:
    """Heap-indexed tree with ``2**(depth+1) - 1`` vertices; children of ``i`` are ``2i+1, 2i+2``."""
    if depth < 0:
        raise GraphError("depth must be nonnegative")
    n = (1 << (depth + 1)) - 1
    return Graph(n, tuple(((i - 1) // 2, i) for i in range(1, n)))


def random_graph(n: int, p: float, seed: int, retries: int = 100) -> Graph:
    """G(n, p) resampled until no component has order at most two."""
    if n < 3:
        raise GraphError("random graph needs n >= 3")
    if not 0.0 <= p <= 1.0:
        raise GraphError(f"edge probability {p} outside [0, 1]")
    rng = np.random.default_rng(seed)
    rows, cols = np.triu_indices(n, k=1)
    for _ in range(retries):
        keep = rng.random(rows.size) < p
        g = Graph(n, tuple(zip(rows[keep].tolist(), cols[keep].tolist())))
        if is_eligible(g):
            return g
    raise RetryExhausted(f"no eligible G({n}, {p}) after {retries} tries (seed {seed})")


def random_onestar_forest(n_max: int, seed: int) -> Graph:
    """A random forest of 1-stars with at most ``n_max`` vertices, ids shuffled."""
    if n_max < 3:
        raise GraphError("a 1-star has at least 3 vertices")
    rng = np.random.default_rng(seed)
    edges: list[Edge] = []
    n = 0
    while n_max - n >= 3:
        room = n_max - n
        legs = int(rng.integers(0, (room - 1) // 2 + 1))
        min_leaves = max(0, 2 - legs)
        max_leaves = room - 1 - 2 * legs
        if max_leaves < min_leaves:
            continue
        leaves = int(rng.integers(min_leaves, max_leaves + 1))
        # keep trees small on average so forests have many components
        if rng.random() < 0.8:
            legs, leaves = min(legs, 3), min(leaves, max(min_leaves, 3))
        center = n
        nxt = n + 1
        for _ in range(legs):
            edges += [(center, nxt), (nxt, nxt + 1)]
            nxt += 2
        for _ in range(leaves):
            edges.append((center, nxt))
            nxt += 1
        n = nxt
    perm = rng.permutation(n).tolist()
    return Graph(n, tuple((perm[u], perm[v]) for u, v in edges))


def generate(kind: str, *params: float, seed: int = 0) -> Graph:
    """Build a named family member; ``random`` takes ``(n, p)`` plus ``seed``."""
    try:
        if kind == "path":
            return path(int(params[0]))
        if kind == "cycle":
            return cycle(int(params[0]))
        if kind == "star":
            return star(int(params[0]))
        if kind == "complete":
            return complete(int(params[0]))
        if kind == "hypercube":
            return hypercube(int(params[0]))
        if kind == "complete-binary-tree":
            return complete_binary_tree(int(params[0]))
        if kind == "random":
            return random_graph(int(params[0]), float(params[1]), seed)
    except IndexError:
        raise GraphError(f"missing parameters for {kind}") from None
    raise GraphError(f"unknown family {kind!r}; choose from {', '.join(FAMILIES)}")
