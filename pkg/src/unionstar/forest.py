"""Spanning forests of 1-stars and the anatomy of a single 1-star.

A 1-star is a star on at least three vertices with each edge subdivided at
most once.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import Edge, Graph, GraphError, components


class NotATreeError(ValueError):
    pass


class NotAOneStarError(ValueError):
    pass


class EligibilityError(GraphError):
    """The graph has a component of order at most two."""


@dataclass(frozen=True)
class OneStarAnatomy:
    """Center, subdivided legs ``(u_i, v_i)`` with ``u_i`` next to the center, and direct leaves."""

    center: int
    legs: tuple[tuple[int, int], ...]
    leaves: tuple[int, ...]

    @property
    def m(self) -> int:
        return 2 * len(self.legs) + len(self.leaves) + 1

    def vertex_order(self) -> list[int]:
        """Vertices in the order ``v, u_1, v_1, ..., u_l, v_l, leaves...``."""
        out = [self.center]
        for u, v in self.legs:
            out += [u, v]
        out += list(self.leaves)
        return out

    def edge_order(self) -> list[Edge]:
        """Edges in the order ``v u_1, u_1 v_1, ..., v u_l, u_l v_l, v leaf...`` (endpoints as written)."""
        out: list[Edge] = []
        for u, v in self.legs:
            out += [(self.center, u), (u, v)]
        out += [(self.center, leaf) for leaf in self.leaves]
        return out


def _local_adjacency(g: Graph, vertices: Sequence[int]) -> dict[int, list[int]]:
    members = set(vertices)
    adj = {v: [w for w in g.adjacency[v] if w in members] for v in vertices}
    n_edges = sum(len(ws) for ws in adj.values()) // 2
    if n_edges != len(members) - 1:
        raise NotATreeError(f"{len(members)} vertices but {n_edges} edges")
    # connected + |E| = |V| - 1 means tree
    start = min(members)
    seen = {start}
    stack = [start]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    if len(seen) != len(members):
        raise NotATreeError("vertex set does not induce a connected subgraph")
    return adj


def _anatomy_at(adj: dict[int, list[int]], center: int) -> OneStarAnatomy | None:
    nbrs = adj[center]
    if len(nbrs) < 2:
        return None
    legs = []
    leaves = []
    for u in nbrs:
        rest = [w for w in adj[u] if w != center]
        if not rest:
            leaves.append(u)
        elif len(rest) == 1 and len(adj[rest[0]]) == 1:
            legs.append((u, rest[0]))
        else:
            return None
    return OneStarAnatomy(center, tuple(sorted(legs)), tuple(sorted(leaves)))


def _analyze(adj: dict[int, list[int]]) -> OneStarAnatomy | None:
    if len(adj) < 3:
        return None
    for v in sorted(adj):
        anatomy = _anatomy_at(adj, v)
        if anatomy is not None:
            return anatomy
    return None


def is_onestar(g: Graph, vertices: Iterable[int] | None = None) -> bool:
    """Whether the tree induced on ``vertices`` (default: all of ``g``) is a 1-star."""
    vertices = list(range(g.n)) if vertices is None else sorted(vertices)
    return _analyze(_local_adjacency(g, vertices)) is not None


def analyze_onestar(g: Graph, vertices: Iterable[int] | None = None) -> OneStarAnatomy:
    """Anatomy of a 1-star, centered at the smallest vertex id that works."""
    vertices = list(range(g.n)) if vertices is None else sorted(vertices)
    anatomy = _analyze(_local_adjacency(g, vertices))
    if anatomy is None:
        raise NotAOneStarError(f"tree on {vertices} is not a 1-star")
    return anatomy


def bfs_spanning_forest(g: Graph) -> list[Edge]:
    """Spanning forest from a BFS per component, lowest vertex and lowest neighbor first."""
    seen = [False] * g.n
    tree: list[Edge] = []
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    tree.append((min(u, w), max(u, w)))
                    queue.append(w)
    return sorted(tree)


def _side_has_three(adj: dict[int, set[int]], start: int, blocked: int) -> bool:
    """Whether the side of ``start`` reaches 3 vertices without stepping onto ``blocked``."""
    seen = {start}
    stack = [start]
    while stack:
        for w in adj[stack.pop()]:
            if w != blocked and w not in seen:
                seen.add(w)
                if len(seen) >= 3:
                    return True
                stack.append(w)
    return False


def spanning_onestar_forest(g: Graph) -> Graph:
    """A spanning forest of ``g`` in which every tree is a 1-star.

    Starts from :func:`bfs_spanning_forest` and deletes, in ascending edge
    order, every edge whose removal leaves both sides with at least three
    vertices. The result is minimal: no remaining edge can be deleted.
    """
    small = [c for c in components(g) if len(c) <= 2]
    if small:
        raise EligibilityError(f"component {small[0]} has order {len(small[0])} <= 2")
    tree = bfs_spanning_forest(g)
    adj: dict[int, set[int]] = {v: set() for v in range(g.n)}
    for u, v in tree:
        adj[u].add(v)
        adj[v].add(u)
    # Deletions only shrink trees, so an edge that is kept stays undeletable;
    # one ascending pass equals rescanning from the start after each deletion.
    kept = []
    for u, v in tree:
        if _side_has_three(adj, u, v) and _side_has_three(adj, v, u):
            adj[u].discard(v)
            adj[v].discard(u)
        else:
            kept.append((u, v))
    forest = Graph(g.n, tuple(kept))
    for comp in components(forest):
        if not is_onestar(forest, comp):
            raise AssertionError(f"minimal forest tree on {comp} is not a 1-star")
    return forest

