"""Exact union vertex-distinguishing chromatic index by exhaustive search.

Only meant for small graphs (roughly a dozen edges). Edges are labeled in
ascending edge order with labels tried in ascending encoding, and a branch is
cut as soon as two vertices whose edges are all labeled share a union.
"""

from __future__ import annotations

import enum
import os
import time
from dataclasses import dataclass, field

from .coloring import EdgeColoring, empty_mode_bound, lower_bound
from .graph import Graph, GraphError, is_eligible
from .labels import Label


def _env_int(name: str, default: int) -> int:
    value = os.environ.get(name)
    return int(value) if value else default


def _env_float(name: str, default: float) -> float:
    value = os.environ.get(name)
    return float(value) if value else default


@dataclass(frozen=True)
class SearchBudget:
    """Caps on the search. Defaults can be set with ``UNIONSTAR_MAX_K``,
    ``UNIONSTAR_MAX_NODES`` and ``UNIONSTAR_MAX_SECONDS``."""

    max_k: int = field(default_factory=lambda: _env_int("UNIONSTAR_MAX_K", 8))
    node_limit: int = field(default_factory=lambda: _env_int("UNIONSTAR_MAX_NODES", 50_000_000))
    time_limit: float = field(default_factory=lambda: _env_float("UNIONSTAR_MAX_SECONDS", 300.0))

    def __post_init__(self) -> None:
        if self.max_k <= 0 or self.node_limit <= 0 or self.time_limit <= 0:
            raise ValueError("budget caps must be positive")


class Status(enum.Enum):
    FOUND = "found"
    REFUTED = "refuted"
    UNKNOWN = "unknown"


@dataclass
class SearchResult:
    status: Status
    coloring: EdgeColoring | None
    nodes: int


class BudgetExceeded(RuntimeError):
    """The search stopped before finding a coloring or refuting all of them."""


class TheoremViolation(AssertionError):
    """No coloring exists even with one color above the lower bound."""


class _OutOfBudget(Exception):
    pass


def search(g: Graph, k: int, budget: SearchBudget | None = None, allow_empty: bool = False) -> SearchResult:
    """Look for a distinguishing coloring of ``g`` over ``[k]``."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    budget = budget or SearchBudget()
    if k > budget.max_k:
        return SearchResult(Status.UNKNOWN, None, 0)

    edges = g.edges
    last = [-1] * g.n
    for i, (u, v) in enumerate(edges):
        last[u] = last[v] = i
    labels = list(range(0 if allow_empty else 1, 1 << k))
    unions = [0] * g.n
    chosen = [0] * len(edges)
    finished: set[int] = set()
    # an isolated vertex is a finished vertex with the empty union
    isolated = sum(1 for v in range(g.n) if not g.adjacency[v])
    if isolated > (1 if allow_empty else 0):
        return SearchResult(Status.REFUTED, None, 0)
    if isolated:
        finished.add(0)
    deadline = time.monotonic() + budget.time_limit
    nodes = 0

    def extend(i: int) -> bool:
        nonlocal nodes
        if i == len(edges):
            return True
        u, v = edges[i]
        saved_u, saved_v = unions[u], unions[v]
        for bits in labels:
            nodes += 1
            if nodes > budget.node_limit or (nodes & 0xFFF == 0 and time.monotonic() > deadline):
                raise _OutOfBudget
            unions[u] = saved_u | bits
            unions[v] = saved_v | bits
            added = []
            ok = True
            for w in (u, v):
                if last[w] == i:
                    if unions[w] in finished:
                        ok = False
                        break
                    finished.add(unions[w])
                    added.append(unions[w])
            if ok:
                chosen[i] = bits
                if extend(i + 1):
                    return True
            for a in added:
                finished.discard(a)
        unions[u], unions[v] = saved_u, saved_v
        return False

    try:
        found = extend(0)
    except _OutOfBudget:
        return SearchResult(Status.UNKNOWN, None, nodes)
    if not found:
        return SearchResult(Status.REFUTED, None, nodes)
    mode = "empty" if allow_empty else "standard"
    assignment = {e: Label(bits, k) for e, bits in zip(edges, chosen)}
    return SearchResult(Status.FOUND, EdgeColoring(k, assignment, mode), nodes)


def exists_coloring(
    g: Graph, k: int, budget: SearchBudget | None = None, allow_empty: bool = False
) -> EdgeColoring | None:
    """A coloring over ``[k]`` if one exists, ``None`` if none does.

    Raises :class:`BudgetExceeded` when the budget runs out first.
    """
    result = search(g, k, budget, allow_empty)
    if result.status is Status.UNKNOWN:
        raise BudgetExceeded(f"search at k={k} stopped after {result.nodes} nodes")
    return result.coloring


def exact_index(g: Graph, budget: SearchBudget | None = None, allow_empty: bool = False) -> tuple[int, EdgeColoring]:
    """Smallest ``k`` admitting a coloring, with the first witness found.

    Only the lower bound and one above it are tried; failing both raises
    :class:`TheoremViolation`.
    """
    if not is_eligible(g):
        raise GraphError("graph has a component of order at most two")
    low = empty_mode_bound(g.n) if allow_empty else lower_bound(g.n)
    for k in (low, low + 1):
        coloring = exists_coloring(g, k, budget, allow_empty)
        if coloring is not None:
            return k, coloring
    raise TheoremViolation(f"no coloring with {low} or {low + 1} colors on {g.n} vertices")
