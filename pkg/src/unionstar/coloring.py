"""Union vertex-distinguishing edge colorings: construction, verification, file format.

An edge coloring assigns subsets of ``[k]`` to edges; a vertex sees the union
of the labels on its edges. The coloring distinguishes vertices when those
unions are pairwise different.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Literal, Sequence

from .forest import OneStarAnatomy, analyze_onestar, spanning_onestar_forest
from .graph import Edge, Graph, components
from .labels import Label, is_m_star
from .stars import partition, partition_with_empty

Mode = Literal["standard", "empty"]


class ColoringError(ValueError):
    """A coloring input does not fit the graph or star it is applied to."""


class ColoringFormatError(ColoringError):
    pass


def lower_bound(n: int) -> int:
    """``ceil(log2(n + 1))``, the fewest colors that can distinguish ``n`` vertices."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return n.bit_length()


def empty_mode_bound(n: int) -> int:
    """``ceil(log2(n))``: the same bound when the empty label is allowed."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return (n - 1).bit_length()


def _norm(e: Edge) -> Edge:
    u, v = e
    return (u, v) if u < v else (v, u)


@dataclass
class EdgeColoring:
    k: int
    assignment: dict[Edge, Label] = field(default_factory=dict)
    mode: Mode = "standard"

    def __getitem__(self, edge: Edge) -> Label:
        return self.assignment[_norm(edge)]

    def lifted(self, k: int) -> EdgeColoring:
        return EdgeColoring(k, {e: a.lift(k) for e, a in self.assignment.items()}, self.mode)


@dataclass
class VerificationReport:
    empty_edges: list[Edge]
    empty_unions: list[int]
    collisions: list[tuple[int, int]]
    colors_used: int
    k: int

    @property
    def valid(self) -> bool:
        return not (self.empty_edges or self.empty_unions or self.collisions)

    def lines(self) -> list[str]:
        out = [f"valid={str(self.valid).lower()} k={self.k} colors_used={self.colors_used}"]
        out += [f"empty-label edge {u} {v}" for u, v in self.empty_edges]
        out += [f"empty union at vertex {v}" for v in self.empty_unions]
        out += [f"collision {u} {v}" for u, v in self.collisions]
        return out


def color_onestar(anatomy: OneStarAnatomy, star: Sequence[Label]) -> dict[Edge, Label]:
    """Color a 1-star so its vertex unions are ``star[0], star[1], ...`` in anatomy order.

    Edge ``j`` of :meth:`OneStarAnatomy.edge_order` receives ``star[j + 1]``.
    """
    if len(star) != anatomy.m:
        raise ColoringError(f"star has {len(star)} sets but the 1-star has order {anatomy.m}")
    if anatomy.m < 3:
        raise ColoringError("a 1-star has order at least 3")
    if not is_m_star(star):
        raise ColoringError(f"not a star: {[str(a) for a in star]}")
    colors = {_norm(e): a for e, a in zip(anatomy.edge_order(), star[1:])}

    unions: dict[int, Label] = {}
    for (u, v), a in colors.items():
        unions[u] = unions[u] | a if u in unions else a
        unions[v] = unions[v] | a if v in unions else a
    for vertex, expected in zip(anatomy.vertex_order(), star):
        if unions[vertex] != expected:
            raise AssertionError(f"union at {vertex} is {unions[vertex]}, expected {expected}")
    return colors


def _forest_blocks(forest: Graph, k: int, empty: bool) -> list[tuple[list[int], list[Label]]]:
    trees = sorted(components(forest), key=lambda c: (len(c), c[0]))
    sizes = [len(t) for t in trees]
    family = (1 << k) if empty else (1 << k) - 1
    sizes.append(family - forest.n)
    blocks = partition_with_empty(sizes, k) if empty else partition(sizes, k)
    return list(zip(trees, blocks[:-1]))


def color_forest(forest: Graph, empty: bool = False) -> EdgeColoring:
    """Color a forest of 1-stars with ``ceil(log2(n + 1))`` colors.

    With ``empty`` the empty label is allowed and ``ceil(log2(n))`` colors are
    used instead. The unused subsets form one extra padding star that is not
    attached to any tree.
    """
    n = forest.n
    k = empty_mode_bound(n) if empty else lower_bound(n)
    assignment: dict[Edge, Label] = {}
    for tree, block in _forest_blocks(forest, k, empty):
        assignment.update(color_onestar(analyze_onestar(forest, tree), block))
    return EdgeColoring(k, assignment, "empty" if empty else "standard")


def color_graph(g: Graph, allow_empty: bool = False) -> EdgeColoring:
    """Color any graph without components of order <= 2.

    A spanning forest of 1-stars is colored optimally; every other edge gets
    the new color ``{k + 1}``, or the empty label when ``allow_empty`` is set.
    """
    forest = spanning_onestar_forest(g)
    coloring = color_forest(forest, empty=allow_empty)
    extra = [e for e in g.edges if e not in coloring.assignment]
    if extra:
        if allow_empty:
            blank = Label.empty(coloring.k)
        else:
            coloring = coloring.lifted(coloring.k + 1)
            blank = Label.singleton(coloring.k, coloring.k)
        for e in extra:
            coloring.assignment[e] = blank
    report = verify(g, coloring, allow_empty)
    if not report.valid:
        raise AssertionError("constructed coloring failed verification: " + "; ".join(report.lines()))
    return coloring


def union_vertex_coloring(g: Graph, coloring: EdgeColoring) -> list[Label]:
    """Per-vertex union of incident edge labels; isolated vertices get the empty label."""
    stray = [e for e in coloring.assignment if e not in g.edge_index]
    if stray:
        raise ColoringError(f"labelled pair {stray[0][0]} {stray[0][1]} is not an edge")
    unions = [0] * g.n
    for e in g.edges:
        try:
            bits = coloring.assignment[e].bits
        except KeyError:
            raise ColoringError(f"edge {e[0]} {e[1]} has no label") from None
        unions[e[0]] |= bits
        unions[e[1]] |= bits
    return [Label(b, coloring.k) for b in unions]


def verify(g: Graph, coloring: EdgeColoring, allow_empty: bool = False) -> VerificationReport:
    unions = union_vertex_coloring(g, coloring)
    empty_edges = [] if allow_empty else [e for e in g.edges if not coloring.assignment[e]]
    empty_unions = [] if allow_empty else [v for v, a in enumerate(unions) if not a]
    by_union: dict[int, list[int]] = defaultdict(list)
    for v, a in enumerate(unions):
        by_union[a.bits].append(v)
    collisions = sorted(
        (vs[i], vs[j]) for vs in by_union.values() for i in range(len(vs)) for j in range(i + 1, len(vs))
    )
    used = 0
    for e in g.edges:
        used |= coloring.assignment[e].bits
    return VerificationReport(empty_edges, empty_unions, collisions, bin(used).count("1"), coloring.k)


def write_coloring(coloring: EdgeColoring) -> str:
    lines = [f"k {coloring.k} mode {coloring.mode}"]
    lines += [f"{u} {v} : {coloring.assignment[(u, v)]}" for u, v in sorted(coloring.assignment)]
    return "\n".join(lines) + "\n"


def read_coloring(text: str) -> EdgeColoring:
    """Parse ``k <k> mode <standard|empty>`` followed by ``u v : {labels}`` lines."""
    lines = [(no, ln.split("#", 1)[0].strip()) for no, ln in enumerate(text.splitlines(), 1)]
    lines = [(no, ln) for no, ln in lines if ln]
    if not lines:
        raise ColoringFormatError("empty coloring file")
    no, header = lines[0]
    parts = header.split()
    if len(parts) != 4 or parts[0] != "k" or parts[2] != "mode" or not parts[1].isdigit():
        raise ColoringFormatError(f"line {no}: expected 'k <colors> mode <standard|empty>'")
    if parts[3] not in ("standard", "empty"):
        raise ColoringFormatError(f"line {no}: unknown mode {parts[3]!r}")
    coloring = EdgeColoring(int(parts[1]), {}, parts[3])  # type: ignore[arg-type]
    for no, line in lines[1:]:
        left, sep, right = line.partition(":")
        ends = left.split()
        if not sep or len(ends) != 2:
            raise ColoringFormatError(f"line {no}: expected 'u v : {{labels}}'")
        try:
            e = _norm((int(ends[0]), int(ends[1])))
            label = Label.parse(right, coloring.k)
        except ValueError as exc:
            raise ColoringFormatError(f"line {no}: {exc}") from None
        if e in coloring.assignment:
            raise ColoringFormatError(f"line {no}: edge {e[0]} {e[1]} listed twice")
        coloring.assignment[e] = label
    return coloring
