"""Exit criteria for the package. Each test is one criterion and is summarised
in the "acceptance criteria" section at the end of the pytest run."""

import math
import random
import time

import numpy as np
import pytest

from unionstar.coloring import color_forest, color_graph, empty_mode_bound, lower_bound, verify
from unionstar.forest import is_onestar, spanning_onestar_forest
from unionstar.graph import components, generate, random_graph, random_onestar_forest
from unionstar.labels import is_forest_partition
from unionstar.oracle import SearchBudget, exact_index
from unionstar.stars import partition, partition_with_empty

from reference import tree_sizes_after_removal

pytestmark = pytest.mark.usefixtures("criterion")


def random_compositions(rng: random.Random, total: int, count: int) -> list[list[int]]:
    """Seeded compositions of ``total``; the first few force sizes 0 and 1."""
    out = []
    for j in range(count):
        parts = rng.randint(1, 16)
        cuts = sorted(rng.randint(0, total) for _ in range(parts - 1))
        sizes = [b - a for a, b in zip([0] + cuts, cuts + [total])]
        if j % 4 == 0 and total >= 1:
            sizes = [0, 1, total - 1] if j % 8 == 0 else sizes + [0]
        rng.shuffle(sizes)
        out.append(sizes)
    return out


@pytest.fixture(scope="module")
def graph_corpus():
    """500 seeded random graphs with no component of order <= 2 and n <= 300."""
    rng = np.random.default_rng(2024)
    corpus = []
    for seed in range(500):
        n = int(rng.integers(3, 301))
        density = float(rng.uniform(1.2, 4.0))
        p = min(1.0, density * math.log(n) / n) if seed % 10 else min(1.0, float(rng.uniform(0.2, 0.9)))
        corpus.append(random_graph(n, p, seed=seed, retries=1000))
    return corpus


@pytest.mark.criterion("1 partition: k=1..10, 200 random compositions each, all are forest partitions")
def test_partition_correctness():
    rng = random.Random(1)
    start = time.perf_counter()
    failures = []
    for k in range(1, 11):
        comps = random_compositions(rng, (1 << k) - 1, 200)
        assert any(0 in c for c in comps) and any(1 in c for c in comps)
        for sizes in comps:
            blocks = partition(sizes, k)
            if [len(b) for b in blocks] != sizes or not is_forest_partition(blocks, k):
                failures.append((k, sizes))
    elapsed = time.perf_counter() - start
    assert not failures
    assert elapsed < 10.0, f"{elapsed:.1f}s"


@pytest.mark.criterion("2 empty variant: k=1..10, 200 compositions of 2^k each, all partition P([k])")
def test_partition_with_empty_correctness():
    rng = random.Random(2)
    start = time.perf_counter()
    failures = []
    for k in range(1, 11):
        for sizes in random_compositions(rng, 1 << k, 200):
            blocks = partition_with_empty(sizes, k)
            if [len(b) for b in blocks] != sizes or not is_forest_partition(blocks, k, include_empty=True):
                failures.append((k, sizes))
    elapsed = time.perf_counter() - start
    assert not failures
    assert elapsed < 10.0, f"{elapsed:.1f}s"


@pytest.mark.criterion("3 main bound: 500 random graphs, valid with <= ceil(log2(n+1))+1 colors")
def test_main_bound(graph_corpus):
    start = time.perf_counter()
    failures = []
    for g in graph_corpus:
        report = verify(g, color_graph(g))
        if not report.valid or report.colors_used > lower_bound(g.n) + 1:
            failures.append(g.n)
    elapsed = time.perf_counter() - start
    assert len(graph_corpus) == 500 and max(g.n for g in graph_corpus) <= 300
    assert not failures
    assert elapsed < 30.0, f"{elapsed:.1f}s"


@pytest.mark.criterion("4 1-star forests: 200 random forests n<=1000, exactly ceil(log2(n+1)) colors")
def test_onestar_forest_tightness():
    rng = random.Random(4)
    start = time.perf_counter()
    failures = []
    for seed in range(200):
        f = random_onestar_forest(rng.randint(3, 1000), seed)
        assert all(is_onestar(f, c) for c in components(f))
        report = verify(f, color_forest(f))
        if not report.valid or report.colors_used != lower_bound(f.n):
            failures.append(f.n)
    elapsed = time.perf_counter() - start
    assert not failures
    assert elapsed < 30.0, f"{elapsed:.1f}s"


@pytest.mark.criterion("5 empty mode: criterion 3 corpus, valid with exactly ceil(log2 n) colors")
def test_empty_mode_optimal(graph_corpus):
    start = time.perf_counter()
    failures = []
    for g in graph_corpus:
        report = verify(g, color_graph(g, allow_empty=True), allow_empty=True)
        if not report.valid or report.colors_used != empty_mode_bound(g.n):
            failures.append(g.n)
    elapsed = time.perf_counter() - start
    assert not failures
    assert elapsed < 30.0, f"{elapsed:.1f}s"


CITED = (
    [(f"P{n}", generate("path", n), lower_bound(n)) for n in range(3, 9)]
    + [("C3", generate("cycle", 3), 3), ("C7", generate("cycle", 7), 4)]
    + [(f"C{n}", generate("cycle", n), lower_bound(n)) for n in (4, 5, 6, 8)]
)


@pytest.mark.criterion("6 oracle: exact index of P3..P8, C3=3, C7=4, C4,C5,C6,C8 at the lower bound")
def test_oracle_cited_values():
    start = time.perf_counter()
    got = {name: exact_index(g, SearchBudget(time_limit=60.0))[0] for name, g, _ in CITED}
    assert got == {name: expected for name, _, expected in CITED}
    assert time.perf_counter() - start < 60.0


@pytest.mark.criterion("7 oracle/theorem consistency: lb <= exact <= lb+1 and pipeline >= exact")
def test_oracle_theorem_consistency():
    instances = [g for _, g, _ in CITED] + [
        generate("complete", 4),
        generate("complete", 5),
        generate("star", 3),
        generate("star", 6),
        generate("hypercube", 2),
        generate("complete-binary-tree", 2),
    ] + [random_onestar_forest(n, seed) for seed, n in enumerate(range(3, 12))]
    for g in instances:
        k, witness = exact_index(g)
        assert verify(g, witness).valid
        assert lower_bound(g.n) <= k <= lower_bound(g.n) + 1
        assert verify(g, color_graph(g)).colors_used >= k


@pytest.mark.criterion("8 spanning forest: spans, 1-star trees, paths <= 5, minimal, on criterion 3 corpus")
def test_spanning_forest_properties(graph_corpus):
    for g in graph_corpus:
        forest = spanning_onestar_forest(g)
        assert set(forest.edges) <= set(g.edges)
        trees = components(forest)
        assert sorted(v for t in trees for v in t) == list(range(g.n))
        assert len(forest.edges) == g.n - len(trees)
        for tree in trees:
            assert len(tree) >= 3 and is_onestar(forest, tree)
            if all(forest.degree(v) <= 2 for v in tree):
                assert len(tree) <= 5
        edge_set = set(forest.edges)
        for e in forest.edges:
            assert min(tree_sizes_after_removal(edge_set, g.n, e)) <= 2
