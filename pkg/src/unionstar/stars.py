"""Partitioning the subsets of ``[k]`` into stars of prescribed sizes.

Every nonempty subset of ``[k]`` (or every subset, in empty-label mode) is
split into stars whose sizes are given by the caller. The construction
doubles stars over ``[k-1]`` by adding ``k`` to each set, recursing on ``k``.
"""

from __future__ import annotations

from typing import Sequence

from .labels import Label, is_forest_partition, is_m_star

Star = list[Label]


class PreconditionError(ValueError):
    """An input star or parameter violates a construction precondition."""


class CompositionError(ValueError):
    """The requested sizes do not add up to the size of the set family."""


class ConstructionError(AssertionError):
    """A construction produced something that is not a star."""


# Orderings over A_1..A_m ("A", j) and A'_j = A_j | {k} ("P", j).
_SMALL_SPLITS: dict[tuple[int, int], tuple[list[tuple[str, int]], list[tuple[str, int]]]] = {
    (4, 1): ([("A", 1)], [("P", 1), ("P", 2), ("P", 3), ("P", 4), ("A", 4), ("A", 2), ("A", 3)]),
    (4, 3): ([("P", 2), ("P", 3), ("A", 2)], [("P", 1), ("A", 1), ("A", 3), ("P", 4), ("A", 4)]),
    (3, 1): ([("A", 1)], [("P", 1), ("P", 2), ("A", 2), ("P", 3), ("A", 3)]),
    (3, 3): ([("A", 1), ("A", 2), ("A", 3)], [("P", 1), ("P", 2), ("P", 3)]),
    (2, 1): ([("A", 2)], [("P", 1), ("P", 2), ("A", 1)]),
    (1, 1): ([("A", 1)], [("P", 1)]),
}


def _even_split_order(m: int, i: int) -> tuple[list[tuple[str, int]], list[tuple[str, int]]]:
    """Index orderings for splitting a doubled m-star, m even and at least 6."""
    if i == 3:
        first = [("P", 2), ("P", 3), ("A", 2)]
        second = [("P", 1), ("A", 1), ("A", 3)]
        second += [("P", j) for j in range(4, m)]
        second += [("A", j) for j in range(4, m)]
    else:
        first = [("A", j) for j in range(1, i + 1)]
        second = [("P", j) for j in range(1, m)]
        second += [("A", j) for j in range(i + 1, m)]
    second += [("P", m), ("A", m)]
    return first, second


def _check_input(star: Sequence[Label], k: int) -> None:
    if k < 1:
        raise PreconditionError(f"k must be positive, got {k}")
    for label in star:
        if label.k != k - 1:
            raise PreconditionError(f"{label!r} is not over [k-1] = [{k - 1}]")
    if not is_m_star(star):
        raise PreconditionError(f"not a star: {[str(a) for a in star]}")


def _lifted(star: Sequence[Label], k: int) -> tuple[Star, Star]:
    plain = [a.lift(k) for a in star]
    primed = [a.with_element(k) for a in star]
    return plain, primed


def _ensure_star(seq: Star, what: str) -> Star:
    if not is_m_star(seq):
        raise ConstructionError(f"{what} is not a star: {[str(a) for a in seq]}")
    return seq


def double_split(star: Sequence[Label], i: int, k: int) -> tuple[Star, Star]:
    """Split ``A | A'`` into an ``i``-star and a ``(2m - i)``-star.

    ``A'`` is ``star`` with ``k`` added to every set; ``i`` must be odd and at
    most ``m = len(star)``.
    """
    _check_input(star, k)
    m = len(star)
    if i % 2 == 0 or not 1 <= i <= m:
        raise PreconditionError(f"need odd 1 <= i <= {m}, got i={i}")
    plain, primed = _lifted(star, k)

    if m <= 4:
        first_idx, second_idx = _SMALL_SPLITS[m, i]
        drop = 0
    elif m % 2 == 0:
        first_idx, second_idx = _even_split_order(m, i)
        drop = 0
    else:
        # Odd m: split as if there were an A_{m+1}, then drop A'_{m+1}, A_{m+1}.
        first_idx, second_idx = _even_split_order(m + 1, i)
        drop = 2

    def pick(token: tuple[str, int]) -> Label:
        kind, j = token
        return (primed if kind == "P" else plain)[j - 1]

    if drop:
        if second_idx[-drop:] != [("P", m + 1), ("A", m + 1)]:
            raise ConstructionError("odd-m ordering does not end in the phantom pair")
        second_idx = second_idx[:-drop]
    first = [pick(t) for t in first_idx]
    second = [pick(t) for t in second_idx]
    if len(first) != i or len(second) != 2 * m - i:
        raise ConstructionError(f"split sizes {len(first)}, {len(second)} for m={m}, i={i}")
    return _ensure_star(first, f"{i}-star"), _ensure_star(second, f"{2 * m - i}-star")


def _doubled(star: Sequence[Label], k: int) -> Star:
    """``A'_1, A_1, A_m, A'_2, A_2, ..., A'_{m-1}, A_{m-1}, A'_m``."""
    _check_input(star, k)
    m = len(star)
    plain, primed = _lifted(star, k)
    if m <= 1:
        return [x for pair in zip(primed, plain) for x in pair]
    out = [primed[0], plain[0], plain[m - 1]]
    for j in range(1, m - 1):
        out += [primed[j], plain[j]]
    out.append(primed[m - 1])
    return out


def double_plus_singleton(star: Sequence[Label], k: int) -> Star:
    """Order ``A | A' | {{k}}`` as a ``(2m + 1)``-star."""
    out = _doubled(star, k) + [Label.singleton(k, k)]
    return _ensure_star(out, f"{2 * len(star) + 1}-star")


def double(star: Sequence[Label], k: int) -> Star:
    """Order ``A | A'`` as a ``2m``-star."""
    return _ensure_star(_doubled(star, k), f"{2 * len(star)}-star")


def _check_sizes(sizes: Sequence[int], k: int, total: int) -> None:
    if any(m < 0 for m in sizes):
        raise CompositionError(f"sizes must be nonnegative: {list(sizes)}")
    if sum(sizes) != total:
        raise CompositionError(f"sizes sum to {sum(sizes)}, need {total} for k={k}")


def _expand(sizes: list[int], k: int, base_k: int) -> list[Star]:
    """Stars of the given sizes covering the family at ``k``, built up from ``base_k``."""
    if k == base_k:
        # The family at the base has exactly one set; it goes to the size-1 block.
        base = Label(0, 0) if base_k == 0 else Label.singleton(1, 1)
        return [[base] if m == 1 else [] for m in sizes]

    odd = [j for j, m in enumerate(sizes) if m % 2]
    even = [j for j, m in enumerate(sizes) if m % 2 == 0]
    pairs = [(odd[t], odd[t + 1]) for t in range(0, len(odd) - 1, 2)]
    single = odd[-1] if len(odd) % 2 else None

    halves = [(sizes[a] + sizes[b]) // 2 for a, b in pairs]
    if single is not None:
        halves.append((sizes[single] - 1) // 2)
    halves += [sizes[j] // 2 for j in even]
    smaller = _expand(halves, k - 1, base_k)

    out: list[Star] = [[] for _ in sizes]
    for (a, b), star in zip(pairs, smaller):
        i = min(sizes[a], sizes[b])
        if i % 2 == 0 or i > len(star):
            raise ConstructionError(f"cannot split a {len(star)}-star with i={i}")
        small, large = double_split(star, i, k)
        if sizes[a] == i:
            out[a], out[b] = small, large
        else:
            out[a], out[b] = large, small
    rest = smaller[len(pairs):]
    if single is not None:
        out[single] = double_plus_singleton(rest[0], k)
        rest = rest[1:]
    for j, star in zip(even, rest):
        out[j] = double(star, k)
    return out


def partition(sizes: Sequence[int], k: int) -> list[Star]:
    """Partition the nonempty subsets of ``[k]`` into stars of the given sizes.

    Block ``j`` of the result has ``sizes[j]`` sets. ``sizes`` must sum to
    ``2**k - 1``; zero sizes give empty blocks.

    >>> [[str(a) for a in b] for b in partition([1, 2], 2)]
    [['{2}'], ['{1,2}', '{1}']]
    """
    if k < 1:
        raise CompositionError(f"k must be at least 1, got {k}")
    _check_sizes(sizes, k, (1 << k) - 1)
    blocks = _expand(list(sizes), k, base_k=1)
    if not is_forest_partition(blocks, k):
        raise ConstructionError(f"partition for k={k}, sizes={list(sizes)} is invalid")
    return blocks


def partition_with_empty(sizes: Sequence[int], k: int) -> list[Star]:
    """Like :func:`partition`, but covering every subset of ``[k]`` including the empty one.

    ``sizes`` must sum to ``2**k``.
    """
    if k < 0:
        raise CompositionError(f"k must be nonnegative, got {k}")
    _check_sizes(sizes, k, 1 << k)
    blocks = _expand(list(sizes), k, base_k=0)
    if not is_forest_partition(blocks, k, include_empty=True):
        raise ConstructionError(f"partition for k={k}, sizes={list(sizes)} is invalid")
    return blocks
