"""Subsets of ``[k] = {1, ..., k}`` stored as bit masks, and the star predicates."""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

MAX_K = 62


class MalformedInputError(ValueError):
    """Labels in one collection disagree about the ground size ``k``."""


class Label:
    """An immutable subset of ``{1, ..., k}``.

    Element ``i`` is stored as bit ``i - 1`` of ``bits``. Comparison operators
    follow ``frozenset``: ``a <= b`` is inclusion and ``a < b`` proper
    inclusion. Sort with ``key=Label.sort_key`` for the encoding order.
    """

    __slots__ = ("bits", "k")

    def __init__(self, bits: int, k: int) -> None:
        if not 0 <= k <= MAX_K:
            raise ValueError(f"ground size must be in 0..{MAX_K}, got {k}")
        if bits < 0 or bits >> k:
            raise ValueError(f"bits {bits:#x} out of range for k={k}")
        self.bits = bits
        self.k = k

    @classmethod
    def of(cls, elements: Iterable[int], k: int) -> Label:
        bits = 0
        for e in elements:
            if not 1 <= e <= k:
                raise ValueError(f"element {e} not in 1..{k}")
            bits |= 1 << (e - 1)
        return cls(bits, k)

    @classmethod
    def singleton(cls, element: int, k: int) -> Label:
        return cls.of((element,), k)

    @classmethod
    def empty(cls, k: int) -> Label:
        return cls(0, k)

    @classmethod
    def parse(cls, text: str, k: int) -> Label:
        """Read the ``{1,3}`` textual form."""
        text = text.strip()
        if not (text.startswith("{") and text.endswith("}")):
            raise ValueError(f"label must be written in braces: {text!r}")
        body = text[1:-1].strip()
        if not body:
            return cls(0, k)
        try:
            elements = [int(part) for part in body.split(",")]
        except ValueError:
            raise ValueError(f"bad label element in {text!r}") from None
        return cls.of(elements, k)

    def __iter__(self) -> Iterator[int]:
        bits = self.bits
        while bits:
            low = bits & -bits
            yield low.bit_length()
            bits ^= low

    def __len__(self) -> int:
        return bin(self.bits).count("1")

    def __bool__(self) -> bool:
        return self.bits != 0

    def __contains__(self, element: object) -> bool:
        return isinstance(element, int) and 1 <= element <= self.k and bool(self.bits >> (element - 1) & 1)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Label):
            return NotImplemented
        return self.bits == other.bits and self.k == other.k

    def __hash__(self) -> int:
        return hash((self.bits, self.k))

    def _check(self, other: Label) -> None:
        if self.k != other.k:
            raise MalformedInputError(f"ground sizes differ: {self.k} vs {other.k}")

    def __or__(self, other: Label) -> Label:
        self._check(other)
        return Label(self.bits | other.bits, self.k)

    def __and__(self, other: Label) -> Label:
        self._check(other)
        return Label(self.bits & other.bits, self.k)

    def __le__(self, other: Label) -> bool:
        self._check(other)
        return self.bits & ~other.bits == 0

    def __lt__(self, other: Label) -> bool:
        return self <= other and self.bits != other.bits

    def __ge__(self, other: Label) -> bool:
        return other <= self

    def __gt__(self, other: Label) -> bool:
        return other < self

    def sort_key(self) -> int:
        return self.bits

    def lift(self, k: int) -> Label:
        """The same set viewed inside a larger ground set."""
        if k < self.k:
            raise ValueError(f"cannot lift k={self.k} label down to k={k}")
        return Label(self.bits, k)

    def with_element(self, element: int) -> Label:
        """``self | {element}`` over ground size ``max(k, element)``."""
        k = max(self.k, element)
        return Label(self.bits | 1 << (element - 1), k)

    def __str__(self) -> str:
        return "{" + ",".join(str(e) for e in self) + "}"

    def __repr__(self) -> str:
        return f"Label({self}, k={self.k})"


def format_labels(labels: Iterable[Label]) -> str:
    return " ".join(str(label) for label in labels)


def all_labels(k: int, include_empty: bool = False) -> list[Label]:
    """Every subset of ``[k]`` in encoding order."""
    start = 0 if include_empty else 1
    return [Label(bits, k) for bits in range(start, 1 << k)]


def _ground_size(labels: Sequence[Label]) -> int | None:
    sizes = {label.k for label in labels}
    if len(sizes) > 1:
        raise MalformedInputError(f"mixed ground sizes {sorted(sizes)}")
    return sizes.pop() if sizes else None


def is_m_star(seq: Sequence[Label]) -> bool:
    """Whether ``seq`` is an m-star, ``m = len(seq)``.

    Containments that would name an index beyond ``m`` are skipped. The empty
    sequence and any single set are stars.
    """
    _ground_size(seq)
    m = len(seq)
    if len({label.bits for label in seq}) != m:
        return False
    if m <= 1:
        return True
    if m == 2:
        return seq[1] < seq[0]
    if m == 3:
        return seq[0] == seq[1] | seq[2]
    top = seq[0]
    if top != seq[1] | seq[3]:
        return False
    # 0-based: position 2i-1 is A_{2i}, position 2i is A_{2i+1}
    for even in range(1, m, 2):
        if not seq[even] < top:
            return False
        if even + 1 < m and not seq[even + 1] < seq[even]:
            return False
    return True


def is_forest_partition(blocks: Sequence[Sequence[Label]], k: int, include_empty: bool = False) -> bool:
    """Whether ``blocks`` are stars partitioning the subsets of ``[k]``.

    The target family is every nonempty subset, or every subset when
    ``include_empty`` is set.
    """
    seen: set[int] = set()
    total = 0
    for block in blocks:
        if any(label.k != k for label in block):
            return False
        if not is_m_star(block):
            return False
        seen.update(label.bits for label in block)
        total += len(block)
    expected = (1 << k) - (0 if include_empty else 1)
    if total != expected or len(seen) != expected:
        return False
    return include_empty or 0 not in seen
