"""Integer partitions and their Young diagrams: conjugation, containment,
hook membership, and brute-force enumeration.

The counting series here are computed by enumerating and filtering actual
partitions, so they serve as independent oracles for the closed formulas
in :mod:`hookcomb.hilbert`.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from functools import lru_cache

from .qseries import DEFAULT_ORDER, TruncSeries


class Partition:
    """A weakly decreasing tuple of positive integers; () is the partition of 0."""

    __slots__ = ("parts",)

    def __init__(self, parts: Iterable[int] = ()):
        ps = tuple(int(p) for p in parts)
        for i, p in enumerate(ps):
            if p < 1:
                raise ValueError(f"parts must be positive, got {p}")
            if i and ps[i - 1] < p:
                raise ValueError(f"parts must be weakly decreasing, got {ps}")
        self.parts = ps

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def conjugate(self) -> "Partition":
        """Transpose the Young diagram (rows become columns)."""
        if not self.parts:
            return Partition()
        cols = [0] * self.parts[0]
        for p in self.parts:
            for j in range(p):
                cols[j] += 1
        return Partition(cols)

    def contains(self, other: "Partition") -> bool:
        """True iff other's diagram fits inside this one, row by row."""
        if len(other.parts) > len(self.parts):
            return False
        return all(o <= s for s, o in zip(self.parts, other.parts))

    def in_hook(self, k: int, l: int) -> bool:
        """True iff every part beyond the k-th row is at most l."""
        if k < 0 or l < 0:
            raise ValueError("hook parameters must be non-negative")
        return _fits_hook(self.parts, k, l)

    def to_json(self) -> list:
        return list(self.parts)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return f"Partition({self.parts!r})"

    def __str__(self):
        return "[" + ",".join(str(p) for p in self.parts) + "]"


class SkewShape:
    """A pair of nested partitions outer/inner."""

    __slots__ = ("outer", "inner")

    def __init__(self, outer: Partition, inner: Partition | None = None):
        inner = inner if inner is not None else Partition()
        if not outer.contains(inner):
            raise ValueError(f"inner {inner} does not fit inside outer {outer}")
        self.outer = outer
        self.inner = inner

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    def cells(self) -> list[tuple[int, int]]:
        """Skew cells as (row, col) pairs, row-major, 0-indexed."""
        inner = self.inner.parts + (0,) * (len(self.outer) - len(self.inner))
        return [
            (r, c)
            for r, row_len in enumerate(self.outer.parts)
            for c in range(inner[r], row_len)
        ]

    def conjugate(self) -> "SkewShape":
        return SkewShape(self.outer.conjugate(), self.inner.conjugate())

    def __eq__(self, other) -> bool:
        if not isinstance(other, SkewShape):
            return NotImplemented
        return self.outer == other.outer and self.inner == other.inner

    def __hash__(self):
        return hash((self.outer, self.inner))

    def __repr__(self):
        return f"SkewShape({self.outer!r}, {self.inner!r})"

    def __str__(self):
        return f"{self.outer}/{self.inner}"


def _fits_hook(parts: tuple[int, ...], k: int, l: int) -> bool:
    # Parts are weakly decreasing, so parts[k] bounds every later part.
    return len(parts) <= k or parts[k] <= l


def _gen_parts(n: int, cap: int) -> Iterator[tuple[int, ...]]:
    # Reverse-lexicographic: largest first part first, (1,...,1) last.
    if n == 0:
        yield ()
        return
    for first in range(min(n, cap), 0, -1):
        for rest in _gen_parts(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _partitions_of(n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(_gen_parts(n, n))


def enumerate_partitions(n: int) -> Iterator[Partition]:
    """All partitions of n, reverse-lexicographically: (n) first, (1^n) last."""
    if n < 0:
        raise ValueError("n must be non-negative")
    for parts in _partitions_of(n):
        yield Partition(parts)


def enumerate_hook(n: int, k: int, l: int) -> Iterator[Partition]:
    """The partitions of n fitting in the (k,l)-hook, in enumeration order."""
    if n < 0 or k < 0 or l < 0:
        raise ValueError("arguments must be non-negative")
    for parts in _partitions_of(n):
        if _fits_hook(parts, k, l):
            yield Partition(parts)


def hook_count_series(k: int, l: int, order: int = DEFAULT_ORDER) -> TruncSeries:
    """Series whose t^n coefficient counts partitions of n in the (k,l)-hook.

    Computed by filtering a full enumeration; this is the brute-force side
    that the closed-form Hilbert series is checked against.
    """
    if k < 0 or l < 0:
        raise ValueError("hook parameters must be non-negative")
    counts = [
        sum(1 for parts in _partitions_of(n) if _fits_hook(parts, k, l))
        for n in range(order + 1)
    ]
    return TruncSeries(order, counts)


def count_bounded_rows_series(k: int, order: int = DEFAULT_ORDER) -> TruncSeries:
    """Series counting partitions of n with at most k parts, by enumeration."""
    if k < 0:
        raise ValueError("k must be non-negative")
    counts = [
        sum(1 for parts in _partitions_of(n) if len(parts) <= k)
        for n in range(order + 1)
    ]
    return TruncSeries(order, counts)


def count_boxed_series(k: int, l: int, order: int = DEFAULT_ORDER) -> TruncSeries:
    """Series counting partitions of n with at most k parts, each at most l."""
    if k < 0 or l < 0:
        raise ValueError("box dimensions must be non-negative")
    counts = [
        sum(
            1
            for parts in _partitions_of(n)
            if len(parts) <= k and (not parts or parts[0] <= l)
        )
        for n in range(order + 1)
    ]
    return TruncSeries(order, counts)
