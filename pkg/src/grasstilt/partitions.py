"""Integer partitions: canonical form, conjugation, orderings, box enumeration."""

from __future__ import annotations

from typing import Iterable, Iterator, NamedTuple


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Constructing from any iterable of non-negative integers strips trailing
    zeros, so ``Partition([2, 1, 0]) == Partition([2, 1])``.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        for i, p in enumerate(parts):
            if p < 0:
                raise ValueError(f"negative part {p} in {parts}")
            if p == 0:
                raise ValueError(f"interior zero in {parts}")
            if i and parts[i - 1] < p:
                raise ValueError(f"parts not weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def length(self) -> int:
        return len(self)

    @property
    def size(self) -> int:
        return sum(self)

    def padded(self, n: int) -> tuple[int, ...]:
        """Return the parts as a length-``n`` tuple, zero padded."""
        if len(self) > n:
            raise ValueError(f"{list(self)} has more than {n} parts")
        return tuple(self) + (0,) * (n - len(self))

    def __repr__(self) -> str:
        return f"Partition({list(self)})"

    def to_json(self) -> list[int]:
        return list(self)

    @classmethod
    def from_json(cls, data) -> "Partition":
        return cls(data)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse a comma-separated literal such as ``"3,1"`` (empty string is ``()``)."""
        text = text.strip().strip("()[]")
        if not text:
            return cls()
        try:
            return cls(int(tok) for tok in text.split(","))
        except ValueError as exc:
            raise ValueError(f"malformed partition literal {text!r}: {exc}") from None


EMPTY = Partition()


class PartitionBox(NamedTuple):
    """Partitions with at most ``rows`` parts, each at most ``cols``."""

    rows: int
    cols: int

    def __contains__(self, a) -> bool:
        a = Partition(a)
        return not a or (len(a) <= self.rows and a[0] <= self.cols)


def conjugate(a: Partition) -> Partition:
    """Transpose of the Young diagram."""
    if not a:
        return EMPTY
    return Partition(sum(1 for p in a if p > j) for j in range(a[0]))


def lex_compare(a: Partition, b: Partition) -> int:
    """Lexicographic comparison, largest part first, shorter side zero padded.

    Returns -1, 0 or 1.
    """
    n = max(len(a), len(b))
    pa, pb = Partition(a).padded(n), Partition(b).padded(n)
    for x, y in zip(pa, pb):
        if x != y:
            return 1 if x > y else -1
    return 0


class IncomparableSizes(ValueError):
    """Dominance is only defined between partitions of equal size."""


def dominance_compare(a: Partition, b: Partition) -> int | None:
    """Dominance order on partitions of equal size.

    Returns 1 if ``a`` strictly dominates ``b``, -1 for the reverse, 0 when
    equal and ``None`` when they are incomparable.
    """
    a, b = Partition(a), Partition(b)
    if a.size != b.size:
        raise IncomparableSizes(f"sizes differ: {a.size} != {b.size}")
    if a == b:
        return 0
    n = max(len(a), len(b))
    sa = sb = 0
    ge = le = True
    for x, y in zip(a.padded(n), b.padded(n)):
        sa += x
        sb += y
        ge &= sa >= sb
        le &= sa <= sb
    if ge:
        return 1
    if le:
        return -1
    return None


def _box_desc(rows: int, cols: int) -> Iterator[tuple[int, ...]]:
    if rows == 0 or cols == 0:
        yield ()
        return
    for first in range(cols, 0, -1):
        for rest in _box_desc(rows - 1, first):
            yield (first,) + rest
    yield ()


def enumerate_box(box: PartitionBox | tuple[int, int]) -> list[Partition]:
    """All partitions in the box, lexicographically descending.

    The count is ``binomial(rows + cols, rows)``.
    """
    rows, cols = box
    if rows < 0 or cols < 0:
        raise ValueError(f"box dimensions must be non-negative, got {box}")
    return [Partition(p) for p in _box_desc(rows, cols)]


def _parts_desc(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _parts_desc(n - first, first):
            yield (first,) + rest


def partitions_of(n: int) -> list[Partition]:
    """All partitions of ``n``, lexicographically descending."""
    return [Partition(p) for p in _parts_desc(n, n)]


def partitions_up_to(n: int) -> list[Partition]:
    """All partitions of size at most ``n``, by size then lex descending."""
    return [p for k in range(n + 1) for p in partitions_of(k)]


def contains(outer: Partition, inner: Partition) -> bool:
    """Whether the Young diagram of ``inner`` sits inside ``outer``."""
    if len(inner) > len(outer):
        return False
    return all(x >= y for x, y in zip(outer, inner))
