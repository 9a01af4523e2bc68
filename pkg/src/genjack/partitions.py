"""Partitions, r-tuples of partitions and their boxes.

Partitions are plain tuples of positive integers in weakly decreasing order and
multipartitions are tuples of partitions.  Both are hashable and compare with
the usual tuple ordering, which is also the display order used everywhere.
"""
import re
from collections import Counter
from math import factorial
from typing import Iterable, Iterator, NamedTuple, Sequence

Partition = tuple[int, ...]
MultiPartition = tuple[Partition, ...]


class Box(NamedTuple):
    component: int  # 0-based color index
    x: int  # column, t1 direction
    y: int  # row, t2 direction

    @property
    def content(self) -> int:
        return self.x - self.y


def partition(parts: Iterable[int]) -> Partition:
    """Validate ``parts`` and return it as a partition tuple."""
    p = tuple(int(v) for v in parts)
    if any(v <= 0 for v in p):
        raise ValueError(f"parts must be positive: {p}")
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"parts must be weakly decreasing: {p}")
    return p


def multipartition(components: Iterable[Iterable[int]]) -> MultiPartition:
    mp = tuple(partition(c) for c in components)
    if not mp:
        raise ValueError("a multipartition needs rank >= 1")
    return mp


def size(lam: Sequence) -> int:
    """|lam| for a partition, or the total number of boxes of a multipartition."""
    if lam and isinstance(lam[0], tuple):
        return sum(sum(c) for c in lam)
    return sum(lam)


def transpose(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for part in lam if part > i) for i in range(lam[0]))


def transpose_all(mp: MultiPartition) -> MultiPartition:
    return tuple(transpose(c) for c in mp)


def reverse(mp: MultiPartition) -> MultiPartition:
    return tuple(reversed(mp))


def length(mp: MultiPartition) -> int:
    """Total number of parts."""
    return sum(len(c) for c in mp)


def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of n in reverse lexicographic order ([n] first)."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for k in range(min(n, max_part), 0, -1):
        for rest in partitions(n - k, k):
            yield (k,) + rest


def multipartitions(n: int, r: int) -> list[MultiPartition]:
    """All r-tuples of partitions with n boxes in total, in canonical order."""
    if r < 1:
        raise ValueError("rank must be >= 1")

    def rec(n: int, r: int) -> Iterator[MultiPartition]:
        if r == 1:
            for p in partitions(n):
                yield (p,)
            return
        for k in range(n + 1):
            for p in partitions(k):
                for rest in rec(n - k, r - 1):
                    yield (p,) + rest

    return sorted(rec(n, r))


def sort_key(mp: MultiPartition):
    """Canonical order: total size first, then tuple order on the components."""
    return (size(mp), mp)


# ---------------------------------------------------------------- boxes

def boxes(mp: MultiPartition) -> list[Box]:
    """Boxes of ``mp`` in canonical order.

    Components come in order; inside a component boxes are sorted by content,
    largest first, and boxes of equal content by ascending row.  Along this
    sequence the restricted weight u_k + (x - y) t1 decreases weakly on the
    chamber where u_1 >> u_2 >> ... >> t1 > 0.
    """
    out = []
    for k, lam in enumerate(mp):
        cells = [(x, y) for y, row in enumerate(lam) for x in range(row)]
        cells.sort(key=lambda c: (c[1] - c[0], c[1]))
        out.extend(Box(k, x, y) for x, y in cells)
    return out


def contains(lam: Partition, x: int, y: int) -> bool:
    return 0 <= y < len(lam) and 0 <= x < lam[y]


def arm(lam: Partition, box) -> int:
    """lam_{y+1} - x - 1, rows beyond the partition count as 0; may be negative."""
    x, y = box[-2], box[-1]
    row = lam[y] if y < len(lam) else 0
    return row - x - 1


def leg(lam: Partition, box) -> int:
    x, y = box[-2], box[-1]
    col = sum(1 for part in lam if part > x)
    return col - y - 1


def hook(lam: Partition, box) -> tuple[int, int]:
    """(arm + 1, leg) of a box inside ``lam``.

    The integer hook length is the sum of the pair; the equivariant hook is
    (arm + 1) t1 - leg t2.
    """
    x, y = box[-2], box[-1]
    if not contains(lam, x, y):
        raise ValueError(f"box {(x, y)} lies outside {lam}")
    return arm(lam, box) + 1, leg(lam, box)


def heights(mp: MultiPartition) -> dict[tuple[int, int], int]:
    """Number of boxes per restricted weight, keyed by (component, content)."""
    return dict(Counter((b.component, b.content) for b in boxes(mp)))


def sym_factor(mp: MultiPartition) -> int:
    out = 1
    for h in heights(mp).values():
        out *= factorial(h)
    return out


# ---------------------------------------------------------------- text syntax

_COMPONENT = re.compile(r"\[([^\[\]]*)\]")


def parse(text: str) -> MultiPartition:
    """Parse ``"[4,2,1],[],[1]"`` into a multipartition."""
    text = text.strip()
    comps = _COMPONENT.findall(text)
    rest = _COMPONENT.sub("", text).replace(",", "").strip()
    if not comps or rest:
        raise ValueError(f"cannot parse multipartition: {text!r}")
    out = []
    for c in comps:
        c = c.strip()
        out.append([int(v) for v in c.split(",")] if c else [])
    return multipartition(out)


def format_partition(lam: Partition) -> str:
    return "[" + ",".join(str(v) for v in lam) + "]"


def format_mp(mp: MultiPartition) -> str:
    return ",".join(format_partition(c) for c in mp)
