"""Subsets of ``[m]`` as bitmasks, and the :class:`Splitting` record.

Bit ``i`` of a mask stands for point ``i + 1``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import ShapeError


def mask_of(labels: Iterable[int] | int) -> int:
    """Bitmask of a set of 1-based labels. An int is taken to be a mask already."""
    if isinstance(labels, int):
        return labels
    mask = 0
    for i in labels:
        if i < 1:
            raise ShapeError(f"point labels start at 1, got {i}")
        mask |= 1 << (i - 1)
    return mask


def labels_of(mask: int) -> frozenset[int]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return frozenset(out)


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def full_mask(m: int) -> int:
    return (1 << m) - 1


def submasks(mask: int):
    """All submasks of ``mask``, including 0 and ``mask`` itself."""
    s = mask
    while True:
        yield s
        if s == 0:
            return
        s = (s - 1) & mask


def fmt_set(labels: Iterable[int]) -> str:
    return "{" + ",".join(str(i) for i in sorted(labels)) + "}"


@dataclass(frozen=True)
class Splitting:
    """A partition of ``[m]`` with a rank attached to each block.

    Blocks are kept sorted by their smallest label, so equal splittings
    compare equal regardless of the order they were given in.
    """

    m: int
    blocks: tuple[tuple[frozenset[int], int], ...]

    def __post_init__(self):
        blocks = []
        seen = set()
        for labels, r in self.blocks:
            labels = frozenset(labels)
            if not labels:
                raise ShapeError("splitting blocks must be nonempty")
            if seen & labels:
                raise ShapeError("splitting blocks overlap", overlap=sorted(seen & labels))
            if int(r) < 1:
                raise ShapeError("block ranks must be positive", block=sorted(labels), rank=r)
            seen |= labels
            blocks.append((labels, int(r)))
        if seen != set(range(1, self.m + 1)):
            raise ShapeError(f"splitting blocks do not cover 1..{self.m}", covered=sorted(seen))
        blocks.sort(key=lambda b: min(b[0]))
        object.__setattr__(self, "blocks", tuple(blocks))

    @classmethod
    def of(cls, *pairs, m: int | None = None) -> "Splitting":
        """``Splitting.of(({1}, 1), ({2, 3, 4, 5}, 2))``."""
        if m is None:
            m = max(max(b) for b, _ in pairs)
        return cls(m, tuple((frozenset(b), r) for b, r in pairs))

    @property
    def masks(self) -> list[tuple[int, int]]:
        return [(mask_of(b), r) for b, r in self.blocks]

    @property
    def total_rank(self) -> int:
        return sum(r for _, r in self.blocks)

    def splitting_type(self) -> tuple[tuple[int, int], ...]:
        """Multiset of (block size, block rank), sorted."""
        return tuple(sorted((len(b), r) for b, r in self.blocks))

    def type_str(self) -> str:
        return "{" + ",".join(f"{s}^{r}" for s, r in self.splitting_type()) + "}"

    def to_json(self) -> list[dict]:
        return [{"block": sorted(b), "rank": r} for b, r in self.blocks]

    @classmethod
    def from_json(cls, data: list[dict], m: int | None = None) -> "Splitting":
        pairs = [(frozenset(int(i) for i in d["block"]), int(d["rank"])) for d in data]
        return cls.of(*pairs, m=m)

    def __str__(self):
        return "{" + ",".join(f"{fmt_set(b)}^{r}" for b, r in self.blocks) + "}"
