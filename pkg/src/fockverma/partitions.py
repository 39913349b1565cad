"""Integer partitions indexing the PBW basis of the Fock module.

A partition is stored canonically as non-increasing parts. In sectored mode
every part carries a 1-based sector tag and ties in part value are ordered by
non-decreasing sector.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Iterator, Optional

EMPTY_SYMBOL = "∅"


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...] = ()
    sectors: Optional[tuple[int, ...]] = None

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"partition parts must be positive, got {parts}")
        if self.sectors is None:
            object.__setattr__(self, "parts", tuple(sorted(parts, reverse=True)))
            return
        sectors = tuple(int(s) for s in self.sectors)
        if len(sectors) != len(parts):
            raise ValueError("parts and sectors must have the same length")
        if any(s < 1 for s in sectors):
            raise ValueError(f"sector indices are 1-based, got {sectors}")
        pairs = sorted(zip(parts, sectors), key=lambda ps: (-ps[0], ps[1]))
        object.__setattr__(self, "parts", tuple(p for p, _ in pairs))
        object.__setattr__(self, "sectors", tuple(s for _, s in pairs))

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> "Partition":
        pairs = list(pairs)
        return cls(tuple(p for p, _ in pairs), tuple(s for _, s in pairs))

    @property
    def sectored(self) -> bool:
        return self.sectors is not None

    @property
    def level(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def pairs(self) -> tuple[tuple[int, int], ...]:
        """(part, sector) pairs; sector is 1 in single-sector mode."""
        if self.sectors is None:
            return tuple((p, 1) for p in self.parts)
        return tuple(zip(self.parts, self.sectors))

    def add_part(self, part: int, sector: int = 1) -> "Partition":
        if self.sectors is None:
            if sector != 1:
                raise ValueError("single-sector partition cannot take a part in sector "
                                 f"{sector}")
            return Partition(self.parts + (part,))
        return Partition(self.parts + (part,), self.sectors + (sector,))

    def remove_index(self, index: int) -> "Partition":
        parts = self.parts[:index] + self.parts[index + 1:]
        if self.sectors is None:
            return Partition(parts)
        return Partition(parts, self.sectors[:index] + self.sectors[index + 1:])

    def multiplicities(self) -> Counter:
        return Counter(self.pairs() if self.sectored else self.parts)

    def sort_key(self) -> tuple:
        # graded, then reverse-lexicographic on parts, then sector-lex
        return (self.level, tuple(-p for p in self.parts), self.sectors or ())

    def __lt__(self, other: "Partition") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        return format_partition(self)


def format_partition(lam: Partition, ascii_empty: bool = False) -> str:
    """Render as ``3+1`` (or ``2#1+1#2`` in sectored mode); empty is ``∅``."""
    if not lam.parts:
        return "0" if ascii_empty else EMPTY_SYMBOL
    if lam.sectors is None:
        return "+".join(str(p) for p in lam.parts)
    return "+".join(f"{p}#{s}" for p, s in zip(lam.parts, lam.sectors))


def parse_partition(text: str, sectored: Optional[bool] = None) -> Partition:
    """Inverse of :func:`format_partition`. Parts may come in any order."""
    text = text.strip()
    if text in (EMPTY_SYMBOL, "0", ""):
        return Partition((), () if sectored else None)
    chunks = [c.strip() for c in text.split("+")]
    has_tags = any("#" in c for c in chunks)
    if has_tags and not all("#" in c for c in chunks):
        raise ValueError(f"mixed sector tags in partition {text!r}")
    if sectored is False and has_tags:
        raise ValueError(f"unexpected sector tags in {text!r}")
    if has_tags:
        pairs = []
        for c in chunks:
            p, s = c.split("#")
            pairs.append((int(p), int(s)))
        return Partition.from_pairs(pairs)
    parts = tuple(int(c) for c in chunks)
    if sectored:
        return Partition(parts, (1,) * len(parts))
    return Partition(parts)


def _integer_partitions(n: int, max_part: int) -> Iterator[tuple[int, ...]]:
    # reverse-lexicographic: largest first part first
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in _integer_partitions(n - first, first):
            yield (first,) + rest


def _sector_assignments(parts: tuple[int, ...], sectors: int) -> Iterator[tuple[int, ...]]:
    # non-decreasing sector tags within each run of equal parts, lex order
    if not parts:
        yield ()
        return
    run = 1
    while run < len(parts) and parts[run] == parts[0]:
        run += 1
    for head in _nondecreasing(run, 1, sectors):
        for tail in _sector_assignments(parts[run:], sectors):
            yield head + tail


def _nondecreasing(length: int, low: int, high: int) -> Iterator[tuple[int, ...]]:
    if length == 0:
        yield ()
        return
    for s in range(low, high + 1):
        for rest in _nondecreasing(length - 1, s, high):
            yield (s,) + rest


@lru_cache(maxsize=None)
def partitions_of(n: int, sectors: int = 1) -> tuple[Partition, ...]:
    """All canonical partitions of ``n`` over ``sectors`` colours, in basis order.

    With ``sectors == 1`` the partitions are unsectored and there are p(n) of them.
    """
    if n < 0:
        raise ValueError(f"level must be non-negative, got {n}")
    if sectors < 1:
        raise ValueError(f"sector count must be positive, got {sectors}")
    out = []
    for parts in _integer_partitions(n, n):
        if sectors == 1:
            out.append(Partition(parts))
        else:
            for tags in _sector_assignments(parts, sectors):
                out.append(Partition(parts, tags))
    return tuple(out)


@lru_cache(maxsize=None)
def partition_count(n: int) -> int:
    """p(n) via Euler's pentagonal recurrence."""
    if n < 0:
        raise ValueError(f"level must be non-negative, got {n}")
    if n == 0:
        return 1
    total = 0
    k = 1
    while True:
        g1 = k * (3 * k - 1) // 2
        if g1 > n:
            break
        sign = 1 if k % 2 else -1
        total += sign * partition_count(n - g1)
        g2 = k * (3 * k + 1) // 2
        if g2 <= n:
            total += sign * partition_count(n - g2)
        k += 1
    return total


def z_factor(lam: Partition) -> Fraction:
    """z_lambda = prod_i i**m_i * m_i! over part multiplicities m_i."""
    if lam.sectored:
        raise ValueError("z_factor is defined for single-sector partitions only")
    z = 1
    for part, mult in Counter(lam.parts).items():
        z *= part ** mult * factorial(mult)
    return Fraction(z)
