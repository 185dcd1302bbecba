"""Permutations of ``{1..d}`` and conjugacy-class buckets of ``S_d``.

Permutations are stored 0-based in one-line notation. Composition follows
function composition: ``(g * h)(i) = g(h(i))``.
"""

from __future__ import annotations

import itertools
import threading
from dataclasses import dataclass
from typing import Iterable, Sequence

from .partitions import Partition, all_partitions


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError(f"{self.images} is not a permutation of 0..{len(self.images) - 1}")

    @property
    def d(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, d: int) -> "Permutation":
        return cls(tuple(range(d)))

    @classmethod
    def from_cycles(cls, d: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        """Build from 1-based disjoint cycles, e.g. ``from_cycles(3, [(1, 2)])``."""
        images = list(range(d))
        for cycle in cycles:
            for a, b in zip(cycle, tuple(cycle[1:]) + (cycle[0],)):
                images[a - 1] = b - 1
        return cls(tuple(images))

    def __mul__(self, other: "Permutation") -> "Permutation":
        return Permutation(compose(self.images, other.images))

    def inverse(self) -> "Permutation":
        return Permutation(inverse(self.images))

    def cycle_type(self) -> Partition:
        return cycle_type(self.images)


def compose(g: tuple[int, ...], h: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(g[i] for i in h)


def inverse(g: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(g)
    for i, gi in enumerate(g):
        inv[gi] = i
    return tuple(inv)


def cycle_lengths(g: Sequence[int]) -> tuple[int, ...]:
    seen = [False] * len(g)
    lengths = []
    for start in range(len(g)):
        if seen[start]:
            continue
        length = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = g[i]
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def cycle_type(g: Sequence[int] | Permutation) -> Partition:
    """Cycle type of ``g`` as a partition of ``d``."""
    if isinstance(g, Permutation):
        g = g.images
    return Partition(len(g), cycle_lengths(g))


_buckets: dict[int, dict[Partition, tuple[tuple[int, ...], ...]]] = {}
_buckets_lock = threading.Lock()


def class_buckets(d: int) -> dict[Partition, tuple[tuple[int, ...], ...]]:
    """All permutations of ``S_d`` bucketed by cycle type (cached per ``d``)."""
    cached = _buckets.get(d)
    if cached is not None:
        return cached
    buckets: dict[Partition, list[tuple[int, ...]]] = {p: [] for p in all_partitions(d)}
    for g in itertools.permutations(range(d)):
        buckets[cycle_type(g)].append(g)
    frozen = {p: tuple(v) for p, v in buckets.items()}
    with _buckets_lock:
        return _buckets.setdefault(d, frozen)


def conjugacy_class(sigma: Partition) -> tuple[tuple[int, ...], ...]:
    return class_buckets(sigma.d)[sigma]
