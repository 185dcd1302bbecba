"""Integer partitions of ``d``: cycle types and ramification profiles.

A partition is stored as a descending tuple of parts together with the
number it partitions. Text forms accepted by :func:`parse_partition` are
``"2,1"`` and the multiplicity form ``"1^1 2^1"``.
"""

from __future__ import annotations

import math
import re
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence


class PartitionError(ValueError):
    """Raised for malformed partitions or profiles."""


@dataclass(frozen=True, order=False)
class Partition:
    """A partition of ``d``; ``parts`` is sorted in descending order."""

    d: int
    parts: tuple[int, ...]

    def __post_init__(self):
        if self.d < 1:
            raise PartitionError(f"d must be positive, got {self.d}")
        if any(p < 1 for p in self.parts):
            raise PartitionError(f"non-positive part in {self.parts}")
        if sum(self.parts) != self.d:
            raise PartitionError(f"parts {self.parts} do not sum to {self.d}")
        if list(self.parts) != sorted(self.parts, reverse=True):
            object.__setattr__(self, "parts", tuple(sorted(self.parts, reverse=True)))

    @classmethod
    def of(cls, parts: Iterable[int]) -> "Partition":
        parts = tuple(parts)
        return cls(sum(parts), parts)

    @classmethod
    def identity(cls, d: int) -> "Partition":
        """The cycle type ``(1^d)`` of the identity permutation."""
        return cls(d, (1,) * d)

    @property
    def multiplicities(self) -> dict[int, int]:
        """Map part size ``i`` to its count ``n_i``; zero counts are absent."""
        return dict(sorted(Counter(self.parts).items()))

    def is_identity(self) -> bool:
        return self.parts == (1,) * self.d

    def sort_key(self):
        # reverse-lexicographic: (d) first, (1^d) last
        return tuple(-p for p in self.parts)

    def __lt__(self, other: "Partition") -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return (self.d, self.sort_key()) < (other.d, other.sort_key())

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))

    def __repr__(self) -> str:
        return f"Partition({self})"


_MULT_TOKEN = re.compile(r"^(\d+)\^(\d+)$")


def parse_partition(text: str, d: int) -> Partition:
    """Parse ``"2,1"`` or ``"1^1 2^1"`` as a partition of ``d``.

    >>> parse_partition("2,1", 3)
    Partition(2,1)
    >>> parse_partition("1^3", 3)
    Partition(1,1,1)
    """
    text = text.strip()
    if not text:
        raise PartitionError("empty partition text")
    parts: list[int] = []
    if "^" in text:
        for token in text.split():
            m = _MULT_TOKEN.match(token)
            if m is None:
                raise PartitionError(f"malformed multiplicity token {token!r}")
            size, count = int(m.group(1)), int(m.group(2))
            if size < 1:
                raise PartitionError(f"non-positive part {size}")
            parts.extend([size] * count)
    else:
        for token in text.split(","):
            token = token.strip()
            try:
                value = int(token)
            except ValueError:
                raise PartitionError(f"malformed part {token!r} in {text!r}") from None
            if value < 1:
                raise PartitionError(f"non-positive part {value}")
            parts.append(value)
    if sum(parts) != d:
        raise PartitionError(f"{text!r} sums to {sum(parts)}, expected {d}")
    return Partition(d, tuple(parts))


@lru_cache(maxsize=None)
def all_partitions(d: int) -> tuple[Partition, ...]:
    """All partitions of ``d`` in reverse-lexicographic order."""
    if d < 1:
        raise PartitionError(f"d must be positive, got {d}")

    def descend(remaining: int, largest: int):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in descend(remaining - first, first):
                yield (first,) + rest

    return tuple(Partition(d, parts) for parts in descend(d, d))


@lru_cache(maxsize=None)
def class_size(sigma: Partition) -> int:
    """Size of the conjugacy class of cycle type ``sigma`` in ``S_d``."""
    denom = 1
    for i, n_i in sigma.multiplicities.items():
        denom *= i**n_i * math.factorial(n_i)
    return math.factorial(sigma.d) // denom


def ell(sigma: Partition) -> int:
    """Number of parts."""
    return len(sigma.parts)


def r(sigma: Partition) -> int:
    """Ramification order ``d - ell(sigma)``."""
    return sigma.d - ell(sigma)


@dataclass(frozen=True)
class RamificationProfile:
    """An ordered list of ``n >= 3`` partitions of the same ``d``."""

    d: int
    parts: tuple[Partition, ...]

    def __post_init__(self):
        if len(self.parts) < 3:
            raise PartitionError(f"a profile needs at least 3 partitions, got {len(self.parts)}")
        for sigma in self.parts:
            if sigma.d != self.d:
                raise PartitionError(f"{sigma} is not a partition of {self.d}")

    @classmethod
    def of(cls, parts: Sequence[Partition]) -> "RamificationProfile":
        parts = tuple(parts)
        if not parts:
            raise PartitionError("empty profile")
        return cls(parts[0].d, parts)

    @property
    def n(self) -> int:
        return len(self.parts)

    def __getitem__(self, i: int) -> Partition:
        return self.parts[i]

    def __iter__(self):
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return ";".join(str(p) for p in self.parts)


def parse_profile(text: str, d: int) -> RamificationProfile:
    """Parse ``"2,1;2,1;3"`` (partitions separated by ``;``)."""
    chunks = [c for c in text.split(";")]
    if any(not c.strip() for c in chunks):
        raise PartitionError(f"empty partition in profile {text!r}")
    return RamificationProfile(d, tuple(parse_partition(c, d) for c in chunks))


def genus_from_profile(profile: RamificationProfile) -> Fraction:
    """Riemann-Hurwitz genus of a cover of the line with this ramification.

    Returned as a rational: profiles that are not realised by a connected
    smooth cover can give negative or half-integral values.
    """
    total = sum(r(sigma) for sigma in profile)
    return 1 - profile.d + Fraction(total, 2)
