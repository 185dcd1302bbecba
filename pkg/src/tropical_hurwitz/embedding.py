"""Double-ratio coordinates on the moduli space of rational tropical curves.

For four distinct leaves the double ratio ``d_{(w,x),(y,z)}`` is the signed
length of the overlap of the leaf paths ``w -> x`` and ``y -> z``: positive
when both paths run through the overlap in the same direction. One ratio
per class of equivalent quadruples gives the embedding into ``R^N`` with
``N = 3 * C(n, 4)``.

Each class is represented by ``((w, x), (y, z))`` with ``w < x``, ``y < z``
and ``w < y``; coordinates are ordered lexicographically in that form.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence

from .trees import Edge, LeafBipartition, LeafLabeledTree, TreeError


@dataclass(frozen=True)
class QuadrupleSplit:
    w: int
    x: int
    y: int
    z: int

    def __post_init__(self):
        if len({self.w, self.x, self.y, self.z}) != 4:
            raise ValueError(f"double ratio needs four distinct leaves, got {self.pairs}")

    @property
    def pairs(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return (self.w, self.x), (self.y, self.z)

    def is_canonical(self) -> bool:
        return self.w < self.x and self.y < self.z and self.w < self.y

    def canonical(self) -> tuple["QuadrupleSplit", int]:
        """Canonical representative and the sign relating the two ratios."""
        sign = 1
        w, x, y, z = self.w, self.x, self.y, self.z
        if w > x:
            w, x, sign = x, w, -sign
        if y > z:
            y, z, sign = z, y, -sign
        if y < w:
            w, x, y, z = y, z, w, x
        return QuadrupleSplit(w, x, y, z), sign

    def __str__(self) -> str:
        return f"(({self.w},{self.x}),({self.y},{self.z}))"


@lru_cache(maxsize=None)
def canonical_quadruples(n: int) -> tuple[QuadrupleSplit, ...]:
    out = []
    for a, b, c, d in itertools.combinations(range(1, n + 1), 4):
        out.extend(
            [QuadrupleSplit(a, b, c, d), QuadrupleSplit(a, c, b, d), QuadrupleSplit(a, d, b, c)]
        )
    return tuple(sorted(out, key=lambda q: (q.w, q.x, q.y, q.z)))


@dataclass(frozen=True)
class MetricPoint:
    """A trivalent tree with a nonnegative rational length on every bounded edge.

    Zero lengths stand for contracted edges; the tree keeps them so paths
    stay defined on the closed cone.
    """

    tree: LeafLabeledTree
    lengths: tuple[tuple[LeafBipartition, Fraction], ...]

    def __post_init__(self):
        lengths = dict(self.lengths)
        if set(lengths) != set(self.tree.canonical_key):
            raise TreeError("every bounded edge needs exactly one length")
        for s, value in lengths.items():
            if Fraction(value) < 0:
                raise ValueError(f"negative length {value} on {s}")
        ordered = tuple((s, Fraction(lengths[s])) for s in self.tree.canonical_key)
        object.__setattr__(self, "lengths", ordered)

    @classmethod
    def from_mapping(cls, tree: LeafLabeledTree, lengths: Mapping[LeafBipartition, Fraction | int]) -> "MetricPoint":
        return cls(tree, tuple(lengths.items()))

    @classmethod
    def from_values(cls, tree: LeafLabeledTree, values: Sequence[Fraction | int]) -> "MetricPoint":
        """Lengths given in the tree's canonical edge order."""
        if len(values) != len(tree.canonical_key):
            raise TreeError(f"expected {len(tree.canonical_key)} lengths, got {len(values)}")
        return cls(tree, tuple(zip(tree.canonical_key, map(Fraction, values))))

    def length(self, split: LeafBipartition) -> Fraction:
        return dict(self.lengths)[split]

    def edge_length(self, edge: Edge) -> Fraction:
        return self.length(self.tree.split(edge))

    def scale(self, a) -> "MetricPoint":
        return MetricPoint(self.tree, tuple((s, a * v) for s, v in self.lengths))

    def __add__(self, other: "MetricPoint") -> "MetricPoint":
        if self.tree.canonical_key != other.tree.canonical_key:
            raise ValueError("points lie on different chambers")
        mine = dict(self.lengths)
        return MetricPoint(self.tree, tuple((s, mine[s] + v) for s, v in other.lengths))


def double_ratio(point: MetricPoint, q: QuadrupleSplit) -> Fraction:
    """Signed length of the overlap of the paths ``w -> x`` and ``y -> z``."""
    tree = point.tree
    for label in (q.w, q.x, q.y, q.z):
        if not 1 <= label <= tree.n:
            raise ValueError(f"leaf {label} out of range 1..{tree.n}")
    first = {frozenset(e): e for e in tree.path(q.w, q.x)}
    total = Fraction(0)
    for step in tree.path(q.y, q.z):
        other = first.get(frozenset(step))
        if other is None:
            continue
        # shared edges are always bounded
        sign = 1 if other == step else -1
        total += sign * point.edge_length(step)
    return total


def embed(point: MetricPoint) -> tuple[Fraction, ...]:
    return tuple(double_ratio(point, q) for q in canonical_quadruples(point.tree.n))


def compatible(split: LeafBipartition, q: QuadrupleSplit) -> bool:
    """True when the split separates ``w`` from ``x`` and ``y`` from ``z``."""
    return split.separates(q.w, q.x) and split.separates(q.y, q.z)


def recover_edge_length(point: MetricPoint, edge: Edge | LeafBipartition, coords: Sequence[Fraction] | None = None) -> Fraction:
    """Length of ``edge`` read back from the embedded coordinates.

    A compatible ratio whose overlap is the edge alone always exists, and
    every other compatible overlap contains the edge, so the length is the
    smallest absolute compatible value. It is nonzero unless the edge is
    contracted, in which case 0 is returned.
    """
    split = edge if isinstance(edge, LeafBipartition) else point.tree.split(edge)
    if coords is None:
        coords = embed(point)
    values = [
        abs(c) for q, c in zip(canonical_quadruples(point.tree.n), coords) if compatible(split, q)
    ]
    if not values or min(values) == 0:
        return Fraction(0)
    return min(v for v in values if v)


def recover_lengths(point: MetricPoint) -> dict[LeafBipartition, Fraction]:
    coords = embed(point)
    return {s: recover_edge_length(point, s, coords) for s in point.tree.canonical_key}
