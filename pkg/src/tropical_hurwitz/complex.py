"""The tropical Hurwitz complex of a ramification profile.

Top-dimensional cells are pairs (trivalent tree type, partitions on the
bounded edges) such that every internal vertex is acceptable, i.e. its three
incident partitions have nonzero triple index. Each cell is a copy of the
closed orthant ``R^{n-3}_{>=0}``; its coordinate faces are obtained by
contracting bounded edges and are glued across cells when the contracted
trees agree together with the partitions on their surviving edges.

The forgetful map to the moduli space of rational curves has lattice index
1 on every top-dimensional cell (integer image coordinates force integer
edge lengths), so the degree over a chamber is the sum of cell weights of
that tree type.
"""

from __future__ import annotations

import itertools
import math
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from .class_algebra import triple_index
from .monodromy import ResourceGuardExceeded
from .partitions import (
    Partition,
    RamificationProfile,
    all_partitions,
    class_size,
    parse_partition,
)
from .trees import (
    LeafBipartition,
    LeafLabeledTree,
    degenerate,
    enumerate_trivalent_types,
    parse_bipartition,
    tree_from_splits,
)

FORMAT = "hurwitz-complex/1"
MAX_N = 8
MAX_D = 6


class ChamberDisagreement(ArithmeticError):
    """Two chambers gave different degrees; the degree theorem forbids this."""


class UnacceptableCell(ValueError):
    pass


def format_rational(x: Fraction | int) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text)


def _check_guard(profile: RamificationProfile):
    if profile.n > MAX_N or profile.d > MAX_D:
        raise ResourceGuardExceeded(
            f"complex enumeration is limited to n <= {MAX_N}, d <= {MAX_D}; got n={profile.n}, d={profile.d}"
        )


def _incident_partitions(
    tree: LeafLabeledTree, profile: RamificationProfile, nu: Mapping[LeafBipartition, Partition], v: int
) -> tuple[Partition, Partition, Partition]:
    parts = []
    for w in tree.adjacency[v]:
        if tree.is_leaf(w):
            parts.append(profile[w - 1])
        else:
            parts.append(nu[tree.split((v, w))])
    return tuple(parts)


def compute_weight(
    tree: LeafLabeledTree, profile: RamificationProfile, nu: Mapping[LeafBipartition, Partition]
) -> Fraction:
    weight = Fraction(1, math.factorial(profile.d))
    for split in tree.canonical_key:
        weight /= class_size(nu[split])
    for v in tree.internal_vertices:
        index = triple_index(*_incident_partitions(tree, profile, nu, v))
        if index == 0:
            raise UnacceptableCell(f"vertex {v} of {tree} is not acceptable")
        weight *= index
    return weight


@dataclass(frozen=True, eq=False)
class HurwitzCell:
    """One top-dimensional cell: a trivalent tree type with partitions on its bounded edges.

    ``nu`` lists ``(bipartition, partition)`` pairs in the tree's canonical
    edge order. The weight is computed once, at construction.
    """

    profile: RamificationProfile
    tree: LeafLabeledTree
    nu: tuple[tuple[LeafBipartition, Partition], ...]
    weight: Fraction = field(init=False, compare=False)

    def __post_init__(self):
        if not self.tree.is_trivalent():
            raise ValueError("cells are indexed by trivalent trees")
        if self.tree.n != self.profile.n:
            raise ValueError(f"tree has {self.tree.n} leaves, profile has {self.profile.n} entries")
        if tuple(s for s, _ in self.nu) != self.tree.canonical_key:
            raise ValueError("nu must label exactly the bounded edges, in canonical order")
        object.__setattr__(self, "weight", compute_weight(self.tree, self.profile, self.nu_map))

    @property
    def key(self):
        return (self.profile, self.tree.canonical_key, self.nu)

    def __eq__(self, other):
        if not isinstance(other, HurwitzCell):
            return NotImplemented
        return self.key == other.key

    def __hash__(self):
        return hash(self.key)

    @property
    def nu_map(self) -> dict[LeafBipartition, Partition]:
        return dict(self.nu)

    def to_json(self) -> dict:
        return {
            "tree": [str(s) for s in self.tree.canonical_key],
            "nu": {str(s): str(p) for s, p in self.nu},
            "weight": format_rational(self.weight),
        }


def cell_weight(cell: HurwitzCell) -> Fraction:
    """``(1/d!) * prod 1/|K_nu| * prod I(v)`` over bounded edges and internal vertices."""
    return cell.weight


def _acceptable_labelings(tree: LeafLabeledTree, profile: RamificationProfile):
    d = profile.d
    splits = tree.canonical_key
    position = {s: i for i, s in enumerate(splits)}
    # vertices become checkable once their last bounded edge is assigned
    ready: dict[int, list[int]] = defaultdict(list)
    for v in tree.internal_vertices:
        last = -1
        for w in tree.adjacency[v]:
            if not tree.is_leaf(w):
                last = max(last, position[tree.split((v, w))])
        ready[last].append(v)

    nu: dict[LeafBipartition, Partition] = {}

    def vertices_ok(step: int) -> bool:
        return all(triple_index(*_incident_partitions(tree, profile, nu, v)) for v in ready.get(step, ()))

    def assign(k: int):
        if k == len(splits):
            yield tuple((s, nu[s]) for s in splits)
            return
        for p in all_partitions(d):
            nu[splits[k]] = p
            if vertices_ok(k):
                yield from assign(k + 1)
        nu.pop(splits[k], None)

    if vertices_ok(-1):
        yield from assign(0)


def cells_of_type(tree: LeafLabeledTree, profile: RamificationProfile) -> list[HurwitzCell]:
    return [HurwitzCell(profile, tree, nu) for nu in _acceptable_labelings(tree, profile)]


def enumerate_cells(profile: RamificationProfile) -> list[HurwitzCell]:
    """All acceptable cells, grouped by tree type in canonical order."""
    _check_guard(profile)
    cells = []
    for tree in enumerate_trivalent_types(profile.n):
        cells.extend(cells_of_type(tree, profile))
    return cells


def degree_at_chamber(tree: LeafLabeledTree, profile: RamificationProfile) -> Fraction:
    """Weighted preimage count over a generic point of the chamber of ``tree``."""
    # every lattice index is 1, so only weights contribute
    return sum((c.weight for c in cells_of_type(tree, profile)), Fraction(0))


def _chamber_task(args):
    tree, profile = args
    return degree_at_chamber(tree, profile)


def chamber_degrees(profile: RamificationProfile, jobs: int = 1) -> dict[LeafLabeledTree, Fraction]:
    _check_guard(profile)
    trees = enumerate_trivalent_types(profile.n)
    if jobs > 1 and len(trees) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            values = list(pool.map(_chamber_task, [(t, profile) for t in trees]))
    else:
        values = [degree_at_chamber(t, profile) for t in trees]
    return dict(zip(trees, values))


def degree(profile: RamificationProfile, single_chamber: bool = False, jobs: int = 1) -> Fraction:
    """Degree of the forgetful map, checked to agree on every chamber."""
    if single_chamber:
        _check_guard(profile)
        return degree_at_chamber(enumerate_trivalent_types(profile.n)[0], profile)
    per_chamber = chamber_degrees(profile, jobs=jobs)
    values = set(per_chamber.values())
    if len(values) != 1:
        detail = ", ".join(f"{t}: {format_rational(v)}" for t, v in per_chamber.items())
        raise ChamberDisagreement(f"chambers disagree for {profile}: {detail}")
    return values.pop()


@lru_cache(maxsize=None)
def degree_recursive(profile: RamificationProfile) -> Fraction:
    """Degree by repeatedly stripping the cherry formed by the last two entries."""
    d = profile.d
    if profile.n == 3:
        return Fraction(triple_index(*profile.parts), math.factorial(d))
    *head, a, b = profile.parts
    total = Fraction(0)
    for nu in all_partitions(d):
        local = triple_index(a, b, nu)
        if local:
            reduced = RamificationProfile(d, tuple(head) + (nu,))
            total += Fraction(local, class_size(nu)) * degree_recursive(reduced)
    return total


@dataclass(frozen=True)
class Face:
    """A coordinate face of a cell: some bounded edges contracted."""

    cell: HurwitzCell
    contracted: frozenset[LeafBipartition]
    tree: LeafLabeledTree
    nu: tuple[tuple[LeafBipartition, Partition], ...]

    @property
    def dimension(self) -> int:
        return len(self.nu)

    @property
    def key(self):
        return (self.tree.canonical_key, self.nu, self.cell.profile)


def face(cell: HurwitzCell, contracted: Iterable[LeafBipartition]) -> Face:
    contracted = frozenset(contracted)
    tree = degenerate(cell.tree, contracted)
    # bipartitions of surviving edges are unchanged by contraction
    nu = tuple((s, p) for s, p in cell.nu if s not in contracted)
    assert tuple(s for s, _ in nu) == tree.canonical_key
    return Face(cell, contracted, tree, nu)


def faces_of(cell: HurwitzCell) -> list[Face]:
    """All ``2^m`` coordinate faces, from the cell itself to the fully contracted star."""
    splits = cell.tree.canonical_key
    out = []
    for k in range(len(splits) + 1):
        for subset in itertools.combinations(splits, k):
            out.append(face(cell, subset))
    return out


def glue(faces: Iterable[Face]) -> dict[tuple, list[Face]]:
    """Group faces into identification classes."""
    classes: dict[tuple, list[Face]] = defaultdict(list)
    for f in faces:
        classes[f.key].append(f)
    return dict(classes)


def face_order(cells: Iterable[HurwitzCell]) -> set[tuple[tuple, tuple]]:
    """Covering relations ``(smaller, larger)`` between identification classes."""
    order = set()
    for cell in cells:
        splits = cell.tree.canonical_key
        for k in range(len(splits)):
            for subset in itertools.combinations(splits, k):
                big = face(cell, subset)
                for s in splits:
                    if s not in subset:
                        order.add((face(cell, set(subset) | {s}).key, big.key))
    return order


@dataclass
class HurwitzComplex:
    profile: RamificationProfile
    cells: list[HurwitzCell]

    @classmethod
    def build(cls, profile: RamificationProfile) -> "HurwitzComplex":
        return cls(profile, enumerate_cells(profile))

    def faces(self) -> list[Face]:
        return [f for c in self.cells for f in faces_of(c)]

    def identification_classes(self) -> dict[tuple, list[Face]]:
        return glue(self.faces())

    def chamber_degrees(self) -> dict[tuple[LeafBipartition, ...], Fraction]:
        out: dict[tuple[LeafBipartition, ...], Fraction] = {}
        for t in enumerate_trivalent_types(self.profile.n):
            out[t.canonical_key] = Fraction(0)
        for c in self.cells:
            out[c.tree.canonical_key] += c.weight
        return out

    def degree(self) -> Fraction:
        values = set(self.chamber_degrees().values())
        if len(values) != 1:
            raise ChamberDisagreement(f"chambers disagree for {self.profile}")
        return values.pop()

    def to_json(self) -> dict:
        index = {c: i for i, c in enumerate(self.cells)}
        classes = []
        for key, members in sorted(self.identification_classes().items(), key=lambda kv: _class_sort(kv[1][0])):
            first = members[0]
            classes.append(
                {
                    "tree": [str(s) for s in first.tree.canonical_key],
                    "nu": {str(s): str(p) for s, p in first.nu},
                    "dimension": first.dimension,
                    "members": [
                        {"cell": index[f.cell], "contracted": sorted(str(s) for s in f.contracted)}
                        for f in members
                    ],
                }
            )
        per_chamber = self.chamber_degrees()
        return {
            "format": FORMAT,
            "d": self.profile.d,
            "n": self.profile.n,
            "profile": [str(p) for p in self.profile],
            "cells": [c.to_json() for c in self.cells],
            "face_classes": classes,
            "degree": {
                "value": format_rational(self.degree()),
                "chambers": {";".join(map(str, k)) or "star": format_rational(v) for k, v in per_chamber.items()},
            },
        }

    @classmethod
    def from_json(cls, data: dict) -> "HurwitzComplex":
        if data.get("format") != FORMAT:
            raise ValueError(f"unsupported format {data.get('format')!r}")
        d, n = data["d"], data["n"]
        profile = RamificationProfile(d, tuple(parse_partition(p, d) for p in data["profile"]))
        cells = []
        for entry in data["cells"]:
            tree = tree_from_splits(n, [parse_bipartition(s, n) for s in entry["tree"]])
            nu_map = {parse_bipartition(s, n): parse_partition(p, d) for s, p in entry["nu"].items()}
            nu = tuple((s, nu_map[s]) for s in tree.canonical_key)
            cell = HurwitzCell(profile, tree, nu)
            if cell.weight != parse_rational(entry["weight"]):
                raise ValueError(f"stored weight {entry['weight']} does not match {cell.weight}")
            cells.append(cell)
        return cls(profile, cells)


def _class_sort(f: Face):
    return (-f.dimension, f.tree.canonical_key, tuple(p.sort_key() for _, p in f.nu))
