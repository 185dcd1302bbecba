"""Leaf-labeled stable trees, their leaf bipartitions and degenerations.

Leaves are the vertices ``1..n`` (the vertex id is the label); internal
vertices carry arbitrary ids outside that range. An edge is *bounded* when
neither endpoint is a leaf. Trees are identified up to label-respecting
isomorphism by the set of bipartitions their bounded edges induce on the
leaves, so everything downstream keys edges by :class:`LeafBipartition`.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

Edge = tuple[int, int]

MAX_ENUMERATION_LEAVES = 10


class TreeError(ValueError):
    pass


def _edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class LeafBipartition:
    """A split ``S | S'`` of ``{1..n}``, stored as the side without leaf 1."""

    n: int
    side: frozenset[int]

    def __post_init__(self):
        if 1 in self.side:
            object.__setattr__(self, "side", frozenset(range(1, self.n + 1)) - self.side)
        if not self.side or len(self.side) >= self.n:
            raise TreeError(f"both sides of a bipartition must be nonempty: {sorted(self.side)}")
        if not self.side <= frozenset(range(1, self.n + 1)):
            raise TreeError(f"labels {sorted(self.side)} out of range 1..{self.n}")

    @classmethod
    def of(cls, n: int, side: Iterable[int]) -> "LeafBipartition":
        return cls(n, frozenset(side))

    @property
    def other(self) -> frozenset[int]:
        """The side containing leaf 1."""
        return frozenset(range(1, self.n + 1)) - self.side

    def is_trivial(self) -> bool:
        return len(self.side) == 1 or len(self.other) == 1

    def separates(self, a: int, b: int) -> bool:
        return (a in self.side) != (b in self.side)

    def compatible_with(self, other: "LeafBipartition") -> bool:
        a, b = self.side, other.side
        return not (a & b) or a <= b or b <= a or not (self.other & other.other)

    def sort_key(self):
        return tuple(sorted(self.other))

    def __lt__(self, other: "LeafBipartition") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        sep = "" if self.n < 10 else ","
        left = sep.join(map(str, sorted(self.other)))
        right = sep.join(map(str, sorted(self.side)))
        return f"{left}|{right}"

    def __repr__(self) -> str:
        return f"LeafBipartition({self})"


def parse_bipartition(text: str, n: int) -> LeafBipartition:
    """Parse ``"12|34"`` (or ``"1,2|3,4"``, needed once labels exceed 9)."""
    try:
        left, right = text.split("|")
    except ValueError:
        raise TreeError(f"malformed bipartition {text!r}") from None

    def labels(chunk: str) -> set[int]:
        chunk = chunk.strip()
        items = chunk.split(",") if "," in chunk else list(chunk)
        try:
            return {int(x) for x in items if x.strip()}
        except ValueError:
            raise TreeError(f"malformed bipartition {text!r}") from None

    a, b = labels(left), labels(right)
    if a & b or a | b != set(range(1, n + 1)):
        raise TreeError(f"{text!r} is not a bipartition of 1..{n}")
    return LeafBipartition.of(n, b)


@dataclass(frozen=True)
class LeafLabeledTree:
    n: int
    edges: frozenset[Edge]

    def __post_init__(self):
        object.__setattr__(self, "edges", frozenset(_edge(u, v) for u, v in self.edges))
        if self.n < 3:
            raise TreeError(f"need at least 3 leaves, got {self.n}")
        verts = self.vertices
        if len(self.edges) != len(verts) - 1:
            raise TreeError("edge count does not match a tree")
        adj = self.adjacency
        # connectivity
        start = next(iter(verts))
        seen = {start}
        stack = [start]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if seen != verts:
            raise TreeError("tree is not connected")
        for label in range(1, self.n + 1):
            if len(adj.get(label, ())) != 1:
                raise TreeError(f"leaf {label} must have degree 1")
        for v in verts:
            if not 1 <= v <= self.n and len(adj[v]) < 3:
                raise TreeError(f"internal vertex {v} has degree {len(adj[v])}; tree is not stable")

    @cached_property
    def vertices(self) -> frozenset[int]:
        return frozenset(itertools.chain.from_iterable(self.edges))

    @cached_property
    def adjacency(self) -> dict[int, tuple[int, ...]]:
        adj: dict[int, list[int]] = defaultdict(list)
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return {u: tuple(sorted(ws)) for u, ws in adj.items()}

    @property
    def leaves(self) -> range:
        return range(1, self.n + 1)

    def is_leaf(self, v: int) -> bool:
        return 1 <= v <= self.n

    @cached_property
    def internal_vertices(self) -> tuple[int, ...]:
        return tuple(sorted(v for v in self.vertices if not self.is_leaf(v)))

    def is_trivalent(self) -> bool:
        return all(len(self.adjacency[v]) == 3 for v in self.internal_vertices)

    def is_bounded(self, edge: Edge) -> bool:
        u, v = edge
        return not self.is_leaf(u) and not self.is_leaf(v)

    def unbounded_edge(self, label: int) -> Edge:
        return _edge(label, self.adjacency[label][0])

    @cached_property
    def _splits(self) -> dict[Edge, LeafBipartition]:
        splits = {}
        for edge in self.edges:
            splits[edge] = self._compute_split(edge)
        return splits

    def _compute_split(self, edge: Edge) -> LeafBipartition:
        u, v = edge
        seen = {u, v}
        stack = [v]
        side = set()
        while stack:
            x = stack.pop()
            if self.is_leaf(x):
                side.add(x)
            for w in self.adjacency[x]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return LeafBipartition.of(self.n, side)

    def split(self, edge: Edge) -> LeafBipartition:
        edge = _edge(*edge)
        if edge not in self.edges:
            raise TreeError(f"edge {edge} is not in the tree")
        return self._splits[edge]

    @cached_property
    def bounded_edges(self) -> tuple[Edge, ...]:
        """Bounded edges in canonical order ``e_1, ..., e_m`` (by bipartition)."""
        bounded = [e for e in self.edges if self.is_bounded(e)]
        return tuple(sorted(bounded, key=lambda e: self._splits[e].sort_key()))

    @cached_property
    def edge_of_split(self) -> dict[LeafBipartition, Edge]:
        return {self._splits[e]: e for e in self.bounded_edges}

    @cached_property
    def canonical_key(self) -> tuple[LeafBipartition, ...]:
        return tuple(self._splits[e] for e in self.bounded_edges)

    def path(self, a: int, b: int) -> list[tuple[int, int]]:
        """Directed edges along the unique path from vertex ``a`` to ``b``."""
        parent = {a: None}
        stack = [a]
        while stack:
            x = stack.pop()
            if x == b:
                break
            for w in self.adjacency[x]:
                if w not in parent:
                    parent[w] = x
                    stack.append(w)
        steps = []
        x = b
        while parent[x] is not None:
            steps.append((parent[x], x))
            x = parent[x]
        steps.reverse()
        return steps

    def to_json(self) -> dict:
        return {"n": self.n, "splits": [str(s) for s in self.canonical_key]}

    def __str__(self) -> str:
        return ";".join(str(s) for s in self.canonical_key) or f"star({self.n})"


def leaf_bipartition(tree: LeafLabeledTree, edge: Edge) -> LeafBipartition:
    """Split of the leaves obtained by deleting ``edge``."""
    return tree.split(edge)


def canonical_key(tree: LeafLabeledTree) -> tuple[LeafBipartition, ...]:
    """Sorted bounded-edge bipartitions; equal iff the trees are isomorphic."""
    return tree.canonical_key


def star(n: int) -> LeafLabeledTree:
    return LeafLabeledTree(n, frozenset((label, 0) for label in range(1, n + 1)))


def tree_from_splits(n: int, splits: Iterable[LeafBipartition]) -> LeafLabeledTree:
    """Build the stable tree whose bounded edges induce exactly ``splits``.

    Rooting at leaf 1 turns the splits into a laminar family of clusters
    (the sides without leaf 1); each cluster becomes an internal vertex
    hanging below the smallest cluster containing it.
    """
    splits = sorted(set(splits))
    for s in splits:
        if s.n != n:
            raise TreeError(f"split {s} is not over 1..{n}")
        if s.is_trivial():
            raise TreeError(f"split {s} does not come from a bounded edge")
    for a, b in itertools.combinations(splits, 2):
        if not a.compatible_with(b):
            raise TreeError(f"splits {a} and {b} are incompatible")
    root = frozenset(range(2, n + 1))
    clusters = [root] + [s.side for s in splits]
    ids = {c: -(i + 1) for i, c in enumerate(clusters)}
    edges = {(1, ids[root])}

    def parent_of(members: frozenset[int]) -> frozenset[int]:
        containing = [c for c in clusters if members < c]
        return min(containing, key=len)

    for c in clusters[1:]:
        edges.add((ids[c], ids[parent_of(c)]))
    for label in range(2, n + 1):
        edges.add((label, ids[_smallest(clusters, label)]))
    return LeafLabeledTree(n, frozenset(edges))


def _smallest(clusters: list[frozenset[int]], label: int) -> frozenset[int]:
    return min((c for c in clusters if label in c), key=len)


def _insert_leaf(tree_edges: frozenset[Edge], edge: Edge, label: int, new_vertex: int) -> frozenset[Edge]:
    u, v = edge
    out = set(tree_edges)
    out.remove(edge)
    out.update({_edge(u, new_vertex), _edge(new_vertex, v), _edge(label, new_vertex)})
    return frozenset(out)


def _grow(n: int) -> Iterator[frozenset[Edge]]:
    level = [frozenset({(1, 1000), (2, 1000), (3, 1000)})]
    for label in range(4, n + 1):
        nxt = []
        for edges in level:
            for edge in sorted(edges):
                nxt.append(_insert_leaf(edges, edge, label, 1000 + label))
        level = nxt
    yield from level


def enumerate_trivalent_types(n: int) -> list[LeafLabeledTree]:
    """One representative per trivalent topological type with ``n`` leaves.

    Leaves are attached in label order by subdividing every edge of the
    previous stage, which produces each type exactly once.
    """
    if not 3 <= n <= MAX_ENUMERATION_LEAVES:
        raise TreeError(f"n must be in 3..{MAX_ENUMERATION_LEAVES}, got {n}")
    trees = {}
    for edges in _grow(n):
        tree = LeafLabeledTree(n, edges)
        key = tree.canonical_key
        if key in trees:
            raise AssertionError(f"leaf insertion produced {tree} twice")
        trees[key] = tree
    return [trees[k] for k in sorted(trees)]


def degenerate(tree: LeafLabeledTree, edges: Iterable[Edge | LeafBipartition] = ()) -> LeafLabeledTree:
    """Contract the given bounded edges (by vertex pair or by bipartition)."""
    chosen = set()
    for e in edges:
        if isinstance(e, LeafBipartition):
            if e not in tree.edge_of_split:
                raise TreeError(f"{e} is not a bounded edge of {tree}")
            e = tree.edge_of_split[e]
        e = _edge(*e)
        if e not in tree.edges:
            raise TreeError(f"edge {e} is not in the tree")
        if not tree.is_bounded(e):
            raise TreeError(f"cannot contract unbounded edge {e}")
        chosen.add(e)
    if not chosen:
        return tree
    rep = {v: v for v in tree.vertices}

    def find(v):
        while rep[v] != v:
            rep[v] = rep[rep[v]]
            v = rep[v]
        return v

    for u, v in chosen:
        ru, rv = find(u), find(v)
        if ru != rv:
            rep[max(ru, rv)] = min(ru, rv)
    kept = frozenset(_edge(find(u), find(v)) for u, v in tree.edges if (u, v) not in chosen)
    return LeafLabeledTree(tree.n, kept)


def find_cherry(tree: LeafLabeledTree) -> tuple[int, tuple[Edge, Edge], Edge]:
    """An internal vertex where two unbounded edges meet.

    Returns the vertex, the two unbounded edges (lowest leaf pair first) and
    the third edge at that vertex.
    """
    if not tree.is_trivalent():
        raise TreeError("find_cherry needs a trivalent tree")
    for a, b in itertools.combinations(tree.leaves, 2):
        va, vb = tree.adjacency[a][0], tree.adjacency[b][0]
        if va == vb:
            third = next(w for w in tree.adjacency[va] if w not in (a, b))
            return va, (_edge(a, va), _edge(b, va)), _edge(va, third)
    raise AssertionError("every trivalent tree has a cherry")


def double_factorial(k: int) -> int:
    out = 1
    while k > 1:
        out *= k
        k -= 2
    return out
