"""Labeled weighted trees of stable pointed rational curves.

A tree carries labels {1,...,n} on its vertices; stability means every
vertex v satisfies weight(v) + degree(v) >= 3.  Contracting everything
onto the central vertex (the vertex all of whose complementary subtrees
carry fewer than n/2 labels) turns a tree into collision classes of
labels; when n is even a tree may instead split into two halves of n/2
labels across one edge, in which case the two halves are recorded as an
unordered pair.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import MalformedTree, UnstableTree


class StableTree:
    """Tree with vertices 0..vertex_count-1 and labels 1..n on vertices."""

    __slots__ = ("vertex_count", "edges", "marking")

    def __init__(self, vertex_count: int, edges, marking):
        self.vertex_count = int(vertex_count)
        if self.vertex_count < 1:
            raise MalformedTree("a tree needs at least one vertex")
        norm = set()
        for a, b in edges:
            a, b = int(a), int(b)
            if a == b:
                raise MalformedTree(f"loop at vertex {a}")
            if not (0 <= a < self.vertex_count and 0 <= b < self.vertex_count):
                raise MalformedTree(f"edge ({a},{b}) leaves the vertex range")
            norm.add((min(a, b), max(a, b)))
        self.edges = frozenset(norm)
        self.marking = {int(l): int(v) for l, v in dict(marking).items()}
        labels = sorted(self.marking)
        if labels != list(range(1, len(labels) + 1)):
            raise MalformedTree(f"labels must be 1..n, got {labels}")
        for l, v in self.marking.items():
            if not 0 <= v < self.vertex_count:
                raise MalformedTree(f"label {l} sits on missing vertex {v}")

    @property
    def n(self) -> int:
        return len(self.marking)

    def weight(self, v: int) -> int:
        return sum(1 for vertex in self.marking.values() if vertex == v)

    def labels_on(self, v: int) -> frozenset[int]:
        return frozenset(l for l, vertex in self.marking.items() if vertex == v)

    def neighbors(self, v: int) -> list[int]:
        out = []
        for a, b in self.edges:
            if a == v:
                out.append(b)
            elif b == v:
                out.append(a)
        return sorted(out)

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def check_tree(self) -> None:
        """Raise MalformedTree unless the edges form a connected acyclic graph."""
        if len(self.edges) != self.vertex_count - 1:
            raise MalformedTree(
                f"{len(self.edges)} edges on {self.vertex_count} vertices is not a tree"
            )
        seen = {0}
        queue = [0]
        while queue:
            v = queue.pop()
            for w in self.neighbors(v):
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        if len(seen) != self.vertex_count:
            raise MalformedTree("graph is disconnected")

    def side_labels(self, v: int, w: int) -> frozenset[int]:
        """Labels in the component of w after removing vertex v."""
        seen = {v, w}
        queue = [w]
        comp = {w}
        while queue:
            u = queue.pop()
            for x in self.neighbors(u):
                if x not in seen:
                    seen.add(x)
                    comp.add(x)
                    queue.append(x)
        return frozenset(l for l, vert in self.marking.items() if vert in comp)

    def to_dict(self) -> dict:
        return {
            "vertices": self.vertex_count,
            "edges": sorted([a, b] for a, b in self.edges),
            "marking": {str(l): v for l, v in sorted(self.marking.items())},
        }

    @classmethod
    def from_dict(cls, data: dict) -> "StableTree":
        return cls(data["vertices"], data["edges"],
                   {int(l): v for l, v in data["marking"].items()})

    def __repr__(self):
        return (f"StableTree(vertices={self.vertex_count}, "
                f"edges={sorted(self.edges)}, marking={dict(sorted(self.marking.items()))})")


@dataclass(frozen=True)
class CentralContraction:
    """Collision classes of labels after contracting onto the central vertex."""

    vertex: int
    classes: tuple[frozenset[int], ...]


@dataclass(frozen=True)
class BalancedSplit:
    """Unordered pair of complementary label halves of an even tree."""

    halves: frozenset[frozenset[int]]


def is_stable(tree: StableTree):
    """(True, None) when every vertex passes weight + degree >= 3,
    else (False, first failing vertex).  Malformed trees raise."""
    tree.check_tree()
    for v in range(tree.vertex_count):
        if tree.weight(v) + tree.degree(v) < 3:
            return False, v
    return True, None


def _require_stable(tree: StableTree) -> None:
    ok, witness = is_stable(tree)
    if not ok:
        raise UnstableTree(f"vertex {witness} has weight + degree < 3")


def central_vertex(tree: StableTree):
    """The unique central vertex, or the BalancedSplit when none exists.

    A vertex is central when every complementary subtree carries fewer
    than n/2 labels; the split case happens exactly for even n with one
    edge separating two halves of n/2 labels each.
    """
    _require_stable(tree)
    n = tree.n
    half = n / 2
    centrals = []
    for v in range(tree.vertex_count):
        if all(len(tree.side_labels(v, w)) < half for w in tree.neighbors(v)):
            centrals.append(v)
    if len(centrals) == 1:
        return centrals[0]
    if len(centrals) > 1:  # impossible for stable trees; defensive
        raise RuntimeError(f"multiple central vertices {centrals}")
    for a, b in sorted(tree.edges):
        side = tree.side_labels(b, a)
        if 2 * len(side) == n:
            complement = frozenset(range(1, n + 1)) - side
            return BalancedSplit(frozenset({side, complement}))
    raise RuntimeError("no central vertex and no balanced edge")  # unreachable


def contract(tree: StableTree):
    """Collision classes of the contraction onto the central vertex.

    Labels on the central vertex stay separate points; each edge at the
    central vertex collapses the labels of the far subtree to one point.
    Trees without a central vertex return their BalancedSplit.
    """
    center = central_vertex(tree)
    if isinstance(center, BalancedSplit):
        return center
    classes = [frozenset({l}) for l in sorted(tree.labels_on(center))]
    for w in tree.neighbors(center):
        classes.append(tree.side_labels(center, w))
    classes.sort(key=lambda c: sorted(c))
    return CentralContraction(center, tuple(classes))


def enumerate_two_vertex(n: int):
    """All stable trees with exactly two vertices, up to relabeling vertices.

    These are the unordered splits {S, complement} with 2 <= |S| <= n-2;
    there are 2^(n-1) - n - 1 of them.
    """
    if n < 4:
        raise ValueError("two-vertex stable trees need n >= 4")
    out = []
    rest = list(range(2, n + 1))
    for k in range(2, n - 1):
        for extra in itertools.combinations(rest, k - 1):
            side = {1, *extra}
            marking = {l: 0 if l in side else 1 for l in range(1, n + 1)}
            out.append(StableTree(2, [(0, 1)], marking))
    return out


_SHAPES = {
    1: (),
    2: ((0, 1),),
    3: ((0, 1), (1, 2)),
}
_SHAPES_4 = (((0, 1), (1, 2), (2, 3)), ((0, 1), (0, 2), (0, 3)))


def _canonical_key(vertex_count, edges, marking):
    best = None
    for perm in itertools.permutations(range(vertex_count)):
        es = tuple(sorted((min(perm[a], perm[b]), max(perm[a], perm[b])) for a, b in edges))
        mk = tuple(perm[marking[l]] for l in sorted(marking))
        key = (es, mk)
        if best is None or key < best:
            best = key
    return best


def enumerate_stable_trees(n: int, max_vertices: int = 4):
    """All stable n-labeled trees with at most max_vertices vertices,
    up to label-preserving isomorphism.  Bounded to max_vertices <= 4."""
    if max_vertices > 4:
        raise ValueError("enumeration is implemented for at most 4 vertices")
    shapes = []
    for k in range(1, max_vertices + 1):
        if k == 4:
            shapes.extend((4, edges) for edges in _SHAPES_4)
        else:
            shapes.append((k, _SHAPES[k]))
    seen = set()
    out = []
    for k, edges in shapes:
        for assignment in itertools.product(range(k), repeat=n):
            marking = {l: assignment[l - 1] for l in range(1, n + 1)}
            tree = StableTree(k, edges, marking)
            ok, _ = is_stable(tree)
            if not ok:
                continue
            key = _canonical_key(k, edges, marking)
            if key in seen:
                continue
            seen.add(key)
            out.append(tree)
    return out
