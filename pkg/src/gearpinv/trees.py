"""Distance matrices of trees and their closed-form inverses."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .rational import det, rational, rational_zeros


@dataclass(frozen=True)
class WeightedTree:
    """Tree on 1-based vertices with positive rational edge weights.

    Exactly ``num_vertices - 1`` edges and connectivity are enforced, so
    acyclicity is automatic.
    """

    num_vertices: int
    edges: tuple[tuple[int, int, Fraction], ...]

    def __post_init__(self) -> None:
        m = self.num_vertices
        if m < 1:
            raise ValueError("a tree needs at least one vertex")
        if len(self.edges) != m - 1:
            raise ValueError("a tree on m vertices has exactly m-1 edges")
        for a, b, w in self.edges:
            if not (1 <= a <= m and 1 <= b <= m) or a == b:
                raise ValueError(f"bad edge ({a}, {b})")
            if w <= 0:
                raise ValueError("edge weights must be positive")
        if m > 1 and len(self._reach(1)) != m:
            raise ValueError("edges do not connect all vertices")

    def _reach(self, start: int) -> set[int]:
        nbrs = self.adjacency()
        seen = {start}
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w, _ in nbrs[v]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return seen

    def adjacency(self) -> list[list[tuple[int, Fraction]]]:
        """Neighbor lists of (vertex, weight) pairs, indexed by vertex id."""
        nbrs: list[list[tuple[int, Fraction]]] = [
            [] for _ in range(self.num_vertices + 1)
        ]
        for a, b, w in self.edges:
            nbrs[a].append((b, w))
            nbrs[b].append((a, w))
        return nbrs

    def degrees(self) -> list[int]:
        return [len(lst) for lst in self.adjacency()[1:]]

    def is_unit(self) -> bool:
        return all(w == 1 for _, _, w in self.edges)


def unit_tree(edges) -> WeightedTree:
    """Tree with all weights 1 from (a, b) pairs; m is the largest id."""
    pairs = [(a, b) for a, b in edges]
    m = max((max(a, b) for a, b in pairs), default=1)
    return WeightedTree(m, tuple((a, b, Fraction(1)) for a, b in pairs))


def weighted_tree(edges) -> WeightedTree:
    """Tree from (a, b, weight) triples; weights may be ints or strings."""
    triples = [(a, b, rational(w)) for a, b, w in edges]
    m = max((max(a, b) for a, b, _ in triples), default=1)
    return WeightedTree(m, tuple(triples))


def tree_distance(tree: WeightedTree) -> np.ndarray:
    """Rational matrix of path weights between all vertex pairs."""
    m = tree.num_vertices
    nbrs = tree.adjacency()
    out = rational_zeros(m, m)
    for source in range(1, m + 1):
        dist: list[Fraction | None] = [None] * (m + 1)
        dist[source] = Fraction(0)
        queue = deque([source])
        while queue:
            v = queue.popleft()
            for w, weight in nbrs[v]:
                if dist[w] is None:
                    dist[w] = dist[v] + weight
                    queue.append(w)
        out[source - 1, :] = dist[1:]
    return out


def _leaf_adjusted_degrees(tree: WeightedTree) -> np.ndarray:
    return np.array([rational(2 - d) for d in tree.degrees()], dtype=object)


def graham_lovasz_inverse(tree: WeightedTree) -> np.ndarray:
    """Exact inverse of the distance matrix of a unit-weight tree.

    ``-L/2 + t t' / (2(m-1))`` where L is the graph Laplacian and t has
    entry ``2 - degree`` at each vertex.
    """
    if not tree.is_unit():
        raise ValueError("tree has non-unit weights: use weighted_tree_inverse")
    m = tree.num_vertices
    if m < 2:
        raise ValueError("the inverse needs at least two vertices")
    tau = _leaf_adjusted_degrees(tree)
    lap = rational_zeros(m, m)
    for a, b, _ in tree.edges:
        lap[a - 1, a - 1] += 1
        lap[b - 1, b - 1] += 1
        lap[a - 1, b - 1] -= 1
        lap[b - 1, a - 1] -= 1
    return -Fraction(1, 2) * lap + Fraction(1, 2 * (m - 1)) * np.outer(tau, tau)


def weighted_tree_inverse(tree: WeightedTree) -> np.ndarray:
    """Exact inverse of the distance matrix of a weighted tree.

    The Laplacian carries reciprocal weights; the rank-one part divides
    by twice the total edge weight.  With unit weights this reduces to
    :func:`graham_lovasz_inverse`.
    """
    m = tree.num_vertices
    if m < 2:
        raise ValueError("the inverse needs at least two vertices")
    tau = _leaf_adjusted_degrees(tree)
    lap = rational_zeros(m, m)
    total = Fraction(0)
    for a, b, w in tree.edges:
        total += w
        lap[a - 1, a - 1] += 1 / w
        lap[b - 1, b - 1] += 1 / w
        lap[a - 1, b - 1] -= 1 / w
        lap[b - 1, a - 1] -= 1 / w
    return -Fraction(1, 2) * lap + Fraction(1, 2) / total * np.outer(tau, tau)


def graham_pollak_det(tree: WeightedTree) -> Fraction:
    """Exact determinant of the tree distance matrix.

    For unit weights on m vertices this always comes out to
    ``(-1)**(m-1) * (m-1) * 2**(m-2)``: it depends on the size of the
    tree but not on its shape.
    """
    return det(tree_distance(tree))
