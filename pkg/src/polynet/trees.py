"""Spanning trees of the dual graph and their complements in the vertex graph.

Graphs are passed as (node count, edge list); edges are (min, max) index
pairs.  Random trees come from Wilson's loop-erased walk, so for a connected
graph they are uniform over all spanning trees.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .geometry import GeometryError, UnionFind
from .polytope import Polytope3


class NotASpanningTree(GeometryError):
    pass


class DisconnectedGraph(GeometryError):
    pass


class TooManyTrees(GeometryError):
    def __init__(self, count: int, max_count: int):
        super().__init__(f"graph has {count} spanning trees, limit {max_count}")
        self.count = count


@dataclass(frozen=True)
class DualSpanningTree:
    """Spanning tree of the dual graph: facet-index edge pairs plus a root facet."""

    edges: tuple[tuple[int, int], ...]
    root: int


@dataclass(frozen=True)
class CutTree:
    """The complementary spanning tree of the vertex graph (the cut edges)."""

    edges: tuple[tuple[int, int], ...]


def _canon_edges(edges) -> tuple[tuple[int, int], ...]:
    return tuple(sorted((a, b) if a < b else (b, a) for a, b in edges))


def is_spanning_tree(n_nodes: int, edges) -> bool:
    edges = list(edges)
    if len(edges) != n_nodes - 1:
        return False
    uf = UnionFind(n_nodes)
    return all(uf.union(a, b) for a, b in edges)


def spanning_tree_count(n_nodes: int, edges) -> int:
    """Number of spanning trees via the Kirchhoff (matrix-tree) determinant."""
    if n_nodes == 1:
        return 1
    lap = np.zeros((n_nodes, n_nodes))
    for a, b in edges:
        lap[a, a] += 1
        lap[b, b] += 1
        lap[a, b] -= 1
        lap[b, a] -= 1
    minor = lap[1:, 1:]
    return int(round(float(np.linalg.det(minor))))


def _neighbor_lists(n_nodes: int, edges) -> list[list[int]]:
    adj: list[list[int]] = [[] for _ in range(n_nodes)]
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    for lst in adj:
        lst.sort()
    return adj


def _check_connected(n_nodes: int, edges) -> None:
    uf = UnionFind(n_nodes)
    parts = n_nodes
    for a, b in edges:
        if uf.union(a, b):
            parts -= 1
    if parts != 1:
        raise DisconnectedGraph("graph is not connected")


def random_spanning_tree(n_nodes: int, edges, seed) -> tuple[tuple[int, int], ...]:
    """Uniformly random spanning tree (Wilson's algorithm), deterministic per seed."""
    _check_connected(n_nodes, edges)
    rng = np.random.default_rng(seed)
    adj = _neighbor_lists(n_nodes, edges)

    in_tree = [False] * n_nodes
    parent = [-1] * n_nodes
    in_tree[0] = True
    for start in range(1, n_nodes):
        if in_tree[start]:
            continue
        # random walk until the tree is hit, recording the successor of each node
        u = start
        while not in_tree[u]:
            nxt = adj[u][rng.integers(len(adj[u]))]
            parent[u] = nxt
            u = nxt
        # retrace with loops erased; parent[] holds the latest successor of
        # every walked node, which is exactly the loop-erased choice
        u = start
        while not in_tree[u]:
            in_tree[u] = True
            u = parent[u]
    return _canon_edges((u, parent[u]) for u in range(n_nodes) if u != 0)


def all_spanning_trees(n_nodes: int, edges, max_count: int = 100_000
                       ) -> list[tuple[tuple[int, int], ...]]:
    """Exhaustive, duplicate-free spanning tree enumeration.

    Pre-checks the matrix-tree count and raises TooManyTrees beyond
    ``max_count``.
    """
    edges = list(_canon_edges(edges))
    _check_connected(n_nodes, edges)
    count = spanning_tree_count(n_nodes, edges)
    if count > max_count:
        raise TooManyTrees(count, max_count)

    trees: list[tuple[tuple[int, int], ...]] = []

    def connected_without(start_idx: int, chosen: list[tuple[int, int]]) -> bool:
        uf = UnionFind(n_nodes)
        parts = n_nodes
        for a, b in chosen:
            if uf.union(a, b):
                parts -= 1
        for a, b in edges[start_idx:]:
            if uf.union(a, b):
                parts -= 1
        return parts == 1

    def recurse(idx: int, uf: UnionFind, chosen: list[tuple[int, int]]) -> None:
        if len(chosen) == n_nodes - 1:
            trees.append(tuple(sorted(chosen)))
            return
        if idx == len(edges):
            return
        a, b = edges[idx]
        if uf.find(a) != uf.find(b):
            child = uf.copy()
            child.union(a, b)
            chosen.append((a, b))
            recurse(idx + 1, child, chosen)
            chosen.pop()
        if connected_without(idx + 1, chosen):
            recurse(idx + 1, uf, chosen)

    recurse(0, UnionFind(n_nodes), [])
    assert len(trees) == count, "enumeration disagrees with the matrix-tree count"
    return trees


def validate_dual_tree(p: Polytope3, tree: DualSpanningTree) -> None:
    """Raise NotASpanningTree unless ``tree`` spans the dual graph of ``p``."""
    dg = p.dual_graph()
    known = set(dg.edges)
    edges = _canon_edges(tree.edges)
    if any(e not in known for e in edges):
        raise NotASpanningTree("tree contains a pair of facets that share no edge")
    if not 0 <= tree.root < p.n_facets:
        raise NotASpanningTree("root facet index out of range")
    if not is_spanning_tree(dg.n_nodes, edges):
        raise NotASpanningTree("edge set is not a spanning tree of the dual graph")


def complement_tree(p: Polytope3, tree: DualSpanningTree) -> CutTree:
    """Primal edges not crossed by the dual tree; always a spanning tree of the
    vertex graph (asserted, not assumed)."""
    validate_dual_tree(p, tree)
    dg = p.dual_graph()
    crossed = {dg.primal_of(e) for e in _canon_edges(tree.edges)}
    cut = tuple(e for e in p.edges if e not in crossed)
    assert is_spanning_tree(p.n_vertices, cut), \
        "complement of a dual spanning tree must span the vertex graph"
    return CutTree(cut)


def random_dual_tree(p: Polytope3, seed) -> DualSpanningTree:
    """Uniform spanning tree of the dual graph with a random root facet."""
    rng = np.random.default_rng(seed)
    dg = p.dual_graph()
    edges = random_spanning_tree(dg.n_nodes, dg.edges, rng)
    root = int(rng.integers(dg.n_nodes))
    return DualSpanningTree(edges, root)
