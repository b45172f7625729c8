"""Unfolding 3-polytopes into the plane along dual spanning trees.

The planar map is built facet by facet: the root facet is laid down with its
centroid at the origin and its first edge on the positive x-axis, and every
other facet is placed by composing hinge rotations along its tree path to the
root.  Results with overlapping facets are legitimate values (flagged
non-injective), not errors.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

from .geometry import (
    DEFAULT_TOL,
    GeometryError,
    PlanarIsometry,
    RigidMotion3,
    ToleranceConfig,
    hinge_rotation_to_plane,
    polygons_overlap,
)
from .polytope import Polytope3
from .trees import DualSpanningTree, validate_dual_tree


class NoNetFound(GeometryError):
    """Backtracking search exhausted its placement budget."""

    def __init__(self, placements: int):
        super().__init__(f"no injective net found within {placements} placements")
        self.placements = placements


@dataclass(frozen=True)
class PlanarNet:
    """Planar image of a cut-open polytope boundary.

    ``polygons[f]`` matches the cyclic vertex order of facet ``f``; fold edges
    are (facet_a, edge_a, facet_b, edge_b) pairs of facet-local edge slots
    glued in the plane (a is the facet nearer the root), cut edges are the
    boundary slots.  ``injective`` records whether facet interiors are
    pairwise disjoint.
    """

    polygons: tuple[np.ndarray, ...]
    fold_edges: tuple[tuple[int, int, int, int], ...]
    cut_edges: tuple[tuple[int, int], ...]
    root: int
    injective: bool
    tree: DualSpanningTree | None = None
    placements: int | None = None

    def __post_init__(self):
        polys = tuple(np.ascontiguousarray(np.asarray(p, dtype=float)) for p in self.polygons)
        for p in polys:
            p.setflags(write=False)
        object.__setattr__(self, "polygons", polys)

    @property
    def n_facets(self) -> int:
        return len(self.polygons)

    def bounding_box(self) -> tuple[np.ndarray, np.ndarray]:
        pts = np.vstack(self.polygons)
        return pts.min(axis=0), pts.max(axis=0)


def _local_edge_index(cycle: tuple[int, ...], edge: tuple[int, int]) -> int:
    """Index i such that {cycle[i], cycle[i+1]} equals the given vertex pair."""
    n = len(cycle)
    want = frozenset(edge)
    for i in range(n):
        if frozenset((cycle[i], cycle[(i + 1) % n])) == want:
            return i
    raise ValueError(f"edge {edge} is not an edge of cycle {cycle}")


def _tree_children(tree: DualSpanningTree, n_facets: int) -> list[list[int]]:
    adj: list[list[int]] = [[] for _ in range(n_facets)]
    for a, b in tree.edges:
        adj[a].append(b)
        adj[b].append(a)
    for lst in adj:
        lst.sort()
    return adj


def _root_frame(p: Polytope3, root: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(origin, e1, e2): centroid of the root facet, first edge direction, and
    its in-plane normal; the projection of the root facet is counterclockwise."""
    cycle = p.facets[root]
    pts = p.vertices[list(cycle)]
    origin = pts.mean(axis=0)
    normal = p.facet_planes[0][root]
    e1 = pts[1] - pts[0]
    e1 = e1 / np.linalg.norm(e1)
    e2 = np.cross(normal, e1)
    return origin, e1, e2


def _facet_transforms(p: Polytope3, tree: DualSpanningTree,
                      tol: ToleranceConfig) -> list[RigidMotion3]:
    """Rigid motion per facet carrying it into the root facet's plane."""
    normals, offsets = p.facet_planes
    dg = p.dual_graph()
    adj = _tree_children(tree, p.n_facets)
    transforms: list[RigidMotion3 | None] = [None] * p.n_facets
    transforms[tree.root] = RigidMotion3.identity()
    queue = deque([tree.root])
    while queue:
        parent = queue.popleft()
        for child in adj[parent]:
            if transforms[child] is not None:
                continue
            va, vb = dg.primal_of((parent, child))
            hinge = hinge_rotation_to_plane(
                (normals[child], offsets[child]),
                (p.vertices[va], p.vertices[vb]),
                (normals[parent], offsets[parent]),
                tol,
            )
            transforms[child] = transforms[parent].compose(hinge)
            queue.append(child)
    return transforms  # type: ignore[return-value]


def unfold(p: Polytope3, tree: DualSpanningTree,
           tol: ToleranceConfig = DEFAULT_TOL) -> PlanarNet:
    """Unfold along a dual spanning tree; never fails, but may be non-injective."""
    validate_dual_tree(p, tree)
    transforms = _facet_transforms(p, tree, tol)
    origin, e1, e2 = _root_frame(p, tree.root)
    frame = np.column_stack([e1, e2])

    polygons = []
    for f, cycle in enumerate(p.facets):
        world = transforms[f].apply(p.vertices[list(cycle)])
        polygons.append((world - origin) @ frame)

    dg = p.dual_graph()
    parent_of = _orient_to_root(tree, p.n_facets)
    fold_edges = []
    for child, parent in enumerate(parent_of):
        if parent < 0:
            continue
        edge = dg.primal_of((parent, child))
        fold_edges.append((parent, _local_edge_index(p.facets[parent], edge),
                           child, _local_edge_index(p.facets[child], edge)))
    fold_edges.sort()
    folded = {(a, i) for a, i, _, _ in fold_edges} | {(b, j) for _, _, b, j in fold_edges}
    cut_edges = tuple((f, i) for f, cycle in enumerate(p.facets)
                      for i in range(len(cycle)) if (f, i) not in folded)

    injective = is_injective(polygons, tol)
    return PlanarNet(tuple(polygons), tuple(fold_edges), cut_edges,
                     tree.root, injective, tree=tree)


def _orient_to_root(tree: DualSpanningTree, n_facets: int) -> list[int]:
    """parent_of[f] along the tree, -1 at the root."""
    adj = _tree_children(tree, n_facets)
    parent_of = [-1] * n_facets
    seen = [False] * n_facets
    seen[tree.root] = True
    queue = deque([tree.root])
    while queue:
        f = queue.popleft()
        for g in adj[f]:
            if not seen[g]:
                seen[g] = True
                parent_of[g] = f
                queue.append(g)
    return parent_of


def is_injective(polygons, tol: ToleranceConfig = DEFAULT_TOL) -> bool:
    """True iff no two facet polygons have intersecting interiors."""
    if isinstance(polygons, PlanarNet):
        polygons = polygons.polygons
    polys = [np.asarray(p, dtype=float) for p in polygons]
    lo = np.array([p.min(axis=0) for p in polys])
    hi = np.array([p.max(axis=0) for p in polys])
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            if np.any(lo[j] - hi[i] > -tol.absolute) or np.any(lo[i] - hi[j] > -tol.absolute):
                continue  # bounding boxes at most touch
            if polygons_overlap(polys[i], polys[j], tol):
                return False
    return True


# ---------------------------------------------------------------------------
# backtracking net search


class _BudgetExhausted(Exception):
    pass


def find_net(p: Polytope3, seed, budget: int = 100_000,
             tol: ToleranceConfig = DEFAULT_TOL) -> PlanarNet:
    """Search for an injective net, growing a dual tree from a random root.

    Facets are attached in discovery (breadth-first) order; an attachment
    whose polygon overlaps anything already placed is rejected and the facet
    is reattached through a different dual edge, backtracking as needed.
    When one attachment order digs itself in, the search restarts with a
    fresh random order and a doubled placement slice, until the total budget
    is spent.  Deterministic per seed.  Raises NoNetFound after ``budget``
    attempted placements.
    """
    rng = np.random.default_rng(seed)
    placements = 0
    slice_size = max(256, 32 * p.n_facets)
    while placements < budget:
        cap = min(budget, placements + slice_size)
        try:
            tree, placements = _search_tree(p, rng, placements, cap, tol)
        except _BudgetExhausted:
            placements = cap
            slice_size *= 2
            continue
        if tree is None:  # attachment orders exhausted under this shuffle
            slice_size *= 2
            continue
        net = unfold(p, tree, tol)
        assert net.injective, "search accepted a net the full check rejects"
        return PlanarNet(net.polygons, net.fold_edges, net.cut_edges, net.root,
                         net.injective, tree=tree, placements=placements)
    raise NoNetFound(budget)


def _search_tree(p: Polytope3, rng: np.random.Generator, placements: int, cap: int,
                 tol: ToleranceConfig) -> tuple[DualSpanningTree | None, int]:
    """One backtracking pass; raises _BudgetExhausted at the placement cap."""
    n = p.n_facets
    normals, offsets = p.facet_planes
    adjacency = p.dual_graph().neighbors()
    for lst in adjacency:
        rng.shuffle(lst)

    root = int(rng.integers(n))
    origin, e1, e2 = _root_frame(p, root)
    frame = np.column_stack([e1, e2])

    def project(transform: RigidMotion3, facet: int) -> np.ndarray:
        world = transform.apply(p.vertices[list(p.facets[facet])])
        return (world - origin) @ frame

    transforms: dict[int, RigidMotion3] = {root: RigidMotion3.identity()}
    polygons: dict[int, np.ndarray] = {root: project(transforms[root], root)}
    boxes: dict[int, tuple[np.ndarray, np.ndarray]] = {
        root: (polygons[root].min(axis=0), polygons[root].max(axis=0))}
    tree_edges: list[tuple[int, int]] = []
    used = placements

    def overlaps_placed(poly: np.ndarray) -> bool:
        lo, hi = poly.min(axis=0), poly.max(axis=0)
        for f, (flo, fhi) in boxes.items():
            if np.any(flo - hi > -tol.absolute) or np.any(lo - fhi > -tol.absolute):
                continue
            if polygons_overlap(poly, polygons[f], tol):
                return True
        return False

    def search(frontier: list[tuple[int, int, tuple[int, int]]]) -> bool:
        nonlocal used
        if len(polygons) == n:
            return True
        for parent, child, edge in frontier:
            if child in polygons:
                continue
            used += 1
            if used > cap:
                raise _BudgetExhausted
            va, vb = edge
            hinge = hinge_rotation_to_plane(
                (normals[child], offsets[child]),
                (p.vertices[va], p.vertices[vb]),
                (normals[parent], offsets[parent]),
                tol,
            )
            transform = transforms[parent].compose(hinge)
            poly = project(transform, child)
            if overlaps_placed(poly):
                continue
            transforms[child] = transform
            polygons[child] = poly
            boxes[child] = (poly.min(axis=0), poly.max(axis=0))
            tree_edges.append((parent, child))
            grown = frontier + [(child, g, pe) for g, pe in adjacency[child]]
            if search(grown):
                return True
            del transforms[child], polygons[child], boxes[child]
            tree_edges.pop()
        return False

    if not search([(root, g, pe) for g, pe in adjacency[root]]):
        return None, used
    tree = DualSpanningTree(tuple(sorted((min(a, b), max(a, b)) for a, b in tree_edges)), root)
    return tree, used


# ---------------------------------------------------------------------------
# congruence of nets


def _sorted_centroid_distances(net: PlanarNet) -> np.ndarray:
    cents = np.array([poly.mean(axis=0) for poly in net.polygons])
    d = np.linalg.norm(cents[:, None, :] - cents[None, :, :], axis=2)
    iu = np.triu_indices(len(cents), k=1)
    return np.sort(d[iu])


def _cyclic_equal(a: np.ndarray, b: np.ndarray, atol: float) -> bool:
    """Point sequences equal up to cyclic shift and/or reversal."""
    if len(a) != len(b):
        return False
    for cand in (b, b[::-1]):
        for shift in range(len(a)):
            if np.max(np.abs(np.roll(cand, shift, axis=0) - a)) <= atol:
                return True
    return False


def _edge_lengths(poly: np.ndarray) -> np.ndarray:
    return np.linalg.norm(np.roll(poly, -1, axis=0) - poly, axis=1)


def congruent_nets(a: PlanarNet, b: PlanarNet,
                   tol: ToleranceConfig = ToleranceConfig(1e-8, 1e-8)) -> bool:
    """True iff some planar isometry (reflections allowed) maps the facet
    polygons of one net onto the other as a multiset."""
    if a.n_facets != b.n_facets:
        return False
    atol = max(1e3 * tol.absolute, 1e-6)
    if not np.allclose(_sorted_centroid_distances(a), _sorted_centroid_distances(b),
                       atol=atol, rtol=0.0):
        return False

    # reference facet in a: fewest same-shape candidates in b
    def shape(poly):
        return len(poly), np.sort(_edge_lengths(poly))

    b_shapes = [shape(q) for q in b.polygons]

    def candidates(poly):
        n, lens = shape(poly)
        return [j for j, (m, ml) in enumerate(b_shapes)
                if m == n and np.allclose(ml, lens, atol=atol, rtol=0.0)]

    ref, ref_cands = min(((f, candidates(poly)) for f, poly in enumerate(a.polygons)),
                         key=lambda t: len(t[1]))
    if not ref_cands:
        return False
    pa = a.polygons[ref]

    for j in ref_cands:
        qb = b.polygons[j]
        m = len(qb)
        for shift in range(m):
            for mirrored in (False, True):
                q0 = qb[shift]
                q1 = qb[(shift - 1) % m] if mirrored else qb[(shift + 1) % m]
                if abs(np.linalg.norm(pa[1] - pa[0]) - np.linalg.norm(q1 - q0)) > atol:
                    continue
                iso = PlanarIsometry.from_edge_map(pa[0], pa[1], q0, q1, mirrored)
                if _isometry_matches(iso, a, b, atol):
                    return True
    return False


def _isometry_matches(iso: PlanarIsometry, a: PlanarNet, b: PlanarNet, atol: float) -> bool:
    unused = list(range(b.n_facets))
    for poly in a.polygons:
        moved = iso.apply(poly)
        for k, j in enumerate(unused):
            if _cyclic_equal(moved, b.polygons[j], atol):
                unused.pop(k)
                break
        else:
            return False
    return True


# ---------------------------------------------------------------------------
# invariant checking (shared by tests and asset verification)


def net_invariant_report(p: Polytope3, net: PlanarNet,
                         tol: ToleranceConfig = DEFAULT_TOL) -> list[str]:
    """Human-readable list of violated net invariants (empty when all hold)."""
    problems: list[str] = []
    if net.n_facets != p.n_facets:
        return [f"net has {net.n_facets} polygons for {p.n_facets} facets"]

    for f, (cycle, poly) in enumerate(zip(p.facets, net.polygons)):
        if len(cycle) != len(poly):
            problems.append(f"facet {f}: polygon size {len(poly)} != cycle size {len(cycle)}")
            continue
        pts3 = p.vertices[list(cycle)]
        len3 = np.linalg.norm(np.roll(pts3, -1, axis=0) - pts3, axis=1)
        len2 = _edge_lengths(poly)
        for i, (l3, l2) in enumerate(zip(len3, len2)):
            if abs(l3 - l2) > tol.length(l3):
                problems.append(f"facet {f} edge {i}: planar length {l2} vs 3D {l3}")
        ang3 = _interior_angles(pts3)
        ang2 = _interior_angles(poly)
        if np.max(np.abs(ang3 - ang2)) > 1e3 * tol.relative:
            problems.append(f"facet {f}: interior angles differ from the 3D facet")

    if len(net.fold_edges) != p.n_facets - 1:
        problems.append(f"{len(net.fold_edges)} fold edges, expected {p.n_facets - 1}")
    slots = sum(len(c) for c in p.facets)
    if 2 * len(net.fold_edges) + len(net.cut_edges) != slots:
        problems.append("fold and cut edges do not partition the facet edge slots")

    scale = max(1.0, p.circumradius)
    for fa, ea, fb, eb in net.fold_edges:
        a0, a1 = _edge_segment(net.polygons[fa], ea)
        b0, b1 = _edge_segment(net.polygons[fb], eb)
        direct = max(np.linalg.norm(a0 - b0), np.linalg.norm(a1 - b1))
        swapped = max(np.linalg.norm(a0 - b1), np.linalg.norm(a1 - b0))
        if min(direct, swapped) > 10 * tol.length(scale):
            problems.append(f"fold edge {(fa, ea, fb, eb)}: endpoints do not coincide")
    return problems


def _edge_segment(poly: np.ndarray, i: int) -> tuple[np.ndarray, np.ndarray]:
    return poly[i], poly[(i + 1) % len(poly)]


def _interior_angles(pts: np.ndarray) -> np.ndarray:
    prev = np.roll(pts, 1, axis=0) - pts
    nxt = np.roll(pts, -1, axis=0) - pts
    prev = prev / np.linalg.norm(prev, axis=1)[:, None]
    nxt = nxt / np.linalg.norm(nxt, axis=1)[:, None]
    return np.arccos(np.clip((prev * nxt).sum(axis=1), -1.0, 1.0))


# ---------------------------------------------------------------------------
# a reproducible failing unfolding (flat tetrahedron + path tree)


def overlapping_unfolding_example(seed: int = 20112,
                                  max_tries: int = 500) -> tuple[Polytope3, DualSpanningTree]:
    """Search flattened random tetrahedra for a path tree whose unfolding
    self-overlaps; returns the solid and the failing tree."""
    rng = np.random.default_rng(seed)
    for _ in range(max_tries):
        pts = rng.normal(size=(4, 3))
        pts[:, 2] *= 0.05
        try:
            p = Polytope3.from_vertices(pts, name="sliver_tetrahedron", normalize=True)
        except GeometryError:
            continue
        for a, b, c, d in ((0, 1, 2, 3), (0, 2, 1, 3), (0, 1, 3, 2)):
            tree = DualSpanningTree(_canon((a, b), (b, c), (c, d)), root=a)
            if not unfold(p, tree).injective:
                return p, tree
    raise RuntimeError("no overlapping tetrahedron unfolding found")


def _canon(*edges: tuple[int, int]) -> tuple[tuple[int, int], ...]:
    return tuple(sorted((min(a, b), max(a, b)) for a, b in edges))
