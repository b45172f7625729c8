"""Low-level geometry: 3D convex hulls, polar duality, isometries, overlap tests.

Everything is plain float64 numpy with explicit tolerances.  Inputs are
expected to be pre-scaled to roughly unit size (catalog models use
circumradius 1); scale-sensitive checks widen their epsilon with the input.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np
from scipy.spatial import ConvexHull, QhullError, cKDTree


class GeometryError(Exception):
    """Base class for geometric failures."""


class DegenerateInput(GeometryError):
    """Point set does not affinely span 3-space (or hull construction broke down)."""


class OriginNotInterior(GeometryError):
    """Polar duality requires the origin strictly inside the polytope."""


class DegeneratePolygon(GeometryError):
    """2D polygon has area below tolerance."""


class EdgeNotOnPlanes(GeometryError):
    """Hinge edge does not lie on both facet planes."""


@dataclass(frozen=True)
class ToleranceConfig:
    """Absolute epsilon for coincidence tests, relative epsilon for comparisons."""

    absolute: float = 1e-9
    relative: float = 1e-9

    def __post_init__(self):
        if not (self.absolute > 0 and self.relative > 0):
            raise ValueError("tolerances must be strictly positive")

    def length(self, scale: float) -> float:
        """Epsilon for comparing lengths at the given scale."""
        return max(self.absolute, self.relative * abs(scale))


DEFAULT_TOL = ToleranceConfig()

# Adjacent hull triangles are merged into one facet when their dihedral angle
# deviates from pi by less than this (radians).
FACET_MERGE_ANGLE = 1e-8


def _as_points(points, dim: int) -> np.ndarray:
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 2 or pts.shape[1] != dim:
        raise ValueError(f"expected an (n, {dim}) array of points, got shape {pts.shape}")
    if not np.all(np.isfinite(pts)):
        raise ValueError("coordinates must be finite")
    return pts


def _unit(v: np.ndarray) -> np.ndarray:
    n = np.linalg.norm(v)
    if n == 0.0:
        raise ValueError("cannot normalize a zero vector")
    return v / n


class UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        if ry < rx:
            rx, ry = ry, rx
        self.parent[ry] = rx
        return True

    def copy(self) -> "UnionFind":
        uf = UnionFind.__new__(UnionFind)
        uf.parent = self.parent.copy()
        return uf


# ---------------------------------------------------------------------------
# planar isometries and 3D rigid motions


@dataclass(frozen=True)
class PlanarIsometry:
    """2D isometry x -> M @ x + t with M orthogonal (det +1 or -1)."""

    matrix: np.ndarray
    translation: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=float).reshape(2, 2)
        t = np.asarray(self.translation, dtype=float).reshape(2)
        if not np.allclose(m.T @ m, np.eye(2), atol=1e-9):
            raise ValueError("linear part is not orthogonal")
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "translation", t)
        m.setflags(write=False)
        t.setflags(write=False)

    @property
    def determinant(self) -> float:
        return float(np.linalg.det(self.matrix))

    def apply(self, points) -> np.ndarray:
        pts = np.asarray(points, dtype=float)
        return pts @ self.matrix.T + self.translation

    def compose(self, other: "PlanarIsometry") -> "PlanarIsometry":
        """Return self after other: (self.compose(other)).apply(x) == self.apply(other.apply(x))."""
        return PlanarIsometry(self.matrix @ other.matrix,
                              self.matrix @ other.translation + self.translation)

    def inverse(self) -> "PlanarIsometry":
        inv = self.matrix.T
        return PlanarIsometry(inv, -inv @ self.translation)

    @classmethod
    def identity(cls) -> "PlanarIsometry":
        return cls(np.eye(2), np.zeros(2))

    @classmethod
    def rotation(cls, angle: float, pivot=(0.0, 0.0)) -> "PlanarIsometry":
        c, s = np.cos(angle), np.sin(angle)
        m = np.array([[c, -s], [s, c]])
        p = np.asarray(pivot, dtype=float)
        return cls(m, p - m @ p)

    @classmethod
    def from_edge_map(cls, p0, p1, q0, q1, mirrored: bool = False) -> "PlanarIsometry":
        """Isometry taking directed segment p0->p1 onto q0->q1.

        Segment lengths must agree (not checked here).  With ``mirrored`` the
        linear part is a reflection, otherwise a rotation.
        """
        p0, p1, q0, q1 = (np.asarray(v, dtype=float) for v in (p0, p1, q0, q1))
        tp = np.arctan2(*(p1 - p0)[::-1])
        tq = np.arctan2(*(q1 - q0)[::-1])
        if mirrored:
            a = tq + tp
            c, s = np.cos(a), np.sin(a)
            m = np.array([[c, s], [s, -c]])  # reflection across line at angle a/2
        else:
            a = tq - tp
            c, s = np.cos(a), np.sin(a)
            m = np.array([[c, -s], [s, c]])
        return cls(m, q0 - m @ p0)


@dataclass(frozen=True)
class RigidMotion3:
    """3D rigid motion x -> R @ x + t."""

    rotation: np.ndarray
    translation: np.ndarray

    def __post_init__(self):
        r = np.asarray(self.rotation, dtype=float).reshape(3, 3)
        t = np.asarray(self.translation, dtype=float).reshape(3)
        object.__setattr__(self, "rotation", r)
        object.__setattr__(self, "translation", t)
        r.setflags(write=False)
        t.setflags(write=False)

    def apply(self, points) -> np.ndarray:
        pts = np.asarray(points, dtype=float)
        return pts @ self.rotation.T + self.translation

    def compose(self, other: "RigidMotion3") -> "RigidMotion3":
        return RigidMotion3(self.rotation @ other.rotation,
                            self.rotation @ other.translation + self.translation)

    @classmethod
    def identity(cls) -> "RigidMotion3":
        return cls(np.eye(3), np.zeros(3))

    @classmethod
    def about_axis(cls, point, direction, angle: float) -> "RigidMotion3":
        """Rotation by ``angle`` about the line through ``point`` along ``direction``."""
        p = np.asarray(point, dtype=float)
        u = _unit(np.asarray(direction, dtype=float))
        c, s = np.cos(angle), np.sin(angle)
        ux, uy, uz = u
        cross = np.array([[0.0, -uz, uy], [uz, 0.0, -ux], [-uy, ux, 0.0]])
        r = c * np.eye(3) + s * cross + (1.0 - c) * np.outer(u, u)
        return cls(r, p - r @ p)


def hinge_rotation_to_plane(child_plane, edge, parent_plane,
                            tol: ToleranceConfig = DEFAULT_TOL) -> RigidMotion3:
    """Rigid motion rotating the child facet about the shared edge into the parent plane.

    Planes are (unit outward normal, offset) pairs with n . x = d on the plane.
    The rotation maps the child's outward normal onto the parent's, which for
    a convex solid lays the child flat on the far side of the hinge edge.
    Coplanar facets yield the identity.
    """
    n_c, d_c = child_plane
    n_p, d_p = parent_plane
    n_c = _unit(np.asarray(n_c, dtype=float))
    n_p = _unit(np.asarray(n_p, dtype=float))
    a = np.asarray(edge[0], dtype=float)
    b = np.asarray(edge[1], dtype=float)
    scale = max(1.0, np.linalg.norm(a), np.linalg.norm(b))
    eps = 1e3 * tol.length(scale)  # plane fits carry a little noise of their own
    for pt in (a, b):
        if abs(float(n_c @ pt) - d_c) > eps or abs(float(n_p @ pt) - d_p) > eps:
            raise EdgeNotOnPlanes("hinge edge endpoint is not on both facet planes")
    axis = b - a
    if np.linalg.norm(axis) <= tol.absolute:
        raise EdgeNotOnPlanes("hinge edge is degenerate")
    u = _unit(axis)
    angle = np.arctan2(float(np.cross(n_c, n_p) @ u), float(n_c @ n_p))
    return RigidMotion3.about_axis(a, u, angle)


# ---------------------------------------------------------------------------
# 3D convex hull with coplanar facet merging


@dataclass(frozen=True)
class HullMesh:
    """Convex hull as vertex coordinates plus facet cycles.

    Facet cycles are counterclockwise viewed from outside; coplanar adjacent
    triangles have been merged, so facets are genuine polygons.
    """

    vertices: np.ndarray
    facets: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        v = np.ascontiguousarray(np.asarray(self.vertices, dtype=float))
        object.__setattr__(self, "vertices", v)
        v.setflags(write=False)

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def n_facets(self) -> int:
        return len(self.facets)

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        seen = set()
        for cycle in self.facets:
            n = len(cycle)
            for i in range(n):
                a, b = cycle[i], cycle[(i + 1) % n]
                seen.add((a, b) if a < b else (b, a))
        return tuple(sorted(seen))

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    @cached_property
    def facet_planes(self) -> tuple[np.ndarray, np.ndarray]:
        """(unit outward normals (F,3), offsets (F,)) with n . x = d on each facet."""
        normals = np.empty((self.n_facets, 3))
        offsets = np.empty(self.n_facets)
        for i, cycle in enumerate(self.facets):
            n, d = newell_plane(self.vertices[list(cycle)])
            normals[i] = n
            offsets[i] = d
        normals.setflags(write=False)
        offsets.setflags(write=False)
        return normals, offsets

    def facet_adjacency(self) -> list[tuple[int, int, tuple[int, int]]]:
        """(facet_a, facet_b, shared primal edge) for every pair sharing an edge."""
        owners: dict[tuple[int, int], list[int]] = {}
        for f, cycle in enumerate(self.facets):
            n = len(cycle)
            for i in range(n):
                a, b = cycle[i], cycle[(i + 1) % n]
                owners.setdefault((a, b) if a < b else (b, a), []).append(f)
        out = []
        for edge in sorted(owners):
            fs = owners[edge]
            if len(fs) != 2:
                raise GeometryError(f"edge {edge} lies in {len(fs)} facets, expected 2")
            fa, fb = sorted(fs)
            out.append((fa, fb, edge))
        return out


def newell_plane(points: np.ndarray) -> tuple[np.ndarray, float]:
    """Best-fit plane of a polygon cycle, Newell's method.

    Returns (unit normal, offset); the normal follows the cycle's orientation
    (outward for counterclockwise-from-outside cycles).
    """
    pts = np.asarray(points, dtype=float)
    nxt = np.roll(pts, -1, axis=0)
    normal = np.cross(pts, nxt).sum(axis=0)
    norm = np.linalg.norm(normal)
    if norm == 0.0:
        raise DegenerateInput("degenerate facet cycle (zero area)")
    normal = normal / norm
    return normal, float(normal @ pts.mean(axis=0))


def _dedupe_points(pts: np.ndarray, radius: float) -> np.ndarray:
    """Indices of representative points, collapsing clusters within radius."""
    pairs = cKDTree(pts).query_pairs(r=radius)
    if not pairs:
        return np.arange(len(pts))
    uf = UnionFind(len(pts))
    for i, j in pairs:
        uf.union(i, j)
    return np.array([i for i in range(len(pts)) if uf.find(i) == i])


def convex_hull_3(points, tol: ToleranceConfig = DEFAULT_TOL,
                  merge_angle: float = FACET_MERGE_ANGLE) -> HullMesh:
    """Convex hull of 3D points with near-coplanar triangles merged into polygons.

    Deterministic for a fixed input order.  Duplicate points within the
    absolute tolerance are silently collapsed; interior points are dropped.
    Raises DegenerateInput when the points do not affinely span 3-space.
    """
    pts = _as_points(points, 3)
    if len(pts) < 4:
        raise DegenerateInput("need at least 4 points")
    keep = _dedupe_points(pts, tol.absolute)
    pts = pts[keep]
    if len(pts) < 4:
        raise DegenerateInput("fewer than 4 distinct points")

    centered = pts - pts.mean(axis=0)
    sv = np.linalg.svd(centered, compute_uv=False)
    if sv[2] <= max(tol.absolute, tol.relative * sv[0]):
        raise DegenerateInput("points do not affinely span 3-space")

    try:
        hull = ConvexHull(pts)
    except QhullError as exc:  # rank check should have caught this
        raise DegenerateInput(f"hull construction failed: {exc}") from exc

    simplices = hull.simplices
    normals = hull.equations[:, :3]  # outward unit normals per qhull convention

    # Merge neighbouring triangles whose planes agree to within merge_angle.
    uf = UnionFind(len(simplices))
    for i, nbrs in enumerate(hull.neighbors):
        for j in nbrs:
            if j > i:
                if normals[i] @ normals[j] > 0.0 and \
                        np.linalg.norm(np.cross(normals[i], normals[j])) < merge_angle:
                    uf.union(i, int(j))
    groups: dict[int, list[int]] = {}
    for i in range(len(simplices)):
        groups.setdefault(uf.find(i), []).append(i)

    facets = []
    for members in groups.values():
        cycle = _trace_facet_boundary(simplices[members], pts, normals[members[0]])
        facets.append(cycle)

    used = sorted({v for cycle in facets for v in cycle})
    remap = {old: new for new, old in enumerate(used)}
    vertices = pts[used]
    cycles = []
    for cycle in facets:
        mapped = [remap[v] for v in cycle]
        k = mapped.index(min(mapped))
        cycles.append(tuple(mapped[k:] + mapped[:k]))
    cycles.sort()
    mesh = HullMesh(vertices, tuple(cycles))

    # Post-condition: no deduped input point lies outside any facet plane.
    fn, fo = mesh.facet_planes
    slack = tol.length(np.abs(pts).max())
    if np.any(pts @ fn.T - fo > 10 * slack):
        raise GeometryError("hull post-check failed: input point outside a facet plane")
    return mesh


def _trace_facet_boundary(tris: np.ndarray, pts: np.ndarray, normal: np.ndarray) -> list[int]:
    """Boundary cycle of a union of coplanar triangles, counterclockwise about normal."""
    count: dict[tuple[int, int], int] = {}
    for tri in tris:
        for a, b in ((tri[0], tri[1]), (tri[1], tri[2]), (tri[2], tri[0])):
            e = (a, b) if a < b else (b, a)
            count[e] = count.get(e, 0) + 1
    boundary = [e for e, c in count.items() if c == 1]
    adj: dict[int, list[int]] = {}
    for a, b in boundary:
        adj.setdefault(int(a), []).append(int(b))
        adj.setdefault(int(b), []).append(int(a))
    if any(len(v) != 2 for v in adj.values()):
        raise DegenerateInput("merged facet boundary is not a simple cycle")

    start = min(adj)
    cycle = [start, min(adj[start])]
    while True:
        prev, cur = cycle[-2], cycle[-1]
        nxt = adj[cur][1] if adj[cur][0] == prev else adj[cur][0]
        if nxt == start:
            break
        cycle.append(nxt)
    if len(cycle) != len(boundary):
        raise DegenerateInput("merged facet boundary is not a single cycle")

    # Orient counterclockwise as seen from outside (against the outward normal).
    u = _unit(np.cross(normal, pts[cycle[0]] - pts[cycle[1]]))
    v = np.cross(normal, u)
    xy = (pts[cycle] - pts[cycle[0]]) @ np.column_stack([u, v])
    nxt = np.roll(xy, -1, axis=0)
    area2 = float((xy[:, 0] * nxt[:, 1] - xy[:, 1] * nxt[:, 0]).sum())
    if area2 < 0.0:
        cycle.reverse()
    return cycle


def polar_dual(hull: HullMesh, tol: ToleranceConfig = DEFAULT_TOL) -> HullMesh:
    """Polar dual: facet planes n . x = d map to dual vertices n / d.

    Requires the origin strictly inside; facets of the input correspond to
    vertices of the output and vice versa.
    """
    normals, offsets = hull.facet_planes
    if np.min(offsets) <= tol.absolute:
        raise OriginNotInterior("origin is not strictly inside the hull")
    return convex_hull_3(normals / offsets[:, None], tol)


# ---------------------------------------------------------------------------
# 2D convex polygon predicates


def polygon_area(polygon) -> float:
    """Signed area (positive for counterclockwise cycles)."""
    p = _as_points(polygon, 2)
    q = np.roll(p, -1, axis=0)
    return 0.5 * float((p[:, 0] * q[:, 1] - p[:, 1] * q[:, 0]).sum())


def _edge_normals(poly: np.ndarray) -> np.ndarray:
    d = np.roll(poly, -1, axis=0) - poly
    lengths = np.hypot(d[:, 0], d[:, 1])
    good = lengths > 1e-15
    n = np.column_stack([-d[good, 1], d[good, 0]]) / lengths[good, None]
    return n


def polygons_overlap(a, b, tol: ToleranceConfig = DEFAULT_TOL) -> bool:
    """True iff the interiors of two convex polygons intersect.

    Boundary contact within tolerance (shared edges, vertex touches) does not
    count as overlap.  Separating-axis test over the edge normals of both
    polygons; polygons must be convex and counterclockwise.
    """
    pa = _as_points(a, 2)
    pb = _as_points(b, 2)
    if abs(polygon_area(pa)) <= tol.absolute or abs(polygon_area(pb)) <= tol.absolute:
        raise DegeneratePolygon("polygon area below tolerance")
    axes = np.vstack([_edge_normals(pa), _edge_normals(pb)])
    proj_a = pa @ axes.T
    proj_b = pb @ axes.T
    overlap = np.minimum(proj_a.max(axis=0), proj_b.max(axis=0)) - \
        np.maximum(proj_a.min(axis=0), proj_b.min(axis=0))
    return bool(np.all(overlap > tol.absolute))
