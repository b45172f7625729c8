"""Polytope3: facet-lattice combinatorics, vertex/dual graphs, colors, OFF files."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .geometry import (
    DEFAULT_TOL,
    GeometryError,
    HullMesh,
    ToleranceConfig,
    UnionFind,
    convex_hull_3,
    newell_plane,
    polar_dual,
)


class InvalidPolytope(GeometryError):
    """Vertex/facet data does not describe a valid convex 3-polytope."""


class NotConvex(InvalidPolytope):
    pass


class NonPlanarFacet(InvalidPolytope):
    pass


class UnknownName(KeyError):
    pass


class ParseError(ValueError):
    """OFF syntax error, carrying the offending 1-based line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


# ---------------------------------------------------------------------------
# facet colors


@dataclass(frozen=True)
class FacetColor:
    name: str
    rgb: tuple[int, int, int]


GREEN = FacetColor("green", (0, 128, 0))
BLUE = FacetColor("blue", (0, 0, 255))
PURPLE = FacetColor("purple", (128, 0, 128))
RED = FacetColor("red", (255, 0, 0))
GRAY = FacetColor("gray", (128, 128, 128))

_GONALITY_COLORS = {3: GREEN, 4: BLUE, 5: PURPLE, 6: RED}


def gonality_color(facet_size: int) -> FacetColor:
    """Color keyed by the number of vertices of a facet: 3 green, 4 blue, 5 purple, 6 red, rest gray."""
    if facet_size < 3:
        raise ValueError("a facet has at least 3 vertices")
    return _GONALITY_COLORS.get(facet_size, GRAY)


# ---------------------------------------------------------------------------
# graphs


@dataclass(frozen=True)
class VertexEdgeGraph:
    """Vertex-edge graph of a 3-polytope (undirected, connected, planar)."""

    n_vertices: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if not _connected(self.n_vertices, self.edges):
            raise GeometryError("vertex-edge graph is not connected")
        if len(self.edges) > 3 * self.n_vertices - 6:
            raise GeometryError("edge count violates the planarity bound")


@dataclass(frozen=True)
class DualGraph:
    """One node per facet, one edge per facet pair sharing a polytope edge.

    ``primal_edges[i]`` is the polytope edge crossed by ``edges[i]``; the two
    lists realize the bijection between primal and dual edges.
    """

    n_nodes: int
    edges: tuple[tuple[int, int], ...]
    primal_edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if len(self.edges) != len(self.primal_edges):
            raise GeometryError("dual/primal edge lists must be parallel")
        if not _connected(self.n_nodes, self.edges):
            raise GeometryError("dual graph is not connected")

    def primal_of(self, dual_edge: tuple[int, int]) -> tuple[int, int]:
        a, b = dual_edge
        key = (a, b) if a < b else (b, a)
        return self._primal_map[key]

    @cached_property
    def _primal_map(self) -> dict[tuple[int, int], tuple[int, int]]:
        return dict(zip(self.edges, self.primal_edges))

    def neighbors(self) -> list[list[tuple[int, tuple[int, int]]]]:
        """Adjacency lists: for each facet, (neighbor facet, shared primal edge)."""
        adj: list[list[tuple[int, tuple[int, int]]]] = [[] for _ in range(self.n_nodes)]
        for (a, b), pe in zip(self.edges, self.primal_edges):
            adj[a].append((b, pe))
            adj[b].append((a, pe))
        return adj


def _connected(n: int, edges) -> bool:
    if n <= 0:
        return False
    uf = UnionFind(n)
    parts = n
    for a, b in edges:
        if uf.union(a, b):
            parts -= 1
    return parts == 1


# ---------------------------------------------------------------------------
# the polytope itself


@dataclass(frozen=True)
class Polytope3:
    """Convex 3-polytope: vertex coordinates plus facet cycles.

    Facet cycles are counterclockwise viewed from outside.  Instances are
    immutable and validated on construction.
    """

    vertices: np.ndarray
    facets: tuple[tuple[int, ...], ...]
    name: str = ""
    colors: tuple[FacetColor, ...] | None = None

    def __post_init__(self):
        v = np.ascontiguousarray(np.asarray(self.vertices, dtype=float))
        object.__setattr__(self, "vertices", v)
        object.__setattr__(self, "facets", tuple(tuple(int(i) for i in c) for c in self.facets))
        v.setflags(write=False)
        self.validate()

    # -- construction -------------------------------------------------------

    @classmethod
    def from_vertices(cls, points, name: str = "", normalize: bool = False,
                      tol: ToleranceConfig = DEFAULT_TOL) -> "Polytope3":
        """Convex hull of a rank-3 point set; interior points are discarded."""
        mesh = convex_hull_3(points, tol)
        verts = mesh.vertices
        if normalize:
            verts = _normalized(verts)
        return cls(verts, mesh.facets, name=name)

    @classmethod
    def from_hull_mesh(cls, mesh: HullMesh, name: str = "",
                       normalize: bool = False) -> "Polytope3":
        verts = _normalized(mesh.vertices) if normalize else mesh.vertices
        return cls(verts, mesh.facets, name=name)

    def dual(self, name: str = "", tol: ToleranceConfig = DEFAULT_TOL) -> "Polytope3":
        """Polar dual, renormalized to circumradius 1."""
        mesh = polar_dual(self.hull_mesh, tol)
        return Polytope3.from_hull_mesh(mesh, name=name, normalize=True)

    # -- basic accessors -----------------------------------------------------

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def n_facets(self) -> int:
        return len(self.facets)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return self.hull_mesh.edges

    @cached_property
    def hull_mesh(self) -> HullMesh:
        return HullMesh(self.vertices, self.facets)

    @cached_property
    def facet_planes(self) -> tuple[np.ndarray, np.ndarray]:
        """(unit outward normals, offsets): n . x = d on each facet plane."""
        return self.hull_mesh.facet_planes

    @property
    def circumradius(self) -> float:
        return float(np.linalg.norm(self.vertices, axis=1).max())

    def facet_sizes(self) -> list[int]:
        return [len(c) for c in self.facets]

    def facet_colors(self, rule: str = "gonality") -> tuple[FacetColor, ...]:
        """Per-facet colors; rule 'gonality' or 'green' (uniform)."""
        if self.colors is not None:
            return self.colors
        if rule == "gonality":
            return tuple(gonality_color(len(c)) for c in self.facets)
        if rule == "green":
            return tuple(GREEN for _ in self.facets)
        raise ValueError(f"unknown color rule {rule!r}")

    # -- graphs --------------------------------------------------------------

    def graph(self) -> VertexEdgeGraph:
        return VertexEdgeGraph(self.n_vertices, self.edges)

    @cached_property
    def _dual_graph(self) -> DualGraph:
        adjacency = self.hull_mesh.facet_adjacency()
        dual_edges = tuple((fa, fb) for fa, fb, _ in adjacency)
        primal = tuple(edge for _, _, edge in adjacency)
        return DualGraph(self.n_facets, dual_edges, primal)

    def dual_graph(self) -> DualGraph:
        return self._dual_graph

    # -- validation ----------------------------------------------------------

    def validate(self, tol: ToleranceConfig = DEFAULT_TOL) -> None:
        """Check all structural invariants; raises InvalidPolytope subclasses."""
        v, f = self.n_vertices, self.n_facets
        if v < 4 or f < 4:
            raise InvalidPolytope("a 3-polytope has at least 4 vertices and 4 facets")
        if not np.all(np.isfinite(self.vertices)):
            raise InvalidPolytope("vertex coordinates must be finite")
        for cycle in self.facets:
            if len(cycle) < 3:
                raise InvalidPolytope("facet cycles need at least 3 vertices")
            if len(set(cycle)) != len(cycle):
                raise InvalidPolytope("facet cycle repeats a vertex")
            if not all(0 <= i < v for i in cycle):
                raise InvalidPolytope("facet cycle references a missing vertex")

        # every edge in exactly two facets, and Euler's relation
        owners: dict[tuple[int, int], int] = {}
        for cycle in self.facets:
            n = len(cycle)
            for i in range(n):
                a, b = cycle[i], cycle[(i + 1) % n]
                e = (a, b) if a < b else (b, a)
                owners[e] = owners.get(e, 0) + 1
        if any(c != 2 for c in owners.values()):
            raise NotConvex("not a closed surface: some edge is not in exactly 2 facets")
        e = len(owners)
        if v - e + f != 2:
            raise NotConvex(f"Euler relation violated: V-E+F = {v - e + f}")

        scale = max(1.0, self.circumradius)
        eps = tol.length(scale)

        # planarity and convexity
        normals = np.empty((f, 3))
        offsets = np.empty(f)
        for i, cycle in enumerate(self.facets):
            pts = self.vertices[list(cycle)]
            n, d = newell_plane(pts)
            if np.abs(pts @ n - d).max() > eps:
                raise NonPlanarFacet(f"facet {i} deviates from its plane beyond tolerance")
            normals[i] = n
            offsets[i] = d
        if np.any(self.vertices @ normals.T - offsets > 10 * eps):
            raise NotConvex("some vertex lies outside a facet plane")

        # all vertices extreme: each in >= 3 facets whose normals span 3-space
        incident: list[list[int]] = [[] for _ in range(v)]
        for i, cycle in enumerate(self.facets):
            for vi in cycle:
                incident[vi].append(i)
        for vi, facs in enumerate(incident):
            if len(facs) < 3:
                raise NotConvex(f"vertex {vi} lies in {len(facs)} facets; not extreme")
            if np.linalg.svd(normals[facs], compute_uv=False)[2] < 1e-10:
                raise NotConvex(f"vertex {vi} is a flat corner; not extreme")


def _normalized(vertices: np.ndarray) -> np.ndarray:
    """Center on the vertex centroid and scale to circumradius 1."""
    centered = vertices - vertices.mean(axis=0)
    return centered / np.linalg.norm(centered, axis=1).max()


# ---------------------------------------------------------------------------
# OFF serialization


def load_off(text: str, tol: ToleranceConfig = DEFAULT_TOL) -> Polytope3:
    """Parse an ASCII OFF file into a validated Polytope3.

    Rejects non-convex solids and non-planar facets; facet orientation is
    normalized to counterclockwise-from-outside.
    """
    lines = text.splitlines()
    content: list[tuple[int, str]] = []
    for lineno, raw in enumerate(lines, start=1):
        stripped = raw.split("#", 1)[0].strip()
        if stripped:
            content.append((lineno, stripped))
    if not content:
        raise ParseError("empty file", 1)

    pos = 0
    lineno, header = content[pos]
    pos += 1
    if header != "OFF":
        raise ParseError(f"expected OFF header, got {header!r}", lineno)

    lineno, counts = content[pos] if pos < len(content) else (lineno, "")
    pos += 1
    parts = counts.split()
    if len(parts) != 3:
        raise ParseError("expected counts line 'V F E'", lineno)
    try:
        nv, nf, _ne = (int(p) for p in parts)
    except ValueError:
        raise ParseError("counts must be integers", lineno) from None
    if nv < 4 or nf < 4:
        raise ParseError("need at least 4 vertices and 4 facets", lineno)

    vertices = np.empty((nv, 3))
    for i in range(nv):
        if pos >= len(content):
            raise ParseError("unexpected end of file in vertex block", lines and len(lines) or 1)
        lineno, line = content[pos]
        pos += 1
        fields = line.split()
        if len(fields) != 3:
            raise ParseError(f"expected 3 coordinates, got {len(fields)}", lineno)
        try:
            vertices[i] = [float(x) for x in fields]
        except ValueError:
            raise ParseError("bad coordinate", lineno) from None
    if not np.all(np.isfinite(vertices)):
        raise ParseError("non-finite coordinate in vertex block", content[pos - 1][0])

    facets: list[list[int]] = []
    for _ in range(nf):
        if pos >= len(content):
            raise ParseError("unexpected end of file in facet block", lines and len(lines) or 1)
        lineno, line = content[pos]
        pos += 1
        fields = line.split()
        try:
            n = int(fields[0])
            idx = [int(x) for x in fields[1:]]
        except (ValueError, IndexError):
            raise ParseError("bad facet line", lineno) from None
        if n < 3:
            raise ParseError(f"facet with {n} vertices", lineno)
        if len(idx) != n:
            raise ParseError(f"facet declares {n} vertices but lists {len(idx)}", lineno)
        if any(not 0 <= i < nv for i in idx):
            raise ParseError("facet index out of range", lineno)
        facets.append(idx)

    # Normalize orientation: outward means away from the solid's centroid.
    centroid = vertices.mean(axis=0)
    oriented = []
    for cycle in facets:
        pts = vertices[cycle]
        n, d = newell_plane(pts)
        if n @ centroid > d:
            cycle = list(reversed(cycle))
        oriented.append(tuple(cycle))

    return Polytope3(vertices, tuple(oriented))


def write_off(p: Polytope3) -> str:
    """Serialize to ASCII OFF with 17 significant digits."""
    out = ["OFF", f"{p.n_vertices} {p.n_facets} {p.n_edges}"]
    for v in p.vertices:
        out.append(" ".join(format(x, ".17g") for x in v))
    for cycle in p.facets:
        out.append(" ".join([str(len(cycle))] + [str(i) for i in cycle]))
    return "\n".join(out) + "\n"
