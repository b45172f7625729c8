"""Built-in solid catalog: the five regular solids, selected semi-regular ones
built by truncation/rectification, their duals, and hand-picked look-alike
triplets for the hardest game level.

All models are centered at the vertex centroid with circumradius 1.
"""

from __future__ import annotations

import math

import numpy as np

from .polytope import Polytope3, UnknownName

PHI = (1.0 + math.sqrt(5.0)) / 2.0

PLATONIC_NAMES = ("tetrahedron", "cube", "octahedron", "dodecahedron", "icosahedron")
ARCHIMEDEAN_NAMES = ("truncated_tetrahedron", "truncated_octahedron", "truncated_cube",
                     "cuboctahedron", "icosidodecahedron")
CATALAN_NAMES = ("triakis_tetrahedron", "tetrakis_hexahedron", "triakis_octahedron",
                 "rhombic_dodecahedron", "rhombic_triacontahedron")
CATALOG_NAMES = PLATONIC_NAMES + ARCHIMEDEAN_NAMES + CATALAN_NAMES

# dual partners: Archimedean name -> Catalan name
_DUAL_OF = dict(zip(ARCHIMEDEAN_NAMES, CATALAN_NAMES))

CURATED_TRIPLETS = (
    ("square_pyramid", "pentagonal_pyramid", "hexagonal_pyramid"),
    ("square_antiprism", "pentagonal_antiprism", "hexagonal_antiprism"),
)
CURATED_NAMES = tuple(name for triplet in CURATED_TRIPLETS for name in triplet)


def _signs(base):
    pts = []
    for mask in range(8):
        s = [(1 if mask >> i & 1 else -1) for i in range(3)]
        if any(b == 0 and sg < 0 for b, sg in zip(base, s)):
            continue  # avoid duplicating zero coordinates
        pts.append([sg * b for sg, b in zip(s, base)])
    return pts


def _cyclic(base):
    b = list(base)
    return [b, [b[2], b[0], b[1]], [b[1], b[2], b[0]]]


def _platonic_vertices(name: str) -> np.ndarray:
    if name == "tetrahedron":
        return np.array([[1, 1, 1], [1, -1, -1], [-1, 1, -1], [-1, -1, 1]], dtype=float)
    if name == "cube":
        return np.array(_signs([1, 1, 1]), dtype=float)
    if name == "octahedron":
        return np.array(_signs([1, 0, 0]) + _signs([0, 1, 0]) + _signs([0, 0, 1]), dtype=float)
    if name == "icosahedron":
        pts = []
        for base in _cyclic([0.0, 1.0, PHI]):
            pts.extend(_signs(base))
        return np.array(pts, dtype=float)
    if name == "dodecahedron":
        pts = _signs([1.0, 1.0, 1.0])
        for base in _cyclic([0.0, 1.0 / PHI, PHI]):
            pts.extend(_signs(base))
        return np.array(pts, dtype=float)
    raise UnknownName(name)


def platonic_solid(name: str) -> Polytope3:
    """One of the five regular solids at circumradius 1."""
    return Polytope3.from_vertices(_platonic_vertices(name), name=name, normalize=True)


def _truncate(p: Polytope3, fraction: float, name: str) -> Polytope3:
    """Cut every vertex by splitting each edge at ``fraction`` from both ends."""
    pts = []
    for a, b in p.edges:
        va, vb = p.vertices[a], p.vertices[b]
        pts.append(va + fraction * (vb - va))
        pts.append(vb + fraction * (va - vb))
    return Polytope3.from_vertices(np.array(pts), name=name, normalize=True)


def _rectify(p: Polytope3, name: str) -> Polytope3:
    """Convex hull of the edge midpoints."""
    pts = np.array([(p.vertices[a] + p.vertices[b]) / 2.0 for a, b in p.edges])
    return Polytope3.from_vertices(pts, name=name, normalize=True)


def _archimedean_solid(name: str) -> Polytope3:
    if name == "truncated_tetrahedron":
        return _truncate(platonic_solid("tetrahedron"), 1.0 / 3.0, name)
    if name == "truncated_octahedron":
        return _truncate(platonic_solid("octahedron"), 1.0 / 3.0, name)
    if name == "truncated_cube":
        # truncation depth that makes the octagons regular
        return _truncate(platonic_solid("cube"), 1.0 - math.sqrt(2.0) / 2.0, name)
    if name == "cuboctahedron":
        return _rectify(platonic_solid("cube"), name)
    if name == "icosidodecahedron":
        return _rectify(platonic_solid("icosahedron"), name)
    raise UnknownName(name)


def _pyramid(n: int, name: str) -> Polytope3:
    """Pyramid over a regular n-gon; apex height gives equal lateral edges
    where possible (n < 6), else a fixed squat height."""
    base = [[math.cos(2 * math.pi * i / n), math.sin(2 * math.pi * i / n), 0.0]
            for i in range(n)]
    side = 2 * math.sin(math.pi / n)
    height = math.sqrt(side * side - 1.0) if side > 1.0 else 0.8
    pts = np.array(base + [[0.0, 0.0, height]])
    return Polytope3.from_vertices(pts, name=name, normalize=True)


def _antiprism(n: int, name: str) -> Polytope3:
    """Uniform n-antiprism: two offset n-gon rings joined by triangles."""
    h = math.sqrt((math.cos(math.pi / n) - math.cos(2 * math.pi / n)) / 2.0)
    pts = []
    for i in range(n):
        a = 2 * math.pi * i / n
        pts.append([math.cos(a), math.sin(a), h])
        pts.append([math.cos(a + math.pi / n), math.sin(a + math.pi / n), -h])
    return Polytope3.from_vertices(np.array(pts), name=name, normalize=True)


def _curated_solid(name: str) -> Polytope3:
    n = {"square": 4, "pentagonal": 5, "hexagonal": 6}[name.split("_")[0]]
    if name.endswith("_pyramid"):
        return _pyramid(n, name)
    if name.endswith("_antiprism"):
        return _antiprism(n, name)
    raise UnknownName(name)


def catalog_solid(name: str) -> Polytope3:
    """Any built-in solid by its stable snake_case name."""
    if name in PLATONIC_NAMES:
        return platonic_solid(name)
    if name in ARCHIMEDEAN_NAMES:
        return _archimedean_solid(name)
    if name in CATALAN_NAMES:
        partner = next(a for a, c in _DUAL_OF.items() if c == name)
        return _archimedean_solid(partner).dual(name=name)
    if name in CURATED_NAMES:
        return _curated_solid(name)
    raise UnknownName(name)


def builtin_catalog() -> list[Polytope3]:
    """All catalog solids (regular + semi-regular + duals), names unique."""
    return [catalog_solid(name) for name in CATALOG_NAMES]


def curated_triplets() -> list[list[Polytope3]]:
    """Hand-picked triples of similar-looking, combinatorially distinct solids."""
    return [[catalog_solid(name) for name in triplet] for triplet in CURATED_TRIPLETS]
