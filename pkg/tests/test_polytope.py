import numpy as np
import pytest

from polynet.catalog import (
    ARCHIMEDEAN_NAMES,
    CATALOG_NAMES,
    PLATONIC_NAMES,
    builtin_catalog,
    catalog_solid,
    platonic_solid,
)
from polynet.polytope import (
    BLUE,
    GRAY,
    GREEN,
    PURPLE,
    RED,
    Polytope3,
    UnknownName,
    gonality_color,
)


def test_cube_from_vertices():
    cube = Polytope3.from_vertices([[x, y, z] for x in (-1, 1) for y in (-1, 1) for z in (-1, 1)])
    assert cube.n_facets == 6
    assert cube.n_vertices == 8
    assert cube.n_edges == 12


def test_octahedron_from_axis_points():
    pts = np.vstack([np.eye(3), -np.eye(3)])
    p = Polytope3.from_vertices(pts)
    assert p.n_facets == 8
    assert all(len(c) == 3 for c in p.facets)


def test_icosahedron_counts():
    p = platonic_solid("icosahedron")
    assert (p.n_vertices, p.n_edges, p.n_facets) == (12, 30, 20)


def test_dodecahedron_counts():
    p = platonic_solid("dodecahedron")
    assert (p.n_vertices, p.n_edges, p.n_facets) == (20, 30, 12)
    assert all(len(c) == 5 for c in p.facets)


def test_platonic_unknown_name():
    with pytest.raises(UnknownName):
        platonic_solid("hypercube")
    with pytest.raises(UnknownName):
        catalog_solid("grand_antiprism")


def test_platonic_circumradius_one():
    for name in PLATONIC_NAMES:
        p = platonic_solid(name)
        radii = np.linalg.norm(p.vertices, axis=1)
        assert np.allclose(radii, 1.0, atol=1e-12)


def test_tetrahedron_dual_graph_is_k4():
    p = platonic_solid("tetrahedron")
    dg = p.dual_graph()
    assert dg.n_nodes == 4
    assert set(dg.edges) == {(a, b) for a in range(4) for b in range(a + 1, 4)}
    g = p.graph()
    assert g.n_vertices == 4 and len(g.edges) == 6


def test_cube_dual_graph_is_octahedron_graph():
    dg = platonic_solid("cube").dual_graph()
    assert dg.n_nodes == 6
    assert len(dg.edges) == 12
    degree = [0] * 6
    for a, b in dg.edges:
        degree[a] += 1
        degree[b] += 1
    assert degree == [4] * 6


def test_truncated_octahedron_dual_graph():
    dg = catalog_solid("truncated_octahedron").dual_graph()
    assert dg.n_nodes == 14
    assert len(dg.edges) == 36


def test_dual_degree_equals_gonality(catalog_solids):
    for p in catalog_solids:
        dg = p.dual_graph()
        assert len(dg.edges) == p.n_edges
        degree = [0] * dg.n_nodes
        for a, b in dg.edges:
            degree[a] += 1
            degree[b] += 1
        assert degree == [len(c) for c in p.facets]


def test_planarity_bound(catalog_solids):
    for p in catalog_solids:
        assert p.n_edges <= 3 * p.n_vertices - 6


def test_catalog_contents():
    solids = builtin_catalog()
    names = [p.name for p in solids]
    assert names == list(CATALOG_NAMES)
    assert len(set(names)) == len(names)
    assert len(solids) >= 13
    assert set(PLATONIC_NAMES) <= set(names)
    assert len(ARCHIMEDEAN_NAMES) >= 4
    assert "truncated_octahedron" in names


def test_truncated_octahedron_combinatorics():
    p = catalog_solid("truncated_octahedron")
    assert (p.n_vertices, p.n_edges, p.n_facets) == (24, 36, 14)
    sizes = sorted(p.facet_sizes())
    assert sizes.count(4) == 6
    assert sizes.count(6) == 8


def test_catalog_euler(catalog_solids):
    for p in catalog_solids:
        assert p.n_vertices - p.n_edges + p.n_facets == 2


def test_from_vertices_reproduces_facet_lattice(catalog_solids):
    for p in catalog_solids:
        rebuilt = Polytope3.from_vertices(p.vertices)
        assert _facet_lattice(rebuilt) == _facet_lattice(p), p.name


def _facet_lattice(p: Polytope3) -> set[frozenset[tuple[float, ...]]]:
    # facets as sets of rounded vertex coordinates, invariant to relabeling
    return {frozenset(tuple(np.round(p.vertices[i], 9)) for i in cycle)
            for cycle in p.facets}


def test_gonality_colors():
    assert gonality_color(3) == GREEN
    assert gonality_color(4) == BLUE
    assert gonality_color(5) == PURPLE
    assert gonality_color(6) == RED
    assert gonality_color(9) == GRAY
    assert gonality_color(100) == GRAY
    with pytest.raises(ValueError):
        gonality_color(2)


def test_facet_colors_rules():
    p = catalog_solid("truncated_octahedron")
    by_gonality = p.facet_colors()
    assert sorted(c.name for c in by_gonality) == ["blue"] * 6 + ["red"] * 8
    assert set(p.facet_colors("green")) == {GREEN}


def test_curated_triplets_distinct():
    from polynet.catalog import curated_triplets

    for triplet in curated_triplets():
        signatures = {(p.n_vertices, p.n_edges, p.n_facets, tuple(sorted(p.facet_sizes())))
                      for p in triplet}
        assert len(signatures) == 3  # pairwise combinatorially distinct
