import numpy as np
import pytest

from polynet.catalog import platonic_solid
from polynet.polytope import NonPlanarFacet, NotConvex, ParseError, load_off, write_off

SQUARE_PYRAMID_OFF = """\
OFF
5 5 8
 1  1 0
-1  1 0
-1 -1 0
 1 -1 0
 0  0 1.2
4 0 1 2 3
3 0 4 1
3 1 4 2
3 2 4 3
3 3 4 0
"""


def test_cube_round_trip():
    cube = platonic_solid("cube")
    back = load_off(write_off(cube))
    assert back.n_vertices == 8
    assert back.n_facets == 6
    assert np.allclose(back.vertices, cube.vertices)
    assert {frozenset(c) for c in back.facets} == {frozenset(c) for c in cube.facets}


def test_catalog_round_trip(catalog_solids):
    for p in catalog_solids:
        back = load_off(write_off(p))
        assert back.n_vertices == p.n_vertices
        assert back.n_edges == p.n_edges
        assert {frozenset(c) for c in back.facets} == {frozenset(c) for c in p.facets}


def test_write_off_precision():
    p = platonic_solid("icosahedron")
    text = write_off(p)
    header, counts = text.splitlines()[:2]
    assert header == "OFF"
    assert counts == "12 20 30"
    value = text.splitlines()[2].split()[2]
    assert len(value.replace("-", "").replace(".", "").lstrip("0")) >= 16


def test_square_pyramid_counts():
    p = load_off(SQUARE_PYRAMID_OFF)
    assert (p.n_vertices, p.n_edges, p.n_facets) == (5, 8, 5)


def test_orientation_normalized():
    # reversed facet cycles still load, outward counterclockwise
    flipped = SQUARE_PYRAMID_OFF.replace("4 0 1 2 3", "4 3 2 1 0")
    p = load_off(flipped)
    normals, offsets = p.facet_planes
    centroid = p.vertices.mean(axis=0)
    assert np.all(normals @ centroid < offsets)


def test_two_vertex_facet_rejected():
    bad = SQUARE_PYRAMID_OFF.replace("3 0 4 1", "2 0 4")
    with pytest.raises(ParseError) as err:
        load_off(bad)
    assert err.value.line == 9


def test_header_and_counts_errors():
    with pytest.raises(ParseError):
        load_off("PLY\n3 3 3\n")
    with pytest.raises(ParseError):
        load_off("OFF\n4 4\n")
    with pytest.raises(ParseError):
        load_off("OFF\n4 4 6\n0 0 0\n1 0 0\n")
    with pytest.raises(ParseError):
        load_off("")


def test_bad_coordinate_line_number():
    bad = SQUARE_PYRAMID_OFF.replace("-1 -1 0", "-1 nope 0")
    with pytest.raises(ParseError) as err:
        load_off(bad)
    assert "line 5" in str(err.value)


def test_comments_and_blank_lines_tolerated():
    noisy = SQUARE_PYRAMID_OFF.replace("OFF\n", "OFF\n# a comment\n\n")
    p = load_off(noisy)
    assert p.n_facets == 5


def test_nonconvex_rejected():
    # dent one apex of a double pyramid below the equator plane
    text = """\
OFF
6 8 12
 1  0 0
 0  1 0
-1  0 0
 0 -1 0
 0  0 1
 0  0 0.01
3 0 1 4
3 1 2 4
3 2 3 4
3 3 0 4
3 1 0 5
3 2 1 5
3 3 2 5
3 0 3 5
"""
    with pytest.raises(NotConvex):
        load_off(text)


def test_nonplanar_facet_rejected():
    warped = SQUARE_PYRAMID_OFF.replace(" 1  1 0", " 1  1 0.3")
    with pytest.raises((NonPlanarFacet, NotConvex)):
        load_off(warped)


def test_subdivided_facet_rejected():
    # vertex in the middle of the base: not extreme
    text = """\
OFF
6 8 12
 1  1 0
-1  1 0
-1 -1 0
 1 -1 0
 0  0 1.2
 0  0 0
3 0 1 5
3 1 2 5
3 2 3 5
3 3 0 5
3 0 4 1
3 1 4 2
3 2 4 3
3 3 4 0
"""
    with pytest.raises(NotConvex):
        load_off(text)
