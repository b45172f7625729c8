import numpy as np
import pytest

from polynet.catalog import platonic_solid
from polynet.polytope import Polytope3
from polynet.random_polytopes import (
    is_simple,
    random_subpolytope,
    random_tangent_polytope,
    sample_sphere,
)
from polynet.unfold import find_net


def test_sphere_sampling_isotropy():
    rng = np.random.default_rng(7)
    pts = sample_sphere(10_000, rng)
    assert np.allclose(np.linalg.norm(pts, axis=1), 1.0, atol=1e-12)
    assert np.linalg.norm(pts.mean(axis=0)) < 0.05
    second = (pts**2).mean(axis=0)
    assert np.all(second > 0.30) and np.all(second < 0.37)  # exact value 1/3


def test_four_planes_give_tetrahedron():
    q = random_tangent_polytope(4, seed=5)
    assert q.n_facets == 4
    assert is_simple(q)


def test_tangent_polytope_simple_and_tangent():
    q = random_tangent_polytope(20, seed=2024)
    assert q.n_facets <= 20
    assert is_simple(q)
    _normals, offsets = q.facet_planes
    assert np.max(np.abs(offsets - 1.0)) < 1e-9


def test_three_planes_rejected():
    with pytest.raises(ValueError):
        random_tangent_polytope(3, seed=0)


def test_tangent_determinism():
    a = random_tangent_polytope(25, seed=42)
    b = random_tangent_polytope(25, seed=42)
    assert np.array_equal(a.vertices, b.vertices)
    assert a.facets == b.facets


def test_subpolytope_full_fraction_is_identity():
    q = random_tangent_polytope(15, seed=3)
    p = random_subpolytope(q, 1.0, seed=0)
    assert p.n_vertices == q.n_vertices
    assert p.n_facets == q.n_facets
    assert sorted(p.facet_sizes()) == sorted(q.facet_sizes())


def test_cube_alternating_corners_make_regular_tetrahedron():
    cube = platonic_solid("cube")
    corners = [i for i, v in enumerate(cube.vertices) if np.prod(np.sign(v)) > 0]
    assert len(corners) == 4
    tet = Polytope3.from_vertices(cube.vertices[corners], normalize=True)
    assert tet.n_facets == 4
    lengths = [np.linalg.norm(tet.vertices[a] - tet.vertices[b]) for a, b in tet.edges]
    assert np.allclose(lengths, lengths[0], rtol=1e-12)


def test_subpolytope_fraction_validation():
    q = random_tangent_polytope(15, seed=3)
    with pytest.raises(ValueError):
        random_subpolytope(q, 0.0, seed=0)
    with pytest.raises(ValueError):
        random_subpolytope(q, 1.5, seed=0)
    with pytest.raises(ValueError):
        random_subpolytope(q, 0.01, seed=0)  # keeps fewer than 4 vertices


def test_subpolytope_determinism_and_validity():
    q = random_tangent_polytope(30, seed=10)
    a = random_subpolytope(q, 0.6, seed=11)
    b = random_subpolytope(q, 0.6, seed=11)
    assert np.array_equal(a.vertices, b.vertices)
    assert a.n_vertices <= int(np.ceil(0.6 * q.n_vertices))
    assert a.circumradius == pytest.approx(1.0)


def test_pipeline_smoke_unfoldable():
    q = random_tangent_polytope(30, seed=60)
    p = random_subpolytope(q, 0.6, seed=61)
    net = find_net(p, seed=62)
    assert net.injective
