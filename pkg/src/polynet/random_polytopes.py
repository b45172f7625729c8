"""Two-step random 3-polytope construction.

Step one intersects halfspaces tangent to the unit sphere at uniformly random
points, giving a simple polytope Q (realized as the polar dual of the hull of
the tangent points).  Step two keeps a random fraction of Q's vertices and
takes their convex hull.
"""

from __future__ import annotations

import math

import numpy as np

from .geometry import (
    DEFAULT_TOL,
    DegenerateInput,
    GeometryError,
    OriginNotInterior,
    ToleranceConfig,
    convex_hull_3,
    polar_dual,
)
from .polytope import InvalidPolytope, Polytope3

# seed may be an int or a tuple of ints (fed to numpy's SeedSequence)
RngSeed = int | tuple[int, ...]


class SimplicityFailed(GeometryError):
    """Tangent construction kept producing non-simple (or unbounded) output."""


class DegenerateSample(GeometryError):
    """Vertex subsample stayed rank-deficient through all retries."""


def _attempt_rng(seed: RngSeed, attempt: int) -> np.random.Generator:
    entropy = seed if isinstance(seed, int) else list(seed)
    return np.random.default_rng(np.random.SeedSequence(entropy=entropy, spawn_key=(attempt,)))


def sample_sphere(n: int, rng: np.random.Generator) -> np.ndarray:
    """n points uniform on the unit sphere (normalized Gaussian triples)."""
    pts = rng.normal(size=(n, 3))
    norms = np.linalg.norm(pts, axis=1)
    while np.any(norms < 1e-12):  # astronomically rare; redraw those rows
        bad = norms < 1e-12
        pts[bad] = rng.normal(size=(int(bad.sum()), 3))
        norms = np.linalg.norm(pts, axis=1)
    return pts / norms[:, None]


def is_simple(p: Polytope3) -> bool:
    """Every vertex contained in exactly three facets."""
    count = [0] * p.n_vertices
    for cycle in p.facets:
        for v in cycle:
            count[v] += 1
    return all(c == 3 for c in count)


def random_tangent_polytope(n_planes: int, seed: RngSeed,
                            tol: ToleranceConfig = DEFAULT_TOL,
                            max_retries: int = 10) -> Polytope3:
    """Intersection of ``n_planes`` random tangent halfspaces of the unit sphere.

    The result is simple (checked; resampled with a derived seed on failure).
    Facet planes sit at distance 1 from the origin, so the model is NOT
    rescaled.  Raises SimplicityFailed when every retry produced a degenerate
    or non-simple intersection.
    """
    if n_planes < 4:
        raise ValueError("need at least 4 tangent planes for a bounded intersection")
    # Tangent points confined to a halfsphere give an unbounded intersection;
    # for small n that is likely (7/8 of draws at n=4), so boundedness gets a
    # generous retry budget of its own before simplicity retries are charged.
    simplicity_left = max_retries
    attempt = 0
    while attempt < 128:
        rng = _attempt_rng(seed, attempt)
        attempt += 1
        points = sample_sphere(n_planes, rng)
        try:
            q = polar_dual(convex_hull_3(points, tol), tol)
            p = Polytope3.from_hull_mesh(q, name=f"tangent_{n_planes}")
        except (DegenerateInput, OriginNotInterior, InvalidPolytope):
            continue
        if is_simple(p):
            return p
        if simplicity_left == 0:
            break
        simplicity_left -= 1
    raise SimplicityFailed(
        f"no simple tangent polytope for n={n_planes} after {attempt} attempts")


def random_subpolytope(q: Polytope3, fraction: float, seed: RngSeed,
                       tol: ToleranceConfig = DEFAULT_TOL,
                       max_retries: int = 10) -> Polytope3:
    """Convex hull of a uniform random subset of ceil(fraction * V) vertices.

    The result is normalized to circumradius 1; it is generally neither
    simple nor simplicial.  Raises DegenerateSample when every retry drew a
    rank-deficient subset.
    """
    if not 0.0 < fraction <= 1.0:
        raise ValueError("fraction must lie in (0, 1]")
    m = math.ceil(fraction * q.n_vertices)
    if m < 4:
        raise ValueError(f"fraction {fraction} keeps only {m} of {q.n_vertices} vertices")
    for attempt in range(max_retries + 1):
        rng = _attempt_rng(seed, attempt)
        chosen = np.sort(rng.choice(q.n_vertices, size=m, replace=False))
        try:
            return Polytope3.from_vertices(q.vertices[chosen],
                                           name=f"{q.name}_sub{m}" if q.name else f"sub{m}",
                                           normalize=True, tol=tol)
        except DegenerateInput:
            continue
    raise DegenerateSample(f"subset of {m} vertices stayed degenerate after retries")
