import numpy as np
import pytest
from scipy.spatial import ConvexHull

from polynet.catalog import builtin_catalog


@pytest.fixture(scope="session")
def catalog_solids():
    return builtin_catalog()


def random_convex_polygon(rng: np.random.Generator, n_points: int = 8,
                          scale: float = 1.0, center=(0.0, 0.0)) -> np.ndarray:
    """Convex polygon (counterclockwise) as the hull of random points."""
    while True:
        pts = rng.normal(size=(n_points, 2)) * scale + np.asarray(center, dtype=float)
        hull = ConvexHull(pts)
        if len(hull.vertices) >= 3:
            return pts[hull.vertices]  # scipy returns 2D hull vertices CCW
