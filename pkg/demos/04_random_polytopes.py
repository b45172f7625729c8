"""The two-step random construction: intersect tangent halfspaces of the unit
sphere (a simple polytope Q), then keep a random fraction of its vertices and
take the hull.  Prints facet statistics and unfolds one instance.
"""

from collections import Counter

import numpy as np

from polynet import find_net, random_subpolytope, random_tangent_polytope

q = random_tangent_polytope(30, seed=12345)
print(f"Q: V={q.n_vertices} E={q.n_edges} F={q.n_facets}")
print("every vertex trivalent:", all(
    sum(v in c for c in q.facets) == 3 for v in range(q.n_vertices)))
_normals, offsets = q.facet_planes
print("facet plane distances from origin:", np.round(offsets, 12).min(), "..",
      np.round(offsets, 12).max())

p = random_subpolytope(q, 0.6, seed=6)
print(f"\nsubpolytope (60% of vertices): V={p.n_vertices} E={p.n_edges} F={p.n_facets}")
print("gonality histogram:", dict(sorted(Counter(p.facet_sizes()).items())))

net = find_net(p, seed=7)
print("injective net found after", net.placements, "placements")

# fresh instances per seed, bit-for-bit reproducible
again = random_subpolytope(q, 0.6, seed=6)
print("deterministic:", np.array_equal(p.vertices, again.vertices))
