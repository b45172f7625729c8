"""Not every spanning tree yields a planar net.

A flattened tetrahedron unfolded along a path tree in the dual graph can land
two facets on top of each other.  Star trees, by contrast, work for every
tetrahedron.  This script finds such a sliver, shows the overlap, and renders
the star net that does work.
"""

from pathlib import Path

import numpy as np

from polynet import (
    DualSpanningTree,
    net_to_svg,
    overlapping_unfolding_example,
    polygons_overlap,
    unfold,
)

sliver, path_tree = overlapping_unfolding_example()
print("sliver tetrahedron vertices:")
print(np.round(sliver.vertices, 4))
print("path tree over facets:", path_tree.edges)

net = unfold(sliver, path_tree)
print("injective:", net.injective)
for i in range(4):
    for j in range(i + 1, 4):
        if polygons_overlap(net.polygons[i], net.polygons[j]):
            print(f"facets {i} and {j} overlap in the plane")

star = DualSpanningTree(((0, 1), (0, 2), (0, 3)), root=0)
good = unfold(sliver, star)
print("star tree injective:", good.injective)

out = Path(__file__).parent / "out"
out.mkdir(exist_ok=True)
(out / "sliver_star_net.svg").write_text(net_to_svg(good))
print(f"working star net written to {out / 'sliver_star_net.svg'}")
