"""Exhaust the cube: its dual graph has 384 spanning trees, every one unfolds
without overlap, and up to congruence (reflections allowed) exactly 11
distinct nets remain -- the classical hexomino count.
"""

from polynet import (
    DualSpanningTree,
    all_spanning_trees,
    congruent_nets,
    platonic_solid,
    spanning_tree_count,
    unfold,
)

cube = platonic_solid("cube")
dg = cube.dual_graph()
print("dual graph:", dg.n_nodes, "nodes,", len(dg.edges), "edges")
print("matrix-tree count:", spanning_tree_count(dg.n_nodes, dg.edges))

trees = all_spanning_trees(dg.n_nodes, dg.edges)
nets = [unfold(cube, DualSpanningTree(t, root=0)) for t in trees]
print("unfolded:", len(nets), "| non-injective:", sum(not n.injective for n in nets))

classes = []
for net in nets:
    if not any(congruent_nets(net, rep) for rep in classes):
        classes.append(net)
print("distinct nets up to congruence:", len(classes))

for i, rep in enumerate(classes):
    lo, hi = rep.bounding_box()
    w, h = hi - lo
    print(f"  net {i + 1:2d}: bounding box {w:.3f} x {h:.3f}")
