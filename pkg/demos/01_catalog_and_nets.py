"""Walk the built-in solid catalog and unfold each entry into an SVG net.

Writes one SVG per solid into demos/out/.  Facet colors follow the gonality
rule: triangles green, quadrangles blue, pentagons purple, hexagons red,
everything else gray.
"""

from pathlib import Path

from polynet import builtin_catalog, find_net, net_to_svg

out = Path(__file__).parent / "out"
out.mkdir(exist_ok=True)

print(f"{'name':28s} {'V':>3} {'E':>3} {'F':>3}  placements")
for p in builtin_catalog():
    net = find_net(p, seed=0)
    print(f"{p.name:28s} {p.n_vertices:3d} {p.n_edges:3d} {p.n_facets:3d}  {net.placements}")
    (out / f"{p.name}.svg").write_text(net_to_svg(net, p.facet_colors()))

print(f"\nSVG nets written to {out}/")
