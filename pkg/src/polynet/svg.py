"""SVG 1.1 rendering of planar nets: filled facet paths, dashed fold edges,
solid cut boundary.  Coordinates are unitless (1 unit = 1 model unit)."""

from __future__ import annotations

import numpy as np

from .geometry import GeometryError
from .polytope import FacetColor, gonality_color
from .unfold import PlanarNet


class NonInjectiveNet(GeometryError):
    """Only injective nets are rendered."""


def _fmt(x: float) -> str:
    return format(float(x), ".6f").rstrip("0").rstrip(".")


def net_to_svg(net: PlanarNet, colors: tuple[FacetColor, ...] | None = None,
               stroke_width: float | None = None) -> str:
    """Render an injective net as a standalone SVG document string.

    One filled path per facet (fill = its color name), dashed strokes on fold
    edges, solid strokes on the cut boundary.  The viewBox covers the net's
    bounding box with a 5% margin.
    """
    if not net.injective:
        raise NonInjectiveNet("refusing to render an overlapping net")
    if colors is None:
        colors = tuple(gonality_color(len(p)) for p in net.polygons)
    if len(colors) != net.n_facets:
        raise ValueError("need one color per facet")

    # SVG y grows downward; flip so the net keeps its mathematical orientation
    polys = [np.column_stack([p[:, 0], -p[:, 1]]) for p in net.polygons]
    lo = np.vstack(polys).min(axis=0)
    hi = np.vstack(polys).max(axis=0)
    span = hi - lo
    margin = 0.05 * float(span.max())
    view = (lo[0] - margin, lo[1] - margin, span[0] + 2 * margin, span[1] + 2 * margin)
    if stroke_width is None:
        stroke_width = 0.01 * float(span.max())
    dash = 3.0 * stroke_width

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="{_fmt(view[0])} {_fmt(view[1])} {_fmt(view[2])} {_fmt(view[3])}">',
        '<g stroke="none">',
    ]
    for poly, color in zip(polys, colors):
        d = "M " + " L ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in poly) + " Z"
        parts.append(f'<path d="{d}" fill="{color.name}"/>')
    parts.append("</g>")

    def seg_path(facet: int, slot: int) -> str:
        poly = polys[facet]
        a = poly[slot]
        b = poly[(slot + 1) % len(poly)]
        return f'M {_fmt(a[0])},{_fmt(a[1])} L {_fmt(b[0])},{_fmt(b[1])}'

    parts.append(f'<g fill="none" stroke="black" stroke-width="{_fmt(stroke_width)}">')
    for f, i in net.cut_edges:
        parts.append(f'<path d="{seg_path(f, i)}"/>')
    parts.append("</g>")
    parts.append(f'<g fill="none" stroke="black" stroke-width="{_fmt(stroke_width)}" '
                 f'stroke-dasharray="{_fmt(dash)} {_fmt(dash)}">')
    for fa, ea, _fb, _eb in net.fold_edges:
        parts.append(f'<path d="{seg_path(fa, ea)}"/>')
    parts.append("</g>")
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
