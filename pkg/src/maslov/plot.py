"""SVG 1.1 drawings of planar Newton polytopes."""

import math
from xml.sax.saxutils import escape

__all__ = ["polytopes_svg"]

COLORS = {
    "f": "#1f77b4",
    "g": "#ff7f0e",
    "oplus": "#2ca02c",
    "odot": "#d62728",
}


def _num(v):
    return f"{v + 0.0:.6g}"


def _ordered(vertices):
    """Vertices of a convex polygon in counter-clockwise order."""
    pts = [(float(x), float(y)) for x, y in vertices]
    if len(pts) < 3:
        return pts
    cx = sum(p[0] for p in pts) / len(pts)
    cy = sum(p[1] for p in pts) / len(pts)
    return sorted(pts, key=lambda p: math.atan2(p[1] - cy, p[0] - cx))


def _label(v):
    return "(" + ", ".join(str(c) for c in v) + ")"


def polytopes_svg(layers):
    """Render ``[(name, Polytope), ...]`` as one SVG document.

    Each entry becomes a ``<g id=name>`` layer.  The viewBox is the joint
    bounding box plus a 10% margin; y points up as in the exponent plane.
    """
    for _, P in layers:
        if P.dim != 2:
            raise ValueError("only planar polytopes can be drawn")
    xs = [float(v[0]) for _, P in layers for v in P.vertices]
    ys = [float(v[1]) for _, P in layers for v in P.vertices]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    extent = max(x1 - x0, y1 - y0) or 1.0
    w, h = (x1 - x0) or extent, (y1 - y0) or extent
    mx, my = 0.1 * w, 0.1 * h
    # Flip y: svg y = -exponent y.
    box = (x0 - mx - (w - (x1 - x0)) / 2, -(y1 + my + (h - (y1 - y0)) / 2), w + 2 * mx, h + 2 * my)
    stroke = extent / 150
    radius = extent / 60
    font = extent / 25

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="{}">'.format(" ".join(_num(b) for b in box)),
    ]
    for name, P in layers:
        color = COLORS.get(name, "#444444")
        out.append(f'<g id="{escape(name)}" stroke="{color}" fill="{color}">')
        pts = _ordered(P.vertices)
        if len(pts) == 2:
            (ax, ay), (bx, by) = pts
            out.append(
                f'<line x1="{_num(ax)}" y1="{_num(-ay)}" x2="{_num(bx)}" y2="{_num(-by)}" '
                f'stroke-width="{_num(stroke)}"/>'
            )
        elif len(pts) > 2:
            coords = " ".join(f"{_num(x)},{_num(-y)}" for x, y in pts)
            out.append(f'<polygon points="{coords}" fill-opacity="0.15" stroke-width="{_num(stroke)}"/>')
        for v in P.vertices:
            x, y = float(v[0]), float(v[1])
            out.append(f'<circle cx="{_num(x)}" cy="{_num(-y)}" r="{_num(radius)}"/>')
            out.append(
                f'<text x="{_num(x + radius)}" y="{_num(-y - radius)}" font-size="{_num(font)}" '
                f'stroke="none">{escape(_label(v))}</text>'
            )
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
