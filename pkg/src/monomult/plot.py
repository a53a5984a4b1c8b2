"""SVG pictures of the regions attached to a monomial ideal in two variables."""
from __future__ import annotations

import math

from .errors import DimensionError
from .newton import MonomialIdeal, analytic_spread, newton
from .polyhedra import inequalities_to_vertices
from .volume import box_inequalities, default_box

LAYERS = ("conv", "bd", "pyr", "out")

_STYLE = {
    "conv": 'fill="#f7e27a" fill-opacity="0.7" stroke="#e58fb0" stroke-width="0.04"',
    "bd": 'fill="none" stroke="#8b1a1a" stroke-width="0.08"',
    "pyr": 'fill="#6cbf6c" fill-opacity="0.6" stroke="none"',
    "out": 'fill="#3a6fb0" fill-opacity="0.5" stroke="none" fill-rule="evenodd"',
}


def _ccw(points):
    if not points:
        return []
    cx = sum(float(p[0]) for p in points) / len(points)
    cy = sum(float(p[1]) for p in points) / len(points)
    return sorted(points, key=lambda p: math.atan2(float(p[1]) - cy, float(p[0]) - cx))


def _fmt(x) -> str:
    return f"{float(x):.6g}"


def _pts(points) -> str:
    return " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in points)


def _ring(points) -> str:
    pts = _ccw(points)
    if not pts:
        return ""
    return "M " + " L ".join(f"{_fmt(x)} {_fmt(y)}" for x, y in pts) + " Z"


def render_svg(ideal: MonomialIdeal) -> str:
    """SVG with layers ``conv``, ``bd``, ``pyr`` and ``out`` (viewBox ``[0, M+1]^2``)."""
    if ideal.dim != 2:
        raise DimensionError("plot supports d = 2 only")
    nd = newton(ideal)
    size = default_box(nd) if not nd.is_unit else 1
    body = {name: [] for name in LAYERS}

    if not nd.is_unit:
        hull = inequalities_to_vertices(
            box_inequalities(2, size) + [f.hyperplane for f in nd.facets], 2
        )
        body["conv"].append(f'<polygon points="{_pts(_ccw(hull))}"/>')
        for f in nd.bounded_facets:
            body["bd"].append(f'<polyline points="{_pts(f.incident_vertices)}"/>')
            body["pyr"].append(
                f'<polygon points="{_pts([(0, 0)] + list(f.incident_vertices))}"/>'
            )
        for v in nd.vert:
            body["bd"].append(f'<circle cx="{_fmt(v[0])}" cy="{_fmt(v[1])}" r="0.08" fill="black"/>')
        if analytic_spread(nd) == 2:
            cube = box_inequalities(2, size)
            outer = inequalities_to_vertices(
                cube + [f.hyperplane for f in nd.unbounded_facets], 2
            )
            inner = inequalities_to_vertices(cube + [f.hyperplane for f in nd.facets], 2)
            body["out"].append(f'<path d="{_ring(outer)} {_ring(inner)}"/>')

    lines = [
        '<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="0 0 {size} {size}" width="{60 * size}" height="{60 * size}">',
    ]
    flip = f'transform="matrix(1 0 0 -1 0 {size})"'
    for name in LAYERS:
        lines.append(f'<g id="{name}" {flip} {_STYLE[name]}>')
        lines.extend("  " + s for s in body[name])
        lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
