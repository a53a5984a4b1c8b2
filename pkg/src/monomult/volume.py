"""Exact normalized volumes of pyramids, polytopes and the out region.

Every volume comes from a recursive fan triangulation: pick a vertex of a
face, triangulate each codimension-one subface that misses it, and cone.
Subfaces of a face are its intersections with the facets of the ambient
polyhedron, so the triangulation only ever uses actual vertices.
"""
from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Sequence

from .exact import Hyperplane, determinant
from .newton import NewtonData, analytic_spread
from .polyhedra import (
    face_dimension,
    generators_to_inequalities,
    inequalities_to_vertices,
)


def fan_triangulation(vertices: Sequence, face: frozenset, facet_sets: Sequence[frozenset],
                      dim: int, pivot: str = "first") -> list:
    """Triangulate the bounded face with vertex indices ``face`` and dimension ``dim``.

    Returns a list of simplices, each a tuple of ``dim + 1`` vertex indices.
    ``pivot`` selects the apex at every level (``"first"`` or ``"last"`` index).
    """
    if dim == 0:
        return [(next(iter(face)),)]
    ordered = sorted(face)
    apex = ordered[0] if pivot == "first" else ordered[-1]
    subfaces = set()
    for fs in facet_sets:
        sub = face & fs
        if apex in sub or sub == face or len(sub) < dim or sub in subfaces:
            continue
        if face_dimension([vertices[i] for i in sorted(sub)]) == dim - 1:
            subfaces.add(sub)
    simplices = []
    for sub in sorted(subfaces, key=sorted):
        for s in fan_triangulation(vertices, sub, facet_sets, dim - 1, pivot):
            simplices.append((apex,) + s)
    return simplices


def facet_pyramid_volumes(nd: NewtonData, pivot: str = "first") -> list:
    """``d! vol(pyr(F))`` for each bounded facet F, in facet order."""
    if nd.is_unit or not nd.bounded_facets:
        return []
    poly = nd.polyhedron
    vsets = poly.facet_vertex_sets()
    out = []
    for f, vs in zip(nd.facets, vsets):
        if not f.bounded:
            continue
        total = 0
        for simplex in fan_triangulation(poly.vertices, vs, vsets, nd.dim - 1, pivot):
            total += abs(determinant([poly.vertices[i] for i in simplex]))
        out.append(Fraction(total))
    return out


def pyr_normalized_volume(nd: NewtonData, pivot: str = "first") -> Fraction:
    """``d! vol(pyr(I))``: sum of apex-at-origin simplex determinants."""
    return sum(facet_pyramid_volumes(nd, pivot), Fraction(0))


def normalized_polytope_volume(verts: Sequence, pivot: str = "first") -> Fraction:
    """``d!`` times the Euclidean volume of ``conv(verts)``; 0 if not full-dimensional."""
    verts = [tuple(Fraction(x) for x in v) for v in verts]
    if not verts:
        return Fraction(0)
    d = len(verts[0])
    poly = generators_to_inequalities(verts)
    if not poly.full_dimensional:
        return Fraction(0)
    vs = poly.vertices
    vsets = poly.facet_vertex_sets()
    total = Fraction(0)
    for simplex in fan_triangulation(vs, frozenset(range(len(vs))), vsets, d, pivot):
        base = vs[simplex[0]]
        total += abs(determinant([[a - b for a, b in zip(vs[i], base)] for i in simplex[1:]]))
    return total


def polytope_volume(verts: Sequence, pivot: str = "first") -> Fraction:
    """Euclidean volume of ``conv(verts)``."""
    if not verts:
        return Fraction(0)
    return normalized_polytope_volume(verts, pivot) / factorial(len(verts[0]))


def box_inequalities(d: int, upper) -> list:
    lows = [Hyperplane(tuple(int(i == j) for j in range(d)), Fraction(0)) for i in range(d)]
    highs = [Hyperplane(tuple(-int(i == j) for j in range(d)), -Fraction(upper)) for i in range(d)]
    return lows + highs


def default_box(nd: NewtonData) -> int:
    return nd.max_vertex_coordinate() + 1


def clipped_volumes(nd: NewtonData, box: int | None = None, unbounded_only=None):
    """Normalized volumes of ``Box & U`` and ``Box & conv(I)``.

    ``U`` is the intersection of the half-spaces in ``unbounded_only`` (the
    unbounded facets by default).  Returns ``(vol_U, vol_conv, verts_U, verts_conv)``.
    """
    d = nd.dim
    m = default_box(nd) if box is None else box
    cube = box_inequalities(d, m)
    if unbounded_only is None:
        unbounded_only = [f.hyperplane for f in nd.unbounded_facets]
    outer = inequalities_to_vertices(cube + list(unbounded_only), d)
    inner = inequalities_to_vertices(cube + [f.hyperplane for f in nd.facets], d)
    return (
        normalized_polytope_volume(outer),
        normalized_polytope_volume(inner),
        outer,
        inner,
    )


def out_normalized_volume(nd: NewtonData, box: int | None = None) -> Fraction:
    """``d! vol(out(I))`` as the difference of two box-clipped volumes.

    ``out(I)`` sits inside ``conv(0, vert(I))`` and hence inside the box
    ``[0, M]^d`` for any ``M`` at least the largest vertex coordinate.
    """
    if nd.is_unit or analytic_spread(nd) < nd.dim:
        return Fraction(0)
    outer, inner, _, _ = clipped_volumes(nd, box)
    return outer - inner
