"""Exact conversion between generator and inequality descriptions.

Both directions run the double description method on a homogenized cone in
dimension ``d + 1``: a point ``v`` becomes ``(v, 1)`` and a ray ``r`` becomes
``(r, 0)``.  All ray arithmetic is on Python integers.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DegenerateInputError, DimensionError, UnboundedError
from .exact import (
    Hyperplane,
    affine_rank,
    int_dot,
    integer_scaled,
    primitive,
    rank,
)


class NotPointedError(DegenerateInputError):
    """The constraint cone contains a line."""


def _independent_rows(rows: Sequence[Sequence[int]], dim: int) -> list:
    """Greedily pick indices of ``dim`` linearly independent rows."""
    basis: list = []  # reduced rows with their pivot column
    chosen = []
    for idx, row in enumerate(rows):
        r = list(row)
        for piv, b in basis:
            if r[piv]:
                f, g = r[piv], b[piv]
                r = [g * x - f * y for x, y in zip(r, b)]
        piv = next((j for j, x in enumerate(r) if x), None)
        if piv is None:
            continue
        basis.append((piv, r))
        chosen.append(idx)
        if len(chosen) == dim:
            break
    return chosen


def _nullspace(rows: Sequence[Sequence[int]], dim: int) -> list:
    """Integer basis of ``{y : row . y = 0 for all rows}``."""
    m = [[Fraction(x) for x in r] for r in rows]
    pivots = []
    r = 0
    for col in range(dim):
        p = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        pv = m[r][col]
        m[r] = [x / pv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col] != 0:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
    free = [c for c in range(dim) if c not in pivots]
    basis = []
    for fc in free:
        y = [Fraction(0)] * dim
        y[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            y[pc] = -m[i][fc]
        basis.append(primitive(integer_scaled(y)))
    return basis


def extreme_rays(rows: Sequence[Sequence[int]], dim: int) -> list:
    """Extreme rays of the pointed cone ``{y in R^dim : row . y >= 0}``.

    Rays come back as primitive integer tuples.  Raises
    :class:`NotPointedError` when the rows have rank below ``dim``.
    """
    rows = [tuple(int(x) for x in r) for r in rows]
    if any(len(r) != dim for r in rows):
        raise DimensionError("constraint rows must have length dim")
    start = _independent_rows(rows, dim)
    if len(start) < dim:
        raise NotPointedError("constraint matrix is rank deficient; cone has a lineality space")

    # Initial simplicial cone: its rays are the columns of the inverse basis.
    basis = [[Fraction(x) for x in rows[i]] for i in start]
    inv = [[Fraction(int(i == j)) for j in range(dim)] for i in range(dim)]
    for col in range(dim):
        p = next(i for i in range(col, dim) if basis[i][col] != 0)
        basis[col], basis[p] = basis[p], basis[col]
        inv[col], inv[p] = inv[p], inv[col]
        pv = basis[col][col]
        basis[col] = [x / pv for x in basis[col]]
        inv[col] = [x / pv for x in inv[col]]
        for i in range(dim):
            if i != col and basis[i][col] != 0:
                f = basis[i][col]
                basis[i] = [x - f * y for x, y in zip(basis[i], basis[col])]
                inv[i] = [x - f * y for x, y in zip(inv[i], inv[col])]
    rays = []
    for j in range(dim):
        rays.append(primitive(integer_scaled([inv[i][j] for i in range(dim)])))

    # Zero sets are bitmasks over row indices processed so far.
    zsets = []
    for r in rays:
        z = 0
        for i in start:
            if int_dot(rows[i], r) == 0:
                z |= 1 << i
        zsets.append(z)

    in_start = set(start)
    for k, a in enumerate(rows):
        if k in in_start:
            continue
        vals = [int_dot(a, r) for r in rays]
        if all(v >= 0 for v in vals):
            bit = 1 << k
            zsets = [z | bit if v == 0 else z for z, v in zip(zsets, vals)]
            continue
        pos = [i for i, v in enumerate(vals) if v > 0]
        neg = [i for i, v in enumerate(vals) if v < 0]
        zero = [i for i, v in enumerate(vals) if v == 0]
        new_rays = [rays[i] for i in pos] + [rays[i] for i in zero]
        new_z = [zsets[i] for i in pos] + [zsets[i] | (1 << k) for i in zero]
        for p in pos:
            for n in neg:
                common = zsets[p] & zsets[n]
                if bin(common).count("1") < dim - 2:
                    continue
                # Combinatorial adjacency test: no third ray's zero set covers the common one.
                if any(
                    (zsets[q] & common) == common
                    for q in range(len(rays))
                    if q != p and q != n
                ):
                    continue
                vp, vn = vals[p], vals[n]
                combo = [vp * x - vn * y for x, y in zip(rays[n], rays[p])]
                new_rays.append(primitive(combo))
                new_z.append(common | (1 << k))
        rays, zsets = new_rays, new_z
    return sorted(set(rays))


@dataclass(frozen=True)
class Facet:
    hyperplane: Hyperplane
    bounded: bool
    incident_vertices: tuple
    incident_rays: tuple

    @property
    def normal(self):
        return self.hyperplane.normal

    @property
    def offset(self):
        return self.hyperplane.offset


@dataclass(frozen=True)
class Polyhedron:
    """A rational polyhedron held in both descriptions.

    ``inequalities`` are read as ``<x, b> >= c``.  When ``full_dimensional`` is
    false the inequality list is left empty.
    """

    dim: int
    vertices: tuple
    rays: tuple
    inequalities: tuple
    full_dimensional: bool = True
    _incidence: dict = field(default=None, compare=False, repr=False)

    def contains(self, x) -> bool:
        return all(h.contains(x) for h in self.inequalities)

    def facet_vertex_sets(self) -> list:
        """Indices of vertices on each inequality, aligned with ``inequalities``."""
        return [
            frozenset(i for i, v in enumerate(self.vertices) if h.is_tight(v))
            for h in self.inequalities
        ]

    def facet_ray_sets(self) -> list:
        return [
            frozenset(i for i, r in enumerate(self.rays) if int_dot(h.normal, r) == 0)
            for h in self.inequalities
        ]


def _homogenize_points(verts) -> list:
    return [integer_scaled(tuple(Fraction(x) for x in v) + (Fraction(1),)) for v in verts]


def generators_to_inequalities(verts: Iterable, rays: Iterable = ()) -> Polyhedron:
    """H-representation of ``conv(verts) + cone(rays)``.

    Input points that are not vertices and rays that are not extreme are
    dropped from the returned generator lists.
    """
    verts = [tuple(Fraction(x) for x in v) for v in verts]
    rays = [tuple(int(x) for x in r) for r in rays]
    if not verts:
        raise DegenerateInputError("need at least one point")
    d = len(verts[0])
    if any(len(v) != d for v in verts) or any(len(r) != d for r in rays):
        raise DimensionError("generators of mixed dimension")
    verts = sorted(set(verts))
    rays = sorted(set(primitive(r) for r in rays if any(r)))

    gens = _homogenize_points(verts) + [r + (0,) for r in rays]
    try:
        dual = extreme_rays(gens, d + 1)
    except NotPointedError:
        return Polyhedron(d, tuple(verts), tuple(rays), (), full_dimensional=False)

    ineqs = []
    for a in dual:
        b, negc = a[:d], a[d]
        if not any(b):
            continue  # face at infinity
        ineqs.append(Hyperplane.from_integer_row(b, -negc))
    ineqs.sort(key=lambda h: (h.normal, h.offset))

    kept_v = tuple(
        v for v in verts if rank([h.normal for h in ineqs if h.is_tight(v)]) == d
    )
    kept_r = tuple(
        r for r in rays
        if rank([h.normal for h in ineqs if int_dot(h.normal, r) == 0]) == d - 1
    )
    return Polyhedron(d, kept_v, kept_r, tuple(ineqs))


def inequalities_to_vertices(ineqs: Iterable[Hyperplane], dim: int) -> list:
    """Vertices of the bounded polytope ``{x : <x,b> >= c}``.

    Returns an empty list for an infeasible system and raises
    :class:`UnboundedError` for a feasible unbounded one.
    """
    rows = []
    for h in ineqs:
        if len(h.normal) != dim:
            raise DimensionError("inequality of wrong dimension")
        b, c = h.integer_form()
        rows.append(tuple(b) + (-c,))
    rows.append((0,) * dim + (1,))

    try:
        cone_rays = extreme_rays(rows, dim + 1)
    except NotPointedError:
        # Cut the lineality space away; any surviving point proves unboundedness.
        extra = []
        for l in _nullspace(rows, dim + 1):
            extra += [l, tuple(-x for x in l)]
        cone_rays = extreme_rays(rows + extra, dim + 1)
        if any(r[dim] > 0 for r in cone_rays):
            raise UnboundedError("inequality system is unbounded")
        return []

    points = [r for r in cone_rays if r[dim] > 0]
    if points and len(points) != len(cone_rays):
        raise UnboundedError("inequality system is unbounded")
    return sorted({tuple(Fraction(x, r[dim]) for x in r[:dim]) for r in points})


def facets(p: Polyhedron, orthant: bool = False) -> list:
    """Facet objects for a full-dimensional polyhedron.

    With ``orthant=True`` the incidence-based boundedness flag is checked
    against the strictly-positive-normal criterion.
    """
    if not p.full_dimensional:
        raise DegenerateInputError("facets need a full-dimensional polyhedron")
    out = []
    for h, vs, rs in zip(p.inequalities, p.facet_vertex_sets(), p.facet_ray_sets()):
        bounded = not rs
        if orthant:
            assert bounded == all(x > 0 for x in h.normal), h
        out.append(
            Facet(
                h,
                bounded,
                tuple(p.vertices[i] for i in sorted(vs)),
                tuple(p.rays[i] for i in sorted(rs)),
            )
        )
    return out


def face_dimension(vertices: Sequence, rays: Sequence = ()) -> int:
    if not vertices:
        return -1
    v0 = vertices[0]
    vecs = [[Fraction(a) - Fraction(b) for a, b in zip(v, v0)] for v in vertices[1:]]
    return rank(vecs + [list(r) for r in rays])


__all__ = [
    "Facet",
    "NotPointedError",
    "Polyhedron",
    "affine_rank",
    "extreme_rays",
    "face_dimension",
    "facets",
    "generators_to_inequalities",
    "inequalities_to_vertices",
]
