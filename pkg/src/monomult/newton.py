"""Monomial ideals and their Newton polyhedra."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DegenerateInputError, DimensionError
from .exact import int_dot
from .polyhedra import (
    Facet,
    Polyhedron,
    face_dimension,
    facets as polyhedron_facets,
    generators_to_inequalities,
)


def minimal_elements(points: Iterable[Sequence[int]]) -> tuple:
    """Antichain of componentwise-minimal points, sorted lexicographically."""
    pts = sorted(set(tuple(p) for p in points), key=lambda p: (sum(p), p))
    kept: list = []
    for p in pts:
        # Anything dominating p has a strictly larger coordinate sum, so it comes later.
        if not any(all(g <= x for g, x in zip(q, p)) for q in kept):
            kept.append(p)
    return tuple(sorted(kept))


def divides(g: Sequence[int], p: Sequence[int]) -> bool:
    return all(a <= b for a, b in zip(g, p))


@dataclass(frozen=True, init=False)
class MonomialIdeal:
    """A nonzero monomial ideal of k[x_1..x_d], held by its minimal exponents."""

    dim: int
    generators: tuple

    def __init__(self, generators: Iterable[Sequence[int]], dim: int | None = None):
        gens = [tuple(int(x) for x in g) for g in generators]
        if not gens:
            raise DegenerateInputError("the zero ideal is not supported")
        if dim is None:
            dim = len(gens[0])
        if dim < 1 or any(len(g) != dim for g in gens):
            raise DimensionError(f"every generator must have length {dim}")
        if any(x < 0 for g in gens for x in g):
            raise DegenerateInputError("exponents must be nonnegative")
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "generators", minimal_elements(gens))

    @property
    def is_unit(self) -> bool:
        return self.generators == ((0,) * self.dim,)

    @property
    def is_m_primary(self) -> bool:
        """True when every variable has a pure power among the generators."""
        if self.is_unit:
            return False
        found = set()
        for g in self.generators:
            support = [i for i, x in enumerate(g) if x]
            if len(support) == 1:
                found.add(support[0])
        return len(found) == self.dim

    def contains(self, p: Sequence[int]) -> bool:
        return any(divides(g, p) for g in self.generators)

    def __len__(self):
        return len(self.generators)


def maximal_ideal(d: int) -> MonomialIdeal:
    return MonomialIdeal([tuple(int(i == j) for j in range(d)) for i in range(d)])


def unit_vectors(d: int) -> list:
    return [tuple(int(i == j) for j in range(d)) for i in range(d)]


@dataclass(frozen=True)
class NewtonData:
    """Newton polyhedron with its facets split by boundedness.

    ``recession`` lists the rays of the recession cone: the coordinate
    vectors for polynomial rings, the cone generators in the toric case.
    """

    dim: int
    polyhedron: Polyhedron | None
    facets: tuple
    recession: tuple
    is_unit: bool = False

    @property
    def bounded_facets(self) -> tuple:
        return tuple(f for f in self.facets if f.bounded)

    @property
    def unbounded_facets(self) -> tuple:
        return tuple(f for f in self.facets if not f.bounded)

    @property
    def vert(self) -> tuple:
        return self.polyhedron.vertices if self.polyhedron else ()

    def max_vertex_coordinate(self) -> int:
        return max((int(x) for v in self.vert for x in v), default=0)

    def contains(self, p) -> bool:
        return all(f.hyperplane.contains(p) for f in self.facets)


def newton_from_generators(gens, recession, orthant: bool) -> NewtonData:
    d = len(recession[0])
    poly = generators_to_inequalities(gens, recession)
    if not poly.full_dimensional:
        raise DegenerateInputError("Newton polyhedron is not full-dimensional")
    fs = tuple(polyhedron_facets(poly, orthant=orthant))
    return NewtonData(d, poly, fs, tuple(poly.rays))


def newton(ideal: MonomialIdeal) -> NewtonData:
    """Newton polyhedron ``conv(generators) + orthant`` with facet data.

    Facets are ordered lexicographically by normal.  The unit ideal gets a
    flagged result with no facets.
    """
    d = ideal.dim
    if ideal.is_unit:
        return NewtonData(d, None, (), tuple(unit_vectors(d)), is_unit=True)
    return newton_from_generators(ideal.generators, unit_vectors(d), orthant=True)


def bounded_face_dimension(nd: NewtonData) -> int:
    """Largest dimension of a bounded face of the Newton polyhedron.

    Faces are walked from the facets downwards one dimension at a time; a
    codimension-one face of a face ``G`` is ``G`` intersected with some facet.
    """
    if nd.is_unit:
        return -1
    if nd.bounded_facets:
        return nd.dim - 1
    poly = nd.polyhedron
    vsets = poly.facet_vertex_sets()
    rsets = poly.facet_ray_sets()
    layer = {(v, r) for v, r in zip(vsets, rsets) if v}
    k = nd.dim - 1
    while layer and k > 0:
        nxt = set()
        for v, r in layer:
            for v2, r2 in zip(vsets, rsets):
                vv, rr = v & v2, r & r2
                if not vv or (vv, rr) == (v, r) or (vv, rr) in nxt:
                    continue
                dim = face_dimension(
                    [poly.vertices[i] for i in sorted(vv)], [poly.rays[i] for i in sorted(rr)]
                )
                if dim == k - 1:
                    nxt.add((vv, rr))
        k -= 1
        layer = nxt
        if any(not rr for _, rr in layer):
            return k
    # Every vertex is a bounded face of dimension 0.
    return 0


def analytic_spread(ideal: MonomialIdeal | NewtonData) -> int:
    """``1 + `` the largest dimension of a bounded face; 0 for the unit ideal."""
    nd = ideal if isinstance(ideal, NewtonData) else newton(ideal)
    if nd.is_unit:
        return 0
    return bounded_face_dimension(nd) + 1


def _lattice_box(bounds: Sequence[int]):
    return itertools.product(*(range(b + 1) for b in bounds))


def integral_closure(ideal: MonomialIdeal) -> MonomialIdeal:
    """Minimal generators of the integral closure.

    The scan box is ``[0, M_i]`` with ``M_i`` the largest vertex coordinate
    ``i``: a lattice point of the Newton polyhedron with ``p_i > M_i`` stays
    inside after lowering ``p_i`` by one, so it is not minimal.
    """
    if ideal.is_unit:
        return ideal
    nd = newton(ideal)
    bounds = [max(int(v[i]) for v in nd.vert) for i in range(ideal.dim)]
    rows = [(f.hyperplane.integer_form()) for f in nd.facets]
    pts = [p for p in _lattice_box(bounds) if all(int_dot(b, p) >= c for b, c in rows)]
    return MonomialIdeal(pts, ideal.dim)


def saturation_closure(ideal: MonomialIdeal) -> MonomialIdeal:
    """Minimal generators of ``(closure(I) : m^inf)``.

    These are the minimal lattice points of the nonnegative region cut out by
    the unbounded-facet inequalities.  If ``p`` is minimal with ``p_i > 0`` then
    ``p - e_i`` violates some such inequality ``k`` with ``b_ki > 0``, whence
    ``p_i < c_k / b_ki + 1``; that bounds the scan.
    """
    d = ideal.dim
    if ideal.is_unit:
        return ideal
    nd = newton(ideal)
    rows = [f.hyperplane for f in nd.unbounded_facets]
    bounds = []
    for i in range(d):
        lim = 0
        for h in rows:
            if h.normal[i] > 0:
                lim = max(lim, int(h.offset / h.normal[i]) + 1)
        bounds.append(lim)
    ints = [h.integer_form() for h in rows]
    pts = [p for p in _lattice_box(bounds) if all(int_dot(b, p) >= c for b, c in ints)]
    return MonomialIdeal(pts, d)


def product(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    if a.dim != b.dim:
        raise DimensionError("ideals live in different rings")
    return MonomialIdeal(
        (tuple(x + y for x, y in zip(g, h)) for g in a.generators for h in b.generators), a.dim
    )


def power(ideal: MonomialIdeal, n: int) -> MonomialIdeal:
    if n < 0:
        raise DegenerateInputError("power needs n >= 0")
    if n == 0:
        return MonomialIdeal([(0,) * ideal.dim])
    result = ideal
    for _ in range(n - 1):
        result = product(result, ideal)
    return result


def cone_section_level(nd: NewtonData, p: Sequence[int]):
    """``(T(p), attained_on_bounded)`` where T is the least ratio <p,b>/c.

    Only facets with positive offset take part.  Returns ``(None, False)`` for
    a point outside the half-spaces of the zero-offset facets.
    """
    best = None
    on_bounded = False
    for f in nd.facets:
        s = int_dot(f.normal, p)
        if f.offset == 0:
            if s < 0:
                return None, False
            continue
        t = Fraction(s) / f.offset
        if best is None or t < best:
            best, on_bounded = t, f.bounded
        elif t == best and f.bounded:
            on_bounded = True
    return best, on_bounded


def cone_section_membership(nd: NewtonData, p: Sequence[int], n: int) -> bool:
    """Whether ``p`` lies in the n-th cone section ``U_{n<=s<n+1} s*bd(I)``."""
    if not nd.bounded_facets:
        return False
    if not any(p):
        return n == 0
    t, on_bounded = cone_section_level(nd, p)
    if t is None or not on_bounded:
        return False
    return n <= t < n + 1
