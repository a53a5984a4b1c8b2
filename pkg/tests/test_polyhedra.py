from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from monomult import newton
from monomult.errors import DegenerateInputError, UnboundedError
from monomult.exact import Hyperplane, determinant, dot, rank
from monomult.polyhedra import (
    extreme_rays,
    facets,
    generators_to_inequalities,
    inequalities_to_vertices,
)

from conftest import ALL_IDEALS, TRIANGLE, STAIR_B, XY, monomial_ideals

E2 = [(1, 0), (0, 1)]


def H(b, c):
    return Hyperplane.from_integer_row(b, c)


def as_set(ineqs):
    return {(h.normal, h.offset) for h in ineqs}


def cramer_vertices(ineqs, d):
    """Every feasible intersection of d independent boundary hyperplanes."""
    out = set()
    for sub in combinations(ineqs, d):
        a = [list(h.normal) for h in sub]
        det = determinant(a)
        if det == 0:
            continue
        x = []
        for k in range(d):
            ak = [row[:k] + [h.offset] + row[k + 1:] for row, h in zip(a, sub)]
            x.append(determinant(ak) / det)
        if all(h.contains(x) for h in ineqs):
            out.add(tuple(x))
    return out


def box(d, lo, hi):
    rows = [H(tuple(int(i == j) for j in range(d)), lo) for i in range(d)]
    rows += [H(tuple(-int(i == j) for j in range(d)), -hi) for i in range(d)]
    return rows


class TestGeneratorsToInequalities:
    def test_stair_b(self):
        p = generators_to_inequalities([(1, 5), (2, 3), (3, 2)], E2)
        assert as_set(p.inequalities) == {((1, 0), 1), ((0, 1), 2), ((2, 1), 7), ((1, 1), 5)}
        assert set(p.vertices) == {(1, 5), (2, 3), (3, 2)}

    def test_stair_a(self):
        p = generators_to_inequalities([(0, 4), (1, 2), (2, 1)], E2)
        assert as_set(p.inequalities) == {((1, 0), 0), ((0, 1), 1), ((2, 1), 4), ((1, 1), 3)}

    def test_translated_orthant(self):
        for d in (1, 2, 3):
            p = generators_to_inequalities([(1,) * d], [tuple(int(i == j) for j in range(d)) for i in range(d)])
            assert as_set(p.inequalities) == {(tuple(int(i == j) for j in range(d)), 1) for i in range(d)}

    def test_interior_points_dropped(self):
        p = generators_to_inequalities([(0, 4), (1, 2), (2, 1), (3, 3), (1, 3)], E2)
        assert set(p.vertices) == {(0, 4), (1, 2), (2, 1)}

    def test_bounded_polytope(self):
        p = generators_to_inequalities([(0, 0), (1, 0), (0, 1), (1, 1), (Fraction(1, 2), Fraction(1, 2))])
        assert len(p.inequalities) == 4
        assert len(p.vertices) == 4

    def test_lower_dimensional_flag(self):
        p = generators_to_inequalities([(0, 0), (1, 1), (2, 2)])
        assert not p.full_dimensional
        with pytest.raises(DegenerateInputError):
            facets(p)

    def test_empty(self):
        with pytest.raises(DegenerateInputError):
            generators_to_inequalities([])


class TestInequalitiesToVertices:
    def test_simplex(self):
        got = inequalities_to_vertices([H((1, 0), 0), H((0, 1), 0), H((-1, -1), -1)], 2)
        assert set(got) == {(0, 0), (1, 0), (0, 1)}

    def test_out_region_piece(self):
        rows = [H((1, 0), 0), H((0, 1), 1), H((-2, -1), -4), H((-1, -1), -3)]
        assert set(inequalities_to_vertices(rows, 2)) == {
            (0, 1), (0, 3), (1, 2), (Fraction(3, 2), 1)
        }

    def test_infeasible(self):
        assert inequalities_to_vertices([H((1,), 1), H((-1,), 0)], 1) == []
        assert inequalities_to_vertices([H((1, 0), 1), H((-1, 0), 0), H((0, 1), 0)], 2) == []

    def test_unbounded(self):
        with pytest.raises(UnboundedError):
            inequalities_to_vertices([H((1, 0), 0), H((0, 1), 0)], 2)
        with pytest.raises(UnboundedError):
            inequalities_to_vertices([H((1, 0), 0), H((-1, 0), -1)], 2)

    @given(st.lists(st.tuples(st.integers(-3, 3), st.integers(-3, 3), st.integers(-4, 4)), max_size=4))
    def test_matches_cramer(self, extra):
        rows = box(2, -3, 3) + [H((a, b), c) for a, b, c in extra if a or b]
        assert set(inequalities_to_vertices(rows, 2)) == cramer_vertices(rows, 2)

    @given(st.lists(st.tuples(*[st.integers(-2, 2)] * 3, st.integers(-3, 3)), max_size=3))
    def test_matches_cramer_3d(self, extra):
        rows = box(3, -2, 2) + [H((a, b, c), k) for a, b, c, k in extra if a or b or c]
        assert set(inequalities_to_vertices(rows, 3)) == cramer_vertices(rows, 3)


class TestFacets:
    def test_stair_b(self):
        fs = newton(STAIR_B).facets
        bounded = [f for f in fs if f.bounded]
        assert {f.incident_vertices for f in bounded} == {((1, 5), (2, 3)), ((2, 3), (3, 2))}
        assert {(f.normal, f.offset) for f in fs if not f.bounded} == {((1, 0), 1), ((0, 1), 2)}

    def test_triangle(self):
        bounded = newton(TRIANGLE).bounded_facets
        assert len(bounded) == 1
        assert bounded[0].normal == (1, 1, 1) and bounded[0].offset == 2
        assert set(bounded[0].incident_vertices) == {(1, 1, 0), (0, 1, 1), (1, 0, 1)}

    def test_principal(self):
        assert newton(XY).bounded_facets == ()

    @pytest.mark.parametrize("name", sorted(ALL_IDEALS))
    def test_boundedness_criteria_agree(self, name):
        for f in newton(ALL_IDEALS[name]).facets:
            assert all(x >= 0 for x in f.normal)
            assert f.bounded == (not f.incident_rays) == all(x > 0 for x in f.normal)
            if f.bounded:
                assert f.offset > 0


def _facet_checks(nd):
    d = nd.dim
    verts = nd.vert
    rays = nd.polyhedron.rays
    for f in nd.facets:
        # valid on every generator, and spans a (d-1)-dimensional face
        assert all(f.hyperplane.contains(v) for v in verts)
        assert all(dot(f.normal, r) >= 0 for r in rays)
        tv = f.incident_vertices
        dirs = [[a - b for a, b in zip(v, tv[0])] for v in tv[1:]] + [list(r) for r in f.incident_rays]
        assert rank(dirs) == d - 1
        # the facet is the hull of its incident vertices plus the rays it carries
        assert set(f.incident_rays) == {r for r in rays if dot(f.normal, r) == 0}
        if f.bounded:
            assert not f.incident_rays


@given(monomial_ideals())
def test_facets_are_faces(ideal):
    nd = newton(ideal)
    if not nd.is_unit:
        _facet_checks(nd)


@given(monomial_ideals())
def test_round_trip_through_box(ideal):
    nd = newton(ideal)
    if nd.is_unit:
        return
    d = ideal.dim
    top = max(max(g) for g in ideal.generators) + 3
    clipped = inequalities_to_vertices(list(nd.polyhedron.inequalities) + box(d, -1, top), d)
    # vertices strictly inside the box are exactly the Newton vertices
    assert {v for v in clipped if all(x < top for x in v)} == set(nd.vert)


@given(monomial_ideals())
def test_vertices_are_minimal_generators(ideal):
    nd = newton(ideal)
    assert set(nd.vert) <= set(ideal.generators)


def test_extreme_rays_of_a_plane_cone():
    assert sorted(extreme_rays([(1, 0), (1, 2)], 2)) == [(0, 1), (2, -1)]
