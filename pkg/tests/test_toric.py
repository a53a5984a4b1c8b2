from itertools import product as cartesian

import pytest
from hypothesis import given
from hypothesis import strategies as st

from monomult import newton, j_multiplicity
from monomult.errors import InputError
from monomult.oracle import cone_section_counts
from monomult.toric import (
    PointedCone,
    ToricIdeal,
    toric_j_multiplicity,
    toric_newton,
    toric_saturation_member,
)

from conftest import ALL_IDEALS, monomial_ideals

SIGMA = PointedCone([(1, 0), (1, 2)])


def facet_data(nd):
    return [(f.normal, f.offset, f.bounded, f.incident_vertices) for f in nd.facets]


class TestCone:
    def test_dual_description(self):
        assert set(SIGMA.inequalities) == {(0, 1), (2, -1)}
        assert SIGMA.contains((1, 2)) and SIGMA.contains((3, 1))
        assert not SIGMA.contains((0, 1))

    def test_redundant_rays_dropped(self):
        cone = PointedCone([(1, 0), (0, 1), (1, 1), (2, 0)])
        assert set(cone.ray_generators) == {(1, 0), (0, 1)}

    def test_rejects_bad_cones(self):
        with pytest.raises(InputError):
            PointedCone([(1, 0), (-1, 0), (0, 1)])  # contains a line
        with pytest.raises(InputError):
            PointedCone([(1, 1, 0), (0, 1, 1)])  # not full-dimensional
        with pytest.raises(InputError):
            PointedCone([])
        with pytest.raises(InputError):
            PointedCone([(0, 0), (1, 0)])

    def test_ideal_validation(self):
        with pytest.raises(InputError):
            ToricIdeal(SIGMA, [(0, 1)])
        I = ToricIdeal(SIGMA, [(2, 1), (1, 2), (3, 3), (3, 1)])
        # (3,3) - (1,2) = (2,1) and (3,1) - (2,1) = (1,0) lie in the cone
        assert set(I.generators) == {(2, 1), (1, 2)}


class TestToricJ:
    def test_derived_example(self):
        I = ToricIdeal(SIGMA, [(2, 1), (1, 2)])
        nd = toric_newton(I)
        bounded = nd.bounded_facets
        assert len(bounded) == 1 and bounded[0].normal == (1, 1)
        assert toric_j_multiplicity(I) == 3

    def test_single_generator(self):
        I = ToricIdeal(SIGMA, [(1, 1)])
        nd = toric_newton(I)
        assert nd.bounded_facets == () and len(nd.facets) == 2
        assert toric_j_multiplicity(I) == 0

    @given(st.lists(st.tuples(st.integers(0, 6), st.integers(0, 6)), min_size=1, max_size=4))
    def test_single_generator_random(self, gens):
        gens = [g for g in gens if SIGMA.contains(g)]
        if gens:
            assert toric_j_multiplicity(ToricIdeal(SIGMA, gens[:1])) == 0

    @pytest.mark.parametrize("name", sorted(ALL_IDEALS))
    def test_orthant_specialization(self, name):
        ideal = ALL_IDEALS[name]
        T = ToricIdeal(PointedCone.orthant(ideal.dim), ideal.generators)
        assert facet_data(toric_newton(T)) == facet_data(newton(ideal))
        assert toric_j_multiplicity(T) == j_multiplicity(ideal)

    @given(monomial_ideals())
    def test_orthant_specialization_random(self, ideal):
        if ideal.is_unit:
            return
        T = ToricIdeal(PointedCone.orthant(ideal.dim), ideal.generators)
        assert facet_data(toric_newton(T)) == facet_data(newton(ideal))

    def test_three_dimensional_cone(self):
        cone = PointedCone([(1, 0, 0), (0, 1, 0), (1, 1, 2)])
        I = ToricIdeal(cone, [(1, 1, 2), (2, 0, 0), (0, 2, 0)])
        (f,) = toric_newton(I).bounded_facets
        assert (f.normal, f.offset) == ((1, 1, 0), 2)
        # one simplex: |det((2,0,0),(0,2,0),(1,1,2))| = 8
        assert toric_j_multiplicity(I) == 8


def ray_witness(ideal, nd, p, reach=40):
    """Definitional saturation test: p + a*r lands in the closure for every ray r."""
    return all(
        any(nd.contains(tuple(x + a * y for x, y in zip(p, r))) for a in range(reach))
        for r in ideal.cone.ray_generators
    )


@pytest.mark.parametrize("gens", [[(2, 1), (1, 2)], [(1, 1)], [(4, 1), (1, 2), (3, 4)], [(2, 0), (1, 2)]])
def test_saturation_half_spaces_match_ray_witness(gens):
    I = ToricIdeal(SIGMA, gens)
    nd = toric_newton(I)
    for p in cartesian(range(0, 9), repeat=2):
        if SIGMA.contains(p):
            assert toric_saturation_member(nd, SIGMA, p) == ray_witness(I, nd, p), p


def test_toric_cone_section_counts_are_linear():
    I = ToricIdeal(SIGMA, [(2, 1), (1, 2)])
    counts = cone_section_counts(toric_newton(I), 12)
    assert counts == [3 * n + 2 for n in range(13)]
