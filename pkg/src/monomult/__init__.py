"""Exact j-, epsilon- and Hilbert-Samuel multiplicities of monomial ideals.

The multiplicities are computed as normalized volumes of regions attached to
the Newton polyhedron; :mod:`monomult.oracle` recomputes the defining length
sequences by counting lattice points.
"""
from .errors import (
    DegenerateInputError,
    DimensionError,
    InputError,
    MonomultError,
    ParseError,
    UnboundedError,
)
from .exact import Hyperplane, determinant, dot, primitive_normal
from .ideal_io import IdealSpec, format_ideal, parse_ideal
from .multiplicity import (
    MultiplicityReport,
    cycle_edges,
    edge_ideal,
    epsilon_multiplicity,
    hs_multiplicity,
    j_multiplicity,
    multiplicity_report,
)
from .newton import (
    MonomialIdeal,
    NewtonData,
    analytic_spread,
    cone_section_membership,
    integral_closure,
    maximal_ideal,
    newton,
    power,
    saturation_closure,
)
from .polyhedra import (
    Facet,
    Polyhedron,
    facets,
    generators_to_inequalities,
    inequalities_to_vertices,
)
from .toric import PointedCone, ToricIdeal, toric_j_multiplicity, toric_newton
from .volume import out_normalized_volume, polytope_volume, pyr_normalized_volume

__version__ = "0.1.0"
