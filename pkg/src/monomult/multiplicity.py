"""j-, epsilon- and Hilbert-Samuel multiplicities of monomial ideals."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .errors import InputError
from .exact import Hyperplane
from .newton import MonomialIdeal, NewtonData, analytic_spread, newton
from .volume import clipped_volumes, out_normalized_volume, pyr_normalized_volume


def _as_newton(ideal) -> NewtonData:
    return ideal if isinstance(ideal, NewtonData) else newton(ideal)


def j_multiplicity(ideal: MonomialIdeal | NewtonData) -> int:
    nd = _as_newton(ideal)
    if nd.is_unit:
        return 0
    vol = pyr_normalized_volume(nd)
    assert vol.denominator == 1
    return int(vol)


def epsilon_multiplicity(ideal: MonomialIdeal | NewtonData) -> Fraction:
    return out_normalized_volume(_as_newton(ideal))


def hs_multiplicity(ideal: MonomialIdeal) -> Optional[int]:
    """Hilbert-Samuel multiplicity of an m-primary ideal, else ``None``.

    Computed as ``d!`` times the volume of the orthant part of the box not
    covered by the Newton polyhedron; this route never looks at pyramids.
    """
    if not ideal.is_m_primary:
        return None
    nd = newton(ideal)
    d = ideal.dim
    coords = [Hyperplane(tuple(int(i == j) for j in range(d)), Fraction(0)) for i in range(d)]
    outer, inner, _, _ = clipped_volumes(nd, unbounded_only=coords)
    vol = outer - inner
    assert vol.denominator == 1
    return int(vol)


@dataclass(frozen=True)
class MultiplicityReport:
    j: int
    epsilon: Fraction
    hilbert_samuel: Optional[int]
    analytic_spread: int
    is_m_primary: bool


def multiplicity_report(ideal: MonomialIdeal) -> MultiplicityReport:
    nd = newton(ideal)
    return MultiplicityReport(
        j=j_multiplicity(nd),
        epsilon=epsilon_multiplicity(nd),
        hilbert_samuel=hs_multiplicity(ideal),
        analytic_spread=analytic_spread(nd),
        is_m_primary=ideal.is_m_primary,
    )


def edge_ideal(edges: Iterable, d: int | None = None) -> MonomialIdeal:
    """Edge ideal ``(x_i x_j : {i,j} an edge)`` on vertices ``1..d``."""
    edges = [tuple(int(v) for v in e) for e in edges]
    if not edges:
        raise InputError("graph has no edges")
    if any(len(e) != 2 for e in edges):
        raise InputError("edges must join two vertices")
    if d is None:
        d = max(max(e) for e in edges)
    if d < 2:
        raise InputError("edge ideals need d >= 2")
    gens = []
    for i, j in edges:
        if i == j:
            raise InputError(f"loop at vertex {i}")
        if not (1 <= i <= d and 1 <= j <= d):
            raise InputError(f"edge {i}-{j} leaves the vertex range 1..{d}")
        g = [0] * d
        g[i - 1] = g[j - 1] = 1
        gens.append(tuple(g))
    return MonomialIdeal(gens, d)


def cycle_edges(d: int) -> list:
    if d < 3:
        raise InputError("a cycle needs at least 3 vertices")
    return [(i, i % d + 1) for i in range(1, d + 1)]

