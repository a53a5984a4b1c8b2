"""Monomial ideals in normal affine semigroup rings k[Z^d & sigma]."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InputError
from .exact import int_dot, primitive, rank
from .newton import NewtonData, newton_from_generators, unit_vectors
from .polyhedra import NotPointedError, extreme_rays
from .volume import pyr_normalized_volume


@dataclass(frozen=True, init=False)
class PointedCone:
    """Full-dimensional pointed rational cone given by ray generators.

    ``inequalities`` holds the primitive facet normals ``a`` (``<a, x> >= 0``
    on the cone); ``ray_generators`` is reduced to the extremal rays.
    """

    dim: int
    ray_generators: tuple
    inequalities: tuple

    def __init__(self, rays: Iterable[Sequence[int]]):
        rays = [tuple(int(x) for x in r) for r in rays]
        if not rays:
            raise InputError("a cone needs ray generators")
        d = len(rays[0])
        if any(len(r) != d for r in rays):
            raise InputError("ray generators of mixed dimension")
        if any(not any(r) for r in rays):
            raise InputError("zero ray generator")
        rays = sorted(set(primitive(r) for r in rays))
        if rank(rays) < d:
            raise InputError("cone is not full-dimensional")
        try:
            normals = extreme_rays(rays, d)
        except NotPointedError as exc:  # pragma: no cover - rank checked above
            raise InputError(str(exc)) from exc
        if rank(normals) < d:
            raise InputError("cone is not pointed")
        extremal = tuple(
            r for r in rays if rank([a for a in normals if int_dot(a, r) == 0]) == d - 1
        )
        object.__setattr__(self, "dim", d)
        object.__setattr__(self, "ray_generators", extremal)
        object.__setattr__(self, "inequalities", tuple(normals))

    @classmethod
    def orthant(cls, d: int) -> "PointedCone":
        return cls(unit_vectors(d))

    def contains(self, p: Sequence[int]) -> bool:
        return all(int_dot(a, p) >= 0 for a in self.inequalities)


@dataclass(frozen=True, init=False)
class ToricIdeal:
    """Monomial ideal of k[Z^d & sigma], minimal under ``v <= w iff w - v in sigma``."""

    cone: PointedCone
    generators: tuple

    def __init__(self, cone: PointedCone, generators: Iterable[Sequence[int]]):
        gens = sorted(set(tuple(int(x) for x in g) for g in generators))
        if not gens:
            raise InputError("the zero ideal is not supported")
        if any(len(g) != cone.dim for g in gens):
            raise InputError("generator dimension does not match the cone")
        for g in gens:
            if not cone.contains(g):
                raise InputError(f"generator {g} is not in the cone")
        minimal = [
            g for g in gens
            if not any(h != g and cone.contains([a - b for a, b in zip(g, h)]) for h in gens)
        ]
        object.__setattr__(self, "cone", cone)
        object.__setattr__(self, "generators", tuple(minimal))

    @property
    def dim(self) -> int:
        return self.cone.dim

    def contains(self, p) -> bool:
        return any(self.cone.contains([a - b for a, b in zip(p, g)]) for g in self.generators)


def toric_newton(ideal: ToricIdeal) -> NewtonData:
    """Newton polyhedron ``conv(generators) + sigma``.

    Boundedness comes from incident rays; it is cross-checked against the
    criterion that a bounded facet normal pairs positively with every ray.
    """
    nd = newton_from_generators(ideal.generators, ideal.cone.ray_generators, orthant=False)
    for f in nd.facets:
        positive = all(int_dot(r, f.normal) > 0 for r in ideal.cone.ray_generators)
        assert positive == f.bounded, f
    return nd


def toric_j_multiplicity(ideal: ToricIdeal) -> int:
    vol = pyr_normalized_volume(toric_newton(ideal))
    assert vol.denominator == 1
    return int(vol)


def toric_saturation_member(nd: NewtonData, cone: PointedCone, p) -> bool:
    """Half-space test for ``p`` in the saturation of the closure."""
    return cone.contains(p) and all(f.hyperplane.contains(p) for f in nd.unbounded_facets)
