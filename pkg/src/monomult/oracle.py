"""Brute-force lattice-point counts behind the multiplicity limits.

Nothing here calls the volume code: the counts are produced by scanning
boxes of lattice points, so they can be compared with the volume formulas as
an independent check.

Geometric scans work from the facet inequalities of the Newton polyhedron.
For a point ``p`` write ``T(p)`` for the least ratio ``<p,b>/c`` over facets
with ``c > 0`` and ``U(p)`` for the same minimum over unbounded facets only
(``+inf`` when there are none).  Then

* ``p`` is in the n-th cone section iff ``n <= T(p) < n+1`` and the minimum is
  attained on a bounded facet;
* ``p`` counts towards the closure filtration at level ``n`` iff
  ``n <= T(p) < n+1 <= U(p)``;
* ``p`` counts towards the closure epsilon length at ``n`` iff ``T(p) < n <= U(p)``.

Algebraic scans (``direct_*``) only use generators of honest powers.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from math import factorial, lcm
from typing import Iterator, Sequence

import numpy as np

from .errors import InputError
from .newton import MonomialIdeal, NewtonData, newton, unit_vectors
from .polyhedra import extreme_rays

KINDS = (
    "closure_filtration_j",
    "cone_section_count",
    "direct_power_j",
    "closure_epsilon",
    "direct_power_epsilon",
)

_CHUNK = 1 << 18
_INT64_SAFE = 1 << 62


def _newton_of(ideal) -> NewtonData:
    if isinstance(ideal, NewtonData):
        return ideal
    if isinstance(ideal, MonomialIdeal):
        return newton(ideal)
    from .toric import toric_newton  # ToricIdeal

    return toric_newton(ideal)


def _monomial(ideal) -> MonomialIdeal:
    if not isinstance(ideal, MonomialIdeal):
        raise InputError("direct-power counts need a MonomialIdeal")
    return ideal


def _cone_rows(nd: NewtonData) -> np.ndarray:
    """Inequalities ``a.x >= 0`` of the recession cone."""
    d = nd.dim
    rays = [tuple(r) for r in nd.recession]
    if sorted(rays) == sorted(unit_vectors(d)):
        return np.eye(d, dtype=np.int64)
    return np.array(extreme_rays(rays, d), dtype=np.int64)


def _vertex_box(nd: NewtonData, scale: int):
    """Box ``scale * [min(0, v_i), max(0, v_i)]`` around ``scale * conv(0, vert)``."""
    lo, hi = [], []
    for i in range(nd.dim):
        coords = [int(v[i]) for v in nd.vert] + [0]
        lo.append(scale * min(coords))
        hi.append(scale * max(coords))
    return lo, hi


def iter_box(lo: Sequence[int], hi: Sequence[int], chunk: int = _CHUNK) -> Iterator[np.ndarray]:
    """All lattice points of ``prod [lo_i, hi_i]`` as int64 row blocks.

    Blocks are slabs in the first coordinate, sized to keep memory flat.
    """
    d = len(lo)
    if any(h < l for l, h in zip(lo, hi)):
        return
    if d == 1:
        yield np.arange(lo[0], hi[0] + 1, dtype=np.int64).reshape(-1, 1)
        return
    axes = [np.arange(l, h + 1, dtype=np.int64) for l, h in zip(lo[1:], hi[1:])]
    rest = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, d - 1)
    per = max(1, chunk // max(1, len(rest)))
    firsts = np.arange(lo[0], hi[0] + 1, dtype=np.int64)
    for start in range(0, len(firsts), per):
        block = firsts[start:start + per]
        yield np.concatenate(
            [np.repeat(block, len(rest)).reshape(-1, 1), np.tile(rest, (len(block), 1))], axis=1
        )


@dataclass
class _Ratios:
    """Facet data with offsets cleared to a common denominator ``L``.

    For facet ``k`` with positive offset, ``<p,b_k>/c_k = (B_k . p) / L``.
    """

    B: np.ndarray
    L: int
    bounded: np.ndarray
    cone: np.ndarray

    @classmethod
    def build(cls, nd: NewtonData, reach: int) -> "_Ratios":
        rows = []
        offs = []
        bounded = []
        for f in nd.facets:
            if f.offset <= 0:
                continue  # zero-offset facets hold on the whole cone
            b, c = f.hyperplane.integer_form()
            rows.append(b)
            offs.append(c)
            bounded.append(f.bounded)
        L = reduce(lcm, offs, 1)
        B = [[x * (L // c) for x in b] for b, c in zip(rows, offs)]
        big = max((sum(abs(x) for x in r) for r in B), default=0) * max(reach, 1)
        if big >= _INT64_SAFE:
            raise OverflowError("scan would overflow int64; shrink n")
        return cls(
            np.array(B, dtype=np.int64).reshape(len(B), nd.dim),
            L,
            np.array(bounded, dtype=bool),
            _cone_rows(nd),
        )

    def evaluate(self, pts: np.ndarray):
        """``(in_cone, T_num, on_bounded, U_num)``; ``U_num`` is None-free (int64 max for +inf)."""
        in_cone = (pts @ self.cone.T >= 0).all(axis=1)
        vals = pts @ self.B.T
        tmin = vals.min(axis=1)
        if self.bounded.any():
            on_b = vals[:, self.bounded].min(axis=1) == tmin
        else:
            on_b = np.zeros(len(pts), dtype=bool)
        if (~self.bounded).any():
            umin = vals[:, ~self.bounded].min(axis=1)
        else:
            umin = np.full(len(pts), np.iinfo(np.int64).max)
        return in_cone, tmin, on_b, umin


def cone_section_counts(ideal, n_max: int) -> list:
    """``#(Z^d & cs_n(I))`` for ``n = 0..n_max`` from one box scan.

    ``cs_n`` lies in ``(n+1) pyr(I)``, inside ``(n+1) conv(0, vert(I))``.
    """
    nd = _newton_of(ideal)
    counts = np.zeros(n_max + 1, dtype=np.int64)
    if nd.is_unit or not nd.bounded_facets:
        return counts.tolist()
    lo, hi = _vertex_box(nd, n_max + 1)
    rat = _Ratios.build(nd, max(map(abs, lo + hi)))
    for pts in iter_box(lo, hi):
        in_cone, t, on_b, _ = rat.evaluate(pts)
        level = np.floor_divide(t, rat.L)
        ok = in_cone & on_b & (t >= 0) & (level <= n_max)
        zero = ~pts.any(axis=1)
        ok &= ~(zero & (t != 0))
        counts += np.bincount(level[ok], minlength=n_max + 1)[: n_max + 1]
    return counts.tolist()


def count_cone_section(ideal, n: int) -> int:
    if n < 0:
        raise InputError("n must be nonnegative")
    return cone_section_counts(ideal, n)[n]


def closure_filtration_lengths(ideal, n_max: int) -> list:
    """Lengths of ``H^0_m(closure(I^n)/closure(I^{n+1}))`` for ``n = 0..n_max``.

    A point counts at level ``n`` when it lies in ``n conv(I)``, misses
    ``(n+1) conv(I)``, and meets the unbounded-facet inequalities at scale
    ``n+1`` (the saturation of ``closure(I^{n+1})``).  Those points lie in
    ``(n+1) pyr(I)``, so the vertex box at scale ``n_max + 1`` covers them.
    """
    nd = _newton_of(ideal)
    counts = np.zeros(n_max + 1, dtype=np.int64)
    if nd.is_unit:
        return counts.tolist()
    lo, hi = _vertex_box(nd, n_max + 1)
    rat = _Ratios.build(nd, max(map(abs, lo + hi)))
    L = rat.L
    for pts in iter_box(lo, hi):
        in_cone, t, _, u = rat.evaluate(pts)
        level = np.floor_divide(t, L)
        ok = in_cone & (t >= 0) & (level <= n_max)
        # U(p) >= level + 1, compared exactly on numerators.
        ok &= u >= (level + 1) * L
        counts += np.bincount(level[ok], minlength=n_max + 1)[: n_max + 1]
    return counts.tolist()


def closure_filtration_length(ideal, n: int) -> int:
    if n < 0:
        raise InputError("n must be nonnegative")
    return closure_filtration_lengths(ideal, n)[n]


def closure_epsilon_lengths(ideal, n_max: int) -> list:
    """Lengths of ``H^0_m(R/closure(I^n))`` for ``n = 0..n_max`` (index 0 is 0)."""
    nd = _newton_of(ideal)
    diff = np.zeros(n_max + 2, dtype=np.int64)
    if nd.is_unit or n_max < 1:
        return [0] * (n_max + 1)
    lo, hi = _vertex_box(nd, n_max)
    rat = _Ratios.build(nd, max(map(abs, lo + hi)))
    L = rat.L
    for pts in iter_box(lo, hi):
        in_cone, t, _, u = rat.evaluate(pts)
        first = np.floor_divide(t, L) + 1  # least n with T(p) < n
        last = np.minimum(np.floor_divide(u, L), n_max)  # greatest n with n <= U(p)
        first = np.maximum(first, 1)
        ok = in_cone & (first <= last)
        np.add.at(diff, first[ok], 1)
        np.add.at(diff, last[ok] + 1, -1)
    return np.cumsum(diff)[: n_max + 1].tolist()


def ehrhart_difference_epsilon(ideal, n: int, box: int | None = None) -> int:
    """The closure epsilon length at ``n`` as ``E_P1(n) - E_P2(n)``.

    ``P1`` is the unit-box-scaled region cut by the unbounded facets and
    ``P2`` its intersection with the Newton polyhedron; each count is its own
    scan against plain scaled inequalities.
    """
    nd = _newton_of(ideal)
    if nd.is_unit:
        return 0
    m = nd.max_vertex_coordinate() + 1 if box is None else box
    lo, hi = [0] * nd.dim, [n * m] * nd.dim
    unb = [f.hyperplane.integer_form() for f in nd.unbounded_facets]
    allf = [f.hyperplane.integer_form() for f in nd.facets]

    def count(rows):
        if not rows:
            return sum(len(p) for p in iter_box(lo, hi))
        B = np.array([b for b, _ in rows], dtype=np.int64)
        C = np.array([c for _, c in rows], dtype=np.int64) * n
        return int(sum(((p @ B.T) >= C).all(axis=1).sum() for p in iter_box(lo, hi)))

    return count(unb) - count(allf)


def power_grids(ideal: MonomialIdeal, n_max: int, top: Sequence[int]) -> Iterator[np.ndarray]:
    """Boolean pictures of ``Gamma(I^n)`` inside ``prod [0, top_i]`` for ``n = 0..n_max``.

    Built from ``Gamma(I^n) = U_g (Gamma(I^{n-1}) + g)`` over the generators
    ``g`` of ``I``; no polyhedral data is involved.
    """
    shape = tuple(int(t) + 1 for t in top)
    grid = np.ones(shape, dtype=bool)
    yield grid
    for _ in range(n_max):
        nxt = np.zeros(shape, dtype=bool)
        for g in ideal.generators:
            if any(gi >= s for gi, s in zip(g, shape)):
                continue
            src = tuple(slice(0, s - gi) for gi, s in zip(g, shape))
            dst = tuple(slice(gi, s) for gi, s in zip(g, shape))
            nxt[dst] |= grid[src]
        grid = nxt
        yield grid


def _saturated_grid(grid: np.ndarray) -> np.ndarray:
    """``p`` with ``p + t e_j`` in the ideal for every ``j`` and large ``t``.

    Valid when the grid reaches the largest generator coordinate in every
    direction: then the top slice along axis ``j`` decides membership.
    """
    ok = np.ones(grid.shape, dtype=bool)
    for j in range(grid.ndim):
        top = np.take(grid, [grid.shape[j] - 1], axis=j)
        ok &= np.broadcast_to(top, grid.shape)
    return ok


def _generator_top(ideal: MonomialIdeal) -> list:
    return [max(g[i] for g in ideal.generators) for i in range(ideal.dim)]


def direct_power_j_lengths(ideal: MonomialIdeal, n_max: int) -> list:
    """Lengths of ``H^0_m(I^n/I^{n+1})`` for ``n = 0..n_max`` from honest powers.

    A saturated non-member ``p`` of ``I^{n+1}`` has ``p_i < (n+1) G_i`` with
    ``G_i`` the largest generator coordinate: the witness for direction ``i``
    would otherwise divide ``p``.  The grid runs to ``(n_max+1) G_i``.
    """
    if ideal.is_unit:
        return [0] * (n_max + 1)
    top = [(n_max + 1) * g for g in _generator_top(ideal)]
    out = []
    prev = None
    for k, grid in enumerate(power_grids(ideal, n_max + 1, top)):
        if prev is not None:
            out.append(int((prev & ~grid & _saturated_grid(grid)).sum()))
        prev = grid
    return out


def direct_power_j_length(ideal: MonomialIdeal, n: int) -> int:
    if n < 0:
        raise InputError("n must be nonnegative")
    if ideal.is_unit:
        return 0
    top = [(n + 1) * g for g in _generator_top(ideal)]
    grids = list(power_grids(ideal, n + 1, top))
    lo, hi = grids[n], grids[n + 1]
    return int((lo & ~hi & _saturated_grid(hi)).sum())


def direct_power_epsilon_lengths(ideal: MonomialIdeal, n_max: int) -> list:
    """Lengths of ``H^0_m(R/I^n)`` (saturated non-members of ``I^n``), ``n = 0..n_max``."""
    if ideal.is_unit or n_max < 1:
        return [0] * (n_max + 1)
    top = [n_max * g for g in _generator_top(ideal)]
    return [int((~grid & _saturated_grid(grid)).sum()) for grid in power_grids(ideal, n_max, top)]


def direct_power_epsilon_length(ideal: MonomialIdeal, n: int) -> int:
    if n < 1:
        raise InputError("n must be positive")
    return direct_power_epsilon_lengths(ideal, n)[n]


def epsilon_lengths(ideal, n: int, use_closure: bool = True) -> int:
    if n < 1:
        raise InputError("n must be positive")
    if use_closure:
        return closure_epsilon_lengths(ideal, n)[n]
    return direct_power_epsilon_length(ideal, n)


@dataclass
class LengthSequence:
    kind: str
    dim: int
    values: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InputError(f"unknown sequence kind {self.kind!r}")

    @property
    def normalization(self) -> str:
        return "epsilon" if self.kind.endswith("epsilon") else "j"


def length_sequence(ideal, kind: str, n_max: int, n_min: int | None = None) -> LengthSequence:
    """Build a :class:`LengthSequence` of the given kind over ``n_min..n_max``."""
    nd = _newton_of(ideal)
    if n_min is None:
        n_min = 1 if kind.endswith("epsilon") else 0
    if kind == "cone_section_count":
        vals = cone_section_counts(nd, n_max)
    elif kind == "closure_filtration_j":
        vals = closure_filtration_lengths(nd, n_max)
    elif kind == "closure_epsilon":
        vals = closure_epsilon_lengths(nd, n_max)
    elif kind == "direct_power_j":
        vals = direct_power_j_lengths(_monomial(ideal), n_max)
    elif kind == "direct_power_epsilon":
        vals = direct_power_epsilon_lengths(_monomial(ideal), n_max)
    else:
        raise InputError(f"unknown sequence kind {kind!r}")
    if isinstance(vals, list):
        vals = {n: vals[n] for n in range(n_min, n_max + 1)}
    return LengthSequence(kind, nd.dim, vals)


@dataclass(frozen=True)
class ConvergenceReport:
    target: Fraction
    normalized: dict
    n_max: int
    gap: Fraction

    @property
    def relative_gap(self):
        return None if self.target == 0 else self.gap / abs(self.target)


def normalize(value: int, n: int, d: int, normalization: str) -> Fraction:
    if n == 0:
        raise InputError("cannot normalize at n = 0")
    if normalization == "j":
        return Fraction(factorial(d - 1) * value, n ** (d - 1))
    if normalization == "epsilon":
        return Fraction(factorial(d) * value, n ** d)
    raise InputError(f"unknown normalization {normalization!r}")


def convergence_report(seq: LengthSequence, target, normalization: str | None = None) -> ConvergenceReport:
    """Normalized tail of a length sequence and its gap to ``target`` at the last n."""
    if not seq.values:
        raise InputError("empty length sequence")
    normalization = normalization or seq.normalization
    normed = {
        n: normalize(v, n, seq.dim, normalization) for n, v in sorted(seq.values.items()) if n > 0
    }
    if not normed:
        raise InputError("sequence has no positive n")
    n_max = max(normed)
    target = Fraction(target)
    return ConvergenceReport(target, normed, n_max, abs(normed[n_max] - target))
