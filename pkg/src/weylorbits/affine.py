"""Affine Weyl machinery: the fundamental domain, grids and torsion orders.

The affine Weyl group adds to the reflections the translation lattice
of coroots; its fundamental domain F is the simplex with vertices at
the origin and the fundamental coweights divided by the comarks.  This
module reduces arbitrary points into F, enumerates the two natural
finite point families (the level grid inside F and the full torsion
lattice of a given denominator) and classifies points by the orders at
which their multiples return to the coweight and coroot lattices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iproduct

from .errors import (
    CapExceeded,
    DomainError,
    NonTermination,
    UnsupportedType,
)
from .root_system import RootSystem, factor_slices
from .weights import (
    Point,
    coweight_coords,
    fundamental_copoint,
    point,
    weight_to_point,
    Weight,
    zero_point,
)


def reflect_r0(x: Point) -> Point:
    """Affine reflection in the wall ``<y, xi> = 1`` of a simple system."""
    rs = x.rs
    if not rs.is_simple:
        raise UnsupportedType("the affine reflection r_0 is defined per simple factor")
    level = sum(a * b for a, b in zip(rs.xi_omega, x.coords))
    shift = 1 - level
    coords = tuple(b + shift * q for b, q in zip(x.coords, rs.comarks))
    return Point(rs, coords, x.exact)


def fundamental_vertices(rs: RootSystem) -> list[Point]:
    """Vertices of the fundamental simplex: the origin and ``omega_i / q_i``."""
    if not rs.is_simple:
        raise UnsupportedType("the fundamental simplex is defined per simple factor")
    verts = [zero_point(rs)]
    for i in range(1, rs.rank + 1):
        w = weight_to_point(
            Weight(rs, tuple(Fraction(int(j == i - 1)) for j in range(rs.rank)))
        )
        verts.append(w.scale(Fraction(1, rs.comarks[i - 1])))
    return verts


def in_fundamental_domain(x: Point) -> bool:
    """Membership of a point in the closed fundamental domain."""
    rs = x.rs
    for f, sl in factor_slices(rs):
        b = x.coords[sl]
        for j in range(f.rank):
            if sum(f.cartan[j][k] * b[k] for k in range(f.rank)) < 0:
                return False
        if sum(a * v for a, v in zip(f.xi_omega, b)) > 1:
            return False
    return True


def reduce_to_fundamental(x: Point) -> tuple[Point, int]:
    """Carry a point into the fundamental domain.

    Returns the reduced point and the number of reflection steps taken
    (translations are folded in up front and not counted).  Reflections
    pick the most negative simple pairing first, lowest index on ties,
    and fall back to the affine reflection while ``<x, xi> > 1``.
    """
    rs = x.rs
    coords = list(x.coords)
    steps = 0
    for f, sl in factor_slices(rs):
        idx = range(sl.start, sl.stop)
        for i in idx:
            coords[i] -= math.floor(coords[i])
        budget = 10 * (f.rank + 1) * f.weyl_order
        local = 0
        while True:
            pairs = [
                sum(f.cartan[j][k] * coords[sl.start + k] for k in range(f.rank))
                for j in range(f.rank)
            ]
            worst = min(range(f.rank), key=lambda j: (pairs[j], j))
            if pairs[worst] < 0:
                coords[sl.start + worst] -= pairs[worst]
            else:
                level = sum(
                    a * coords[sl.start + k] for k, a in enumerate(f.xi_omega)
                )
                if level > 1:
                    shift = 1 - level
                    for k in range(f.rank):
                        coords[sl.start + k] += shift * f.comarks[k]
                else:
                    break
            local += 1
            if local > budget:
                raise NonTermination(
                    f"reduction exceeded {budget} steps on factor {f.name}"
                )
        steps += local
    return Point(rs, tuple(coords), x.exact), steps


@dataclass(frozen=True)
class GridPoint:
    """A point of the level-``M`` grid in the fundamental domain.

    ``kac`` concatenates, factor by factor, the non-negative integers
    ``(s_0, s_1, ..., s_r)`` with ``s_0 + sum_i s_i m_i = M``; the point
    itself has fundamental-coweight coordinates ``s_i / M``.
    """

    rs: RootSystem
    level: int
    kac: tuple[int, ...]
    point: Point


def _factor_kacs(f: RootSystem, level: int) -> list[tuple[int, ...]]:
    out = []

    def rec(i: int, budget: int, acc: list[int]):
        if i == f.rank:
            out.append((budget, *acc))
            return
        mark = f.marks[i]
        for s in range(budget // mark + 1):
            acc.append(s)
            rec(i + 1, budget - s * mark, acc)
            acc.pop()

    rec(0, level, [])
    out.sort()
    return out


def grid_fm(rs: RootSystem, level: int, cap: int = 10**7) -> list[GridPoint]:
    """All level-``M`` grid points of the fundamental domain, in kac order."""
    if level < 1:
        raise DomainError("grid level must be a positive integer")
    per_factor = [(_factor_kacs(f, level), f) for f, _ in factor_slices(rs)]
    total = 1
    for kacs, _ in per_factor:
        total *= len(kacs)
        if total > cap:
            raise CapExceeded(f"grid would have over {cap} points", total)
    pts = []
    for combo in iproduct(*(kacs for kacs, _ in per_factor)):
        kac = tuple(s for block in combo for s in block)
        coords: list[Fraction] = []
        for block, (_, f) in zip(combo, per_factor):
            c = [Fraction(s, level) for s in block[1:]]
            coords.extend(
                sum(f.cartan_inv[k][i] * c[i] for i in range(f.rank))
                for k in range(f.rank)
            )
        pts.append(GridPoint(rs, level, kac, Point(rs, tuple(coords), exact=True)))
    pts.sort(key=lambda g: g.kac)
    return pts


def lattice_tm(rs: RootSystem, m: int, cap: int = 10**7) -> list[Point]:
    """The ``m**rank`` torsion points ``(1/m) * coroot lattice mod 1``."""
    if m < 1:
        raise DomainError("lattice denominator must be a positive integer")
    if m**rs.rank > cap:
        raise CapExceeded(f"lattice would have {m**rs.rank} points, cap is {cap}")
    pts = []
    for digits in iproduct(range(m), repeat=rs.rank):
        pts.append(
            Point(rs, tuple(Fraction(d, m) for d in digits), exact=True)
        )
    return pts


def element_orders(x: Point | GridPoint) -> tuple[int, int]:
    """Orders ``(M, N)``: least multiples landing in the coweight
    (adjoint) and coroot lattices respectively.  ``M`` divides ``N``."""
    if isinstance(x, GridPoint):
        x = x.point
    if not x.exact:
        raise DomainError("element orders need exact coordinates")
    cw = coweight_coords(x)
    m_ord = math.lcm(*(c.denominator for c in cw)) if cw else 1
    n_ord = math.lcm(*(b.denominator for b in x.coords)) if x.coords else 1
    return m_ord, n_ord


def is_rational_element(x: Point | GridPoint) -> bool:
    """True when every power map ``x -> k x`` with ``gcd(k, N) = 1``
    fixes the reduced point."""
    if isinstance(x, GridPoint):
        x = x.point
    _, n_ord = element_orders(x)
    base = reduce_to_fundamental(x)[0].coords
    for k in range(2, n_ord):
        if math.gcd(k, n_ord) != 1:
            continue
        if reduce_to_fundamental(x.scale(k))[0].coords != base:
            return False
    return True


@dataclass(frozen=True)
class RationalElement:
    """A rational grid point together with its torsion orders."""

    rs: RootSystem
    adjoint_order: int
    full_order: int
    kac: tuple[int, ...]
    fractions: tuple[Fraction, ...]
    point: Point


_RATIONAL_TABLE_TYPES = {"A1", "A2", "A3", "A4", "C2", "G2", "B3", "C3"}


def rational_elements(rs: RootSystem, max_level: int) -> list[RationalElement]:
    """All rational conjugacy-class representatives up to adjoint order
    ``max_level``, sorted by (order, kac)."""
    if rs.name not in _RATIONAL_TABLE_TYPES:
        raise UnsupportedType(
            f"rational-element tables cover {sorted(_RATIONAL_TABLE_TYPES)},"
            f" not {rs.name}"
        )
    out = []
    for level in range(1, max_level + 1):
        for gp in grid_fm(rs, level):
            if math.gcd(*gp.kac) != 1:
                continue
            if not is_rational_element(gp.point):
                continue
            _, n_ord = element_orders(gp.point)
            out.append(
                RationalElement(
                    rs,
                    level,
                    n_ord,
                    gp.kac,
                    tuple(Fraction(s, level) for s in gp.kac[1:]),
                    gp.point,
                )
            )
    return out


def tm_level_for_grid(points) -> int:
    """Smallest torsion denominator containing every given exact point."""
    denoms = [1]
    for p in points:
        if isinstance(p, GridPoint):
            p = p.point
        denoms.extend(c.denominator for c in p.coords)
    return math.lcm(*denoms)


def barycentric_point(rs: RootSystem, bary) -> Point:
    """Point of the fundamental simplex with the given barycentric weights."""
    verts = fundamental_vertices(rs)
    if len(bary) != len(verts):
        raise DomainError(f"need {len(verts)} barycentric coordinates")
    coords = [Fraction(0)] * rs.rank
    exact = all(not isinstance(b, float) for b in bary)
    if exact:
        bary = [Fraction(b) for b in bary]
        for b, v in zip(bary, verts):
            for k in range(rs.rank):
                coords[k] += b * v.coords[k]
        return Point(rs, tuple(coords), exact=True)
    fl = [0.0] * rs.rank
    for b, v in zip(bary, verts):
        for k in range(rs.rank):
            fl[k] += float(b) * float(v.coords[k])
    return Point(rs, tuple(fl), exact=False)


def interior_base_point(rs: RootSystem) -> Point:
    """Barycenter of the fundamental simplex (a convenient interior point)."""
    n = rs.rank + 1
    return barycentric_point(rs, [Fraction(1, n)] * n)
