"""Weyl group actions: reflections, orbits, stabilizers.

Orbits are enumerated breadth first from the dominant representative,
applying simple reflections; within a BFS layer points are ordered by
ascending coordinate tuple, which makes orbit listings reproducible.
Orbit sizes never require enumeration: the stabilizer of a dominant
weight is the parabolic subgroup generated by the simple reflections
fixing it, so ``|orbit| = |W| / |W_stab|``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Iterable, Iterator

from .errors import CapExceeded, DomainError, IndexOutOfRange, UnsupportedRank
from .root_system import RootSystem, parabolic_order
from .weights import (
    Point,
    Weight,
    from_orthogonal,
    is_dominant,
    orthogonal_dominant,
)


def reflect_simple(i: int, lam: Weight) -> Weight:
    """Simple reflection ``r_i`` (1-based) acting on a weight."""
    rs = lam.rs
    if not 1 <= i <= rs.rank:
        raise IndexOutOfRange(f"reflection index {i} outside 1..{rs.rank}")
    a_i = lam.coords[i - 1]
    if a_i == 0:
        return lam
    row = rs.cartan[i - 1]
    return Weight(rs, tuple(a - a_i * row[j] for j, a in enumerate(lam.coords)))


def reflect_simple_point(i: int, x: Point) -> Point:
    """Simple reflection ``r_i`` (1-based) acting on a point."""
    rs = x.rs
    if not 1 <= i <= rs.rank:
        raise IndexOutOfRange(f"reflection index {i} outside 1..{rs.rank}")
    row = rs.cartan[i - 1]
    level = sum(row[j] * x.coords[j] for j in range(rs.rank))
    coords = list(x.coords)
    coords[i - 1] = coords[i - 1] - level
    return Point(rs, tuple(coords), x.exact)


def dominant_representative(lam: Weight) -> tuple[Weight, int, tuple[int, ...]]:
    """Dominant representative of a weight's orbit.

    Returns ``(mu, parity, word)`` where ``mu`` is dominant,
    ``parity = (-1)**len(word)`` and applying the reflections in ``word``
    left to right to ``lam`` yields ``mu``.  Among negative coordinates
    the lowest index is reflected first.
    """
    cur = list(lam.coords)
    cartan = lam.rs.cartan
    word: list[int] = []
    while True:
        idx = next((j for j, a in enumerate(cur) if a < 0), None)
        if idx is None:
            break
        a_i = cur[idx]
        row = cartan[idx]
        for j in range(len(cur)):
            cur[j] -= a_i * row[j]
        word.append(idx + 1)
    return Weight(lam.rs, tuple(cur)), (-1) ** len(word), tuple(word)


@dataclass(frozen=True)
class Orbit:
    """A Weyl-group orbit with its dominant representative."""

    dominant: Weight
    points: tuple[Weight, ...]
    size: int
    stabilizer_order: int


def stabilizer_order(lam: Weight) -> int:
    """Order of the stabilizer of a dominant weight."""
    if not is_dominant(lam):
        raise DomainError("stabilizer formula requires a dominant weight")
    zero_nodes = tuple(j for j, a in enumerate(lam.coords) if a == 0)
    return parabolic_order(lam.rs, zero_nodes) if zero_nodes else 1


def orbit_size(lam: Weight) -> int:
    if not is_dominant(lam):
        raise DomainError("orbit_size requires a dominant weight")
    return lam.rs.weyl_order // stabilizer_order(lam)


def orbit(lam: Weight, cap: int = 10**7) -> Orbit:
    """Enumerate the orbit of a dominant weight.

    Raises :class:`CapExceeded` (carrying the size) when the orbit is
    larger than ``cap``.
    """
    if not is_dominant(lam):
        raise DomainError("orbit enumeration starts from a dominant weight")
    size = orbit_size(lam)
    if size > cap:
        raise CapExceeded(f"orbit has {size} points, cap is {cap}", size=size)
    rank = lam.rs.rank
    seen = {lam.coords}
    points = [lam]
    layer = [lam]
    while layer:
        nxt = []
        for w in layer:
            for i in range(1, rank + 1):
                if w.coords[i - 1] == 0:
                    continue
                img = reflect_simple(i, w)
                if img.coords not in seen:
                    seen.add(img.coords)
                    nxt.append(img)
        nxt.sort(key=lambda w: w.coords)
        points.extend(nxt)
        layer = nxt
    assert len(points) == size
    return Orbit(lam, tuple(points), size, lam.rs.weyl_order // size)


def orbit_iter(lam: Weight, cap: int = 10**7) -> Iterator[Weight]:
    yield from orbit(lam, cap=cap).points


def orthogonal_orbit(series: str, m: Iterable) -> set[tuple[Fraction, ...]]:
    """Orbit of a dominant point given in orthogonal coordinates.

    A acts by permutations; B and C additionally flip signs; D flips an
    even number of signs (any number once a coordinate vanishes, since
    flipping a zero entry is the identity).
    """
    vals = tuple(Fraction(v) for v in m)
    if not orthogonal_dominant(series, vals):
        raise DomainError("orthogonal coordinates must be dominant")
    perms = set(permutations(vals))
    if series == "A":
        return perms
    out: set[tuple[Fraction, ...]] = set()
    for p in perms:
        nz = [j for j, v in enumerate(p) if v != 0]
        for mask in range(1 << len(nz)):
            if series == "D" and len(nz) == len(p) and bin(mask).count("1") % 2:
                continue
            q = list(p)
            for bit, j in enumerate(nz):
                if mask >> bit & 1:
                    q[j] = -q[j]
            out.add(tuple(q))
    return out


def orthogonal_orbit_weights(series: str, m: Iterable) -> set[Weight]:
    """Same orbit, mapped back to fundamental-weight coordinates."""
    return {from_orthogonal(series, p) for p in orthogonal_orbit(series, m)}


_GROUP_RANK_CAP = 4


def group_elements(rs: RootSystem, cap: int = 20_000) -> tuple[tuple, ...]:
    """All Weyl-group elements as integer matrices (rank at most 4).

    The matrices act on weight rows from the right and on point columns
    from the left; the set is closed under both conventions.
    """
    if rs.rank > _GROUP_RANK_CAP:
        raise UnsupportedRank(
            f"group enumeration is limited to rank {_GROUP_RANK_CAP}"
        )
    if rs.weyl_order > cap:
        raise CapExceeded(
            f"Weyl group has {rs.weyl_order} elements, cap is {cap}",
            size=rs.weyl_order,
        )
    n = rs.rank
    gens = []
    for i in range(n):
        rows = [
            tuple(
                (1 if k == j else 0) - (int(rs.cartan[i][j]) if k == i else 0)
                for j in range(n)
            )
            for k in range(n)
        ]
        gens.append(tuple(rows))
    ident = tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for m in frontier:
            for g in gens:
                prod = tuple(
                    tuple(
                        sum(m[r][k] * g[k][c] for k in range(n)) for c in range(n)
                    )
                    for r in range(n)
                )
                if prod not in seen:
                    seen.add(prod)
                    nxt.append(prod)
        frontier = nxt
    assert len(seen) == rs.weyl_order
    return tuple(sorted(seen))


def apply_matrix_to_weight(matrix, lam: Weight) -> Weight:
    n = lam.rs.rank
    coords = tuple(
        sum(lam.coords[i] * matrix[i][j] for i in range(n)) for j in range(n)
    )
    return Weight(lam.rs, coords)


def apply_matrix_to_point(matrix, x: Point) -> Point:
    n = x.rs.rank
    coords = tuple(
        sum(matrix[i][j] * x.coords[j] for j in range(n)) for i in range(n)
    )
    return Point(x.rs, coords, x.exact)
