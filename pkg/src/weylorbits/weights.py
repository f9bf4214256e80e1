"""Weights, points and the coordinate systems connecting them.

A :class:`Weight` holds row-vector coordinates in the fundamental-weight
basis; a :class:`Point` holds column-vector coordinates in the
simple-coroot basis.  With these conventions the natural pairing is a
plain dot product, ``<lambda, x> = sum_j a_j b_j``.

Exact coordinates are :class:`fractions.Fraction`; points may instead
carry floats, in which case ``exact`` is False and downstream code uses
floating-point evaluation paths.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence

from . import _linalg
from .errors import (
    DomainError,
    MismatchedSystem,
    UnsupportedRank,
    UnsupportedSeries,
    UnsupportedType,
)
from .root_system import RootSystem, build_root_system


def _coerce_exact(value) -> Fraction:
    if isinstance(value, float):
        raise DomainError(f"expected an exact rational, got float {value!r}")
    return Fraction(value)


@dataclass(frozen=True)
class Weight:
    """A weight in fundamental-weight coordinates."""

    rs: RootSystem
    coords: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coords) != self.rs.rank:
            raise DomainError(
                f"{self.rs.name} weight needs {self.rs.rank} coordinates,"
                f" got {len(self.coords)}"
            )

    def __add__(self, other: "Weight") -> "Weight":
        _same_system(self, other)
        return Weight(self.rs, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Weight") -> "Weight":
        _same_system(self, other)
        return Weight(self.rs, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Weight":
        return Weight(self.rs, tuple(-a for a in self.coords))

    def scale(self, c) -> "Weight":
        c = Fraction(c)
        return Weight(self.rs, tuple(c * a for a in self.coords))

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coords)


@dataclass(frozen=True)
class Point:
    """A point of the real span, in simple-coroot coordinates."""

    rs: RootSystem
    coords: tuple
    exact: bool

    def __post_init__(self):
        if len(self.coords) != self.rs.rank:
            raise DomainError(
                f"{self.rs.name} point needs {self.rs.rank} coordinates,"
                f" got {len(self.coords)}"
            )

    def __add__(self, other: "Point") -> "Point":
        _same_system(self, other)
        return Point(
            self.rs,
            tuple(a + b for a, b in zip(self.coords, other.coords)),
            self.exact and other.exact,
        )

    def __sub__(self, other: "Point") -> "Point":
        _same_system(self, other)
        return Point(
            self.rs,
            tuple(a - b for a, b in zip(self.coords, other.coords)),
            self.exact and other.exact,
        )

    def scale(self, c) -> "Point":
        exact = self.exact and isinstance(c, (int, Rational))
        if exact:
            c = Fraction(c)
        return Point(self.rs, tuple(c * b for b in self.coords), exact)


def _same_system(a, b) -> None:
    if a.rs != b.rs:
        raise MismatchedSystem(f"{a.rs.name} does not match {b.rs.name}")


def weight(rs: RootSystem, coords: Iterable) -> Weight:
    return Weight(rs, tuple(_coerce_exact(c) for c in coords))


def point(rs: RootSystem, coords: Iterable) -> Point:
    vals = tuple(coords)
    if any(isinstance(v, float) for v in vals):
        return Point(rs, tuple(float(v) for v in vals), exact=False)
    return Point(rs, tuple(Fraction(v) for v in vals), exact=True)


def zero_weight(rs: RootSystem) -> Weight:
    return Weight(rs, (Fraction(0),) * rs.rank)


def zero_point(rs: RootSystem) -> Point:
    return Point(rs, (Fraction(0),) * rs.rank, exact=True)


def pairing(lam: Weight, x: Point):
    """Natural pairing ``<lambda, x>``; exact iff the point is exact."""
    _same_system(lam, x)
    return sum(a * b for a, b in zip(lam.coords, x.coords))


def inner_product(lam: Weight, mu: Weight) -> Fraction:
    """Invariant bilinear form on weights, via the fundamental-weight Gram matrix."""
    _same_system(lam, mu)
    s_mu = _linalg.mat_vec(lam.rs.gram, mu.coords)
    return sum(a * b for a, b in zip(lam.coords, s_mu))


def weight_to_point(lam: Weight) -> Point:
    """Geometric embedding: the point whose pairing with every weight
    reproduces the invariant form."""
    return Point(lam.rs, _linalg.vec_mat(lam.coords, lam.rs.gram), exact=True)


def point_to_weight(x: Point) -> Weight:
    """Inverse of :func:`weight_to_point` for exact points."""
    if not x.exact:
        raise DomainError("point_to_weight needs an exact point")
    rs = x.rs
    # gram^{-1} = diag(2 / lengths_sq) @ cartan, row i scaled by 2/len_i^2.
    coords = tuple(
        sum(Fraction(2, 1) / rs.lengths_sq[i] * rs.cartan[i][j] * x.coords[j]
            for j in range(rs.rank))
        for i in range(rs.rank)
    )
    return Weight(rs, coords)


def simple_root_weight(rs: RootSystem, i: int) -> Weight:
    """Simple root ``alpha_i`` (1-based) in fundamental-weight coordinates."""
    if not 1 <= i <= rs.rank:
        raise DomainError(f"simple-root index {i} outside 1..{rs.rank}")
    return Weight(rs, tuple(rs.cartan[i - 1]))


def fundamental_weight(rs: RootSystem, i: int) -> Weight:
    if not 1 <= i <= rs.rank:
        raise DomainError(f"fundamental-weight index {i} outside 1..{rs.rank}")
    return Weight(
        rs, tuple(Fraction(1) if j == i - 1 else Fraction(0) for j in range(rs.rank))
    )


def coroot_point(rs: RootSystem, i: int) -> Point:
    """Simple coroot ``alpha_i^vee`` (1-based) as a point."""
    if not 1 <= i <= rs.rank:
        raise DomainError(f"coroot index {i} outside 1..{rs.rank}")
    return Point(
        rs, tuple(Fraction(1) if j == i - 1 else Fraction(0) for j in range(rs.rank)),
        exact=True,
    )


def fundamental_copoint(rs: RootSystem, i: int) -> Point:
    """Fundamental coweight ``omega_i^vee`` (1-based) as a point."""
    if not 1 <= i <= rs.rank:
        raise DomainError(f"coweight index {i} outside 1..{rs.rank}")
    col = tuple(rs.cartan_inv[k][i - 1] for k in range(rs.rank))
    return Point(rs, col, exact=True)


def point_from_coweights(rs: RootSystem, coeffs: Sequence) -> Point:
    """Point with the given fundamental-coweight coordinates."""
    c = tuple(Fraction(v) for v in coeffs)
    return Point(rs, _linalg.mat_vec(rs.cartan_inv, c), exact=True)


def coweight_coords(x: Point) -> tuple:
    """Fundamental-coweight coordinates ``<x, alpha_j>`` of a point."""
    rs = x.rs
    return tuple(
        sum(rs.cartan[j][k] * x.coords[k] for k in range(rs.rank))
        for j in range(rs.rank)
    )


def highest_root(rs: RootSystem) -> tuple[tuple[int, ...], tuple[int, ...], Weight]:
    """Marks, comarks and the highest root (as a weight) of a simple system."""
    if not rs.is_simple:
        raise UnsupportedType("highest root is defined per simple factor")
    return rs.marks, rs.comarks, Weight(rs, rs.xi_omega)


def is_dominant(lam: Weight) -> bool:
    return all(a >= 0 for a in lam.coords)


def is_strictly_dominant(lam: Weight) -> bool:
    return all(a > 0 for a in lam.coords)


# ---------------------------------------------------------------------------
# Orthogonal coordinates for the four classical series.

def _check_classical(series: str, n: int) -> None:
    limits = {"A": 1, "B": 3, "C": 2, "D": 4}
    if series not in limits:
        raise UnsupportedSeries(
            f"orthogonal coordinates are defined for A/B/C/D, not {series!r}"
        )
    if n < limits[series]:
        raise UnsupportedRank(f"{series}{n} has no native orthogonal presentation")


def to_orthogonal(lam: Weight) -> tuple[Fraction, ...]:
    """Orthogonal coordinates of a weight of a classical simple system.

    For the A series the representative with coordinate sum zero is
    returned (n+1 entries); B/C/D use n entries.
    """
    rs = lam.rs
    if not rs.is_simple:
        raise UnsupportedSeries("orthogonal coordinates apply to simple systems")
    series, n, a = rs.series, rs.rank, lam.coords
    _check_classical(series, n)
    if series == "A":
        tail = [Fraction(0)] * (n + 1)
        for i in range(n - 1, -1, -1):
            tail[i] = tail[i + 1] + a[i]
        shift = sum(tail) / (n + 1)
        return tuple(t - shift for t in tail)
    if series == "B":
        m = [sum(a[i:n - 1], Fraction(0)) + a[n - 1] / 2 for i in range(n)]
        return tuple(m)
    if series == "C":
        return tuple(sum(a[i:], Fraction(0)) for i in range(n))
    # D series
    half = (a[n - 2] + a[n - 1]) / 2
    m = [sum(a[i:n - 2], Fraction(0)) + half for i in range(n - 1)]
    m.append((a[n - 2] - a[n - 1]) / 2)
    return tuple(m)


def from_orthogonal(series: str, m: Sequence) -> Weight:
    """Weight of the classical system matching the given orthogonal coordinates."""
    vals = [Fraction(v) for v in m]
    n = len(vals) - 1 if series == "A" else len(vals)
    _check_classical(series, n)
    rs = build_root_system(series, n)
    if series == "A":
        coords = [vals[i] - vals[i + 1] for i in range(n)]
    elif series == "B":
        coords = [vals[i] - vals[i + 1] for i in range(n - 1)] + [2 * vals[n - 1]]
    elif series == "C":
        coords = [vals[i] - vals[i + 1] for i in range(n - 1)] + [vals[n - 1]]
    else:
        coords = [vals[i] - vals[i + 1] for i in range(n - 2)]
        coords += [vals[n - 2] + vals[n - 1], vals[n - 2] - vals[n - 1]]
    return Weight(rs, tuple(coords))


def orthogonal_dominant(series: str, m: Sequence[Fraction]) -> bool:
    """Dominance test in orthogonal coordinates."""
    vals = list(m)
    if series == "A":
        return all(x >= y for x, y in zip(vals, vals[1:]))
    if series in ("B", "C"):
        return all(x >= y for x, y in zip(vals, vals[1:])) and vals[-1] >= 0
    if series == "D":
        head = vals[:-1]
        return all(x >= y for x, y in zip(head, head[1:])) and head[-1] >= abs(
            vals[-1]
        )
    raise UnsupportedSeries(f"no orthogonal dominance rule for {series!r}")


# ---------------------------------------------------------------------------
# Parsing and formatting.

def parse_coords(text: str) -> tuple[Fraction, ...]:
    """Parse ``"1,0,3/2"`` into exact coordinates."""
    try:
        return tuple(Fraction(part.strip()) for part in text.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"cannot parse coordinates {text!r}: {exc}") from None


def parse_weight(rs: RootSystem, text: str) -> Weight:
    return Weight(rs, parse_coords(text))


def parse_point(rs: RootSystem, text: str) -> Point:
    return Point(rs, parse_coords(text), exact=True)


def coord_str(value) -> str:
    """Render an exact coordinate: integers bare, fractions as ``p/q``."""
    f = Fraction(value)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"
