"""Continuous and finite orbit-function transforms.

Continuous side: a composite quadrature over the fundamental simplex
(rank at most 3) built from a tensor Gauss rule on the unit cube pushed
through the collapsing map onto the simplex.  Node weights are
normalized to sum to one, so plain weighted sums compute averages over
the domain, which is the normalization in which distinct orbit
functions are orthogonal and ``|phi_lambda|^2`` averages to the orbit
size.

Finite side: scalar products over the torsion lattice ``T_m`` are exact
cyclotomic integers, and expansion coefficients of a function over
separated weights are recovered exactly, either from the full lattice
or from its fundamental-domain representatives with preimage counts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence

import numpy as np

from .affine import lattice_tm, reduce_to_fundamental
from .cyclotomic import Cyc
from .errors import (
    CapExceeded,
    DomainError,
    MismatchedSystem,
    SeparationFailure,
    UnsupportedRank,
    UnsupportedType,
)
from .root_system import RootSystem, root_system
from .weights import Point, Weight, is_dominant
from .weyl import orbit, orbit_size
from .orbit_fn import OrbitFunction, eval_exact_cyc, eval_fn, eval_many, orbit_function
from .affine import fundamental_vertices


@dataclass(frozen=True)
class SpectrumEntry:
    """One recovered expansion coefficient."""

    weight: Weight
    coeff: object  # Fraction for exact recoveries, complex otherwise

    def coeff_complex(self) -> complex:
        if isinstance(self.coeff, Cyc):
            return self.coeff.to_complex()
        if isinstance(self.coeff, Fraction):
            return complex(self.coeff)
        return complex(self.coeff)


def _sorted_spectrum(entries) -> list[SpectrumEntry]:
    return sorted(entries, key=lambda e: (sum(e.weight.coords), e.weight.coords))


# ---------------------------------------------------------------------------
# Quadrature over the fundamental simplex.

@dataclass(frozen=True)
class QuadratureRule:
    """Composite rule on the fundamental simplex.

    ``nodes_bary`` holds barycentric coordinates against the simplex
    vertices (origin first), ``nodes`` the same points in coroot
    coordinates, and ``weights`` sums to one.  ``order`` is a
    conservative per-cell polynomial exactness degree.
    """

    rs: RootSystem
    level: int
    nodes_bary: np.ndarray
    nodes: np.ndarray
    weights: np.ndarray
    order: int


_GAUSS_Q = 5
_rule_cache: dict[tuple[str, int], QuadratureRule] = {}


def build_quadrature(rs: RootSystem, level: int) -> QuadratureRule:
    """Composite tensor-Gauss rule with ``level**rank`` cells."""
    if not rs.is_simple:
        raise UnsupportedType("quadrature is built per simple system")
    if rs.rank > 3:
        raise UnsupportedRank("quadrature covers rank 1 to 3")
    if level < 1:
        raise DomainError("quadrature level must be positive")
    key = (rs.name, level)
    if key in _rule_cache:
        return _rule_cache[key]
    rank = rs.rank
    xg, wg = np.polynomial.legendre.leggauss(_GAUSS_Q)
    cells = (np.arange(level)[:, None] + (xg[None, :] + 1) / 2) / level
    axis_pts = cells.reshape(-1)
    axis_wts = np.tile(wg / (2 * level), level)
    grids = np.meshgrid(*([axis_pts] * rank), indexing="ij")
    cube = np.stack([g.reshape(-1) for g in grids], axis=1)
    wgrids = np.meshgrid(*([axis_wts] * rank), indexing="ij")
    cube_w = np.ones(cube.shape[0])
    for g in wgrids:
        cube_w = cube_w * g.reshape(-1)

    if rank == 1:
        simplex = cube.copy()
        jac = np.ones(cube.shape[0])
    elif rank == 2:
        u, v = cube[:, 0], cube[:, 1]
        simplex = np.stack([u, v * (1 - u)], axis=1)
        jac = 1 - u
    else:
        u, v, w = cube[:, 0], cube[:, 1], cube[:, 2]
        simplex = np.stack(
            [u, v * (1 - u), w * (1 - u) * (1 - v)], axis=1
        )
        jac = (1 - u) ** 2 * (1 - v)

    weights = cube_w * jac
    weights = weights / weights.sum()
    bary0 = 1 - simplex.sum(axis=1)
    nodes_bary = np.concatenate([bary0[:, None], simplex], axis=1)
    verts = np.array(
        [[float(c) for c in v.coords] for v in fundamental_vertices(rs)[1:]]
    )
    nodes = simplex @ verts
    rule = QuadratureRule(rs, level, nodes_bary, nodes, weights, order=7)
    _rule_cache[key] = rule
    return rule


def _integrand_values(g, nodes: np.ndarray, rs: RootSystem) -> np.ndarray:
    try:
        vals = np.asarray(g(nodes), dtype=complex)
        if vals.shape == (nodes.shape[0],):
            return vals
    except (TypeError, ValueError, AttributeError):
        pass
    return np.array(
        [complex(g(Point(rs, tuple(row), exact=False))) for row in nodes],
        dtype=complex,
    )


def quadrature_integrate(rs: RootSystem, g, level: int) -> complex:
    """Average of ``g`` over the fundamental simplex.

    ``g`` should accept an ``(N, rank)`` float array of coroot
    coordinates and return ``(N,)`` complex values; a scalar callable on
    points is accepted as a fallback.
    """
    rule = build_quadrature(rs, level)
    vals = _integrand_values(g, rule.nodes, rs)
    return complex(np.sum(rule.weights * vals))


@lru_cache(maxsize=512)
def _phi_node_values_cached(rs_name: str, coords: tuple, level: int):
    rs = root_system(rs_name)
    rule = build_quadrature(rs, level)
    f = orbit_function(Weight(rs, coords))
    return eval_many(f, rule.nodes)


def forward_transform(
    rs: RootSystem, g, lambdas: Sequence[Weight], level: int
) -> list[SpectrumEntry]:
    """Recover expansion coefficients against the given dominant weights."""
    rule = build_quadrature(rs, level)
    vals = _integrand_values(g, rule.nodes, rs)
    entries = []
    for lam in lambdas:
        _check_weight(rs, lam)
        phi = _phi_node_values_cached(rs.name, lam.coords, level)
        coeff = complex(np.sum(rule.weights * vals * np.conj(phi)))
        entries.append(SpectrumEntry(lam, coeff / orbit_size(lam)))
    return _sorted_spectrum(entries)


def inverse_transform(spectrum: Sequence[SpectrumEntry], x: Point) -> complex:
    total = complex(0)
    for entry in spectrum:
        total += entry.coeff_complex() * eval_fn(orbit_function(entry.weight), x)
    return total


def synthesize(spectrum: Sequence[SpectrumEntry]):
    """Vectorized callable summing the spectrum on an (N, rank) array."""

    def g(nodes: np.ndarray) -> np.ndarray:
        total = np.zeros(nodes.shape[0], dtype=complex)
        for entry in spectrum:
            f = orbit_function(entry.weight)
            total = total + entry.coeff_complex() * eval_many(f, nodes)
        return total

    return g


def plancherel(
    rs: RootSystem, spectrum: Sequence[SpectrumEntry], g, level: int
) -> tuple[float, float]:
    """Both sides of the norm identity: spectral sum and domain average."""
    spectral = sum(
        orbit_size(e.weight) * abs(e.coeff_complex()) ** 2 for e in spectrum
    )
    avg = quadrature_integrate(rs, lambda pts: np.abs(
        _integrand_values(g, pts, rs)
    ) ** 2, level)
    return float(spectral), float(avg.real)


def orthogonality_gram(
    rs: RootSystem,
    lambdas: Sequence[Weight],
    level: int,
    chunk: int = 150_000,
) -> np.ndarray:
    """Gram matrix of orbit functions under the domain average.

    Expected to be ``diag(|O(lambda)|)`` in exact arithmetic; computed
    in node chunks so rank-3 rules stay within memory.
    """
    for lam in lambdas:
        _check_weight(rs, lam)
    rule = build_quadrature(rs, level)
    k = len(lambdas)
    gram = np.zeros((k, k), dtype=complex)
    funcs = [orbit_function(lam) for lam in lambdas]
    n = rule.nodes.shape[0]
    for start in range(0, n, chunk):
        sl = slice(start, min(start + chunk, n))
        block = np.empty((sl.stop - sl.start, k), dtype=complex)
        for j, f in enumerate(funcs):
            block[:, j] = eval_many(f, rule.nodes[sl])
        gram += block.conj().T @ (rule.weights[sl, None] * block)
    return gram


# ---------------------------------------------------------------------------
# Finite (lattice) transform.

def _check_weight(rs: RootSystem, lam: Weight) -> None:
    if lam.rs != rs:
        raise MismatchedSystem(f"{lam.rs.name} weight in a {rs.name} transform")
    if not is_dominant(lam):
        raise DomainError("transform weights must be dominant")
    if any(c.denominator != 1 for c in lam.coords):
        raise DomainError("transform weights must be integral")


def separates(lam: Weight, mu: Weight, m: int) -> bool:
    """Whether the order-``m`` lattice distinguishes the two orbits: no
    pair of distinct orbit points is congruent coordinate-wise mod m."""
    _check_weight(lam.rs, lam)
    _check_weight(lam.rs, mu)
    seen: dict[tuple, tuple] = {}
    for w in list(orbit(lam).points) + list(orbit(mu).points):
        key = tuple(int(c) % m for c in w.coords)
        if key in seen and seen[key] != w.coords:
            return False
        seen[key] = w.coords
    return True


def minimal_separating_m(lambdas: Sequence[Weight]) -> int:
    """Smallest lattice order separating every pair (including each
    weight against itself)."""
    if not lambdas:
        raise DomainError("need at least one weight")
    # Upper bound: any m larger than the largest coordinate gap works.
    hi = 1
    all_points = [w for lam in lambdas for w in orbit(lam).points]
    for w in all_points:
        for v in all_points:
            for a, b in zip(w.coords, v.coords):
                hi = max(hi, abs(int(a - b)) + 1)
    for m in range(1, hi + 1):
        if all(
            separates(a, b, m)
            for i, a in enumerate(lambdas)
            for b in lambdas[i:]
        ):
            return m
    raise SeparationFailure("no separating order within the coordinate spread")


@lru_cache(maxsize=4096)
def _phi_tm_values(rs_name: str, coords: tuple, m: int) -> tuple[Cyc, ...]:
    rs = root_system(rs_name)
    f = orbit_function(Weight(rs, coords))
    out = []
    for x in lattice_tm(rs, m):
        out.append(eval_exact_cyc(f, x, modulus=m))
    return tuple(out)


def tm_scalar_product(lam: Weight, mu: Weight, m: int, cap: int = 10**7) -> Cyc:
    """Exact scalar product ``sum over T_m of phi_lam . conj(phi_mu)``."""
    _check_weight(lam.rs, lam)
    _check_weight(lam.rs, mu)
    if m**lam.rs.rank > cap:
        raise CapExceeded(f"lattice would have {m**lam.rs.rank} points")
    a = _phi_tm_values(lam.rs.name, lam.coords, m)
    b = _phi_tm_values(lam.rs.name, mu.coords, m)
    total = Cyc.zero(m)
    for va, vb in zip(a, b):
        total = total + va * vb.conj()
    return total


def _fundamental_representatives(rs: RootSystem, m: int, cap: int):
    reps: dict[tuple, tuple[Point, int]] = {}
    for x in lattice_tm(rs, m, cap=cap):
        red = reduce_to_fundamental(x)[0]
        key = red.coords
        if key in reps:
            reps[key] = (reps[key][0], reps[key][1] + 1)
        else:
            reps[key] = (red, 1)
    return [reps[k] for k in sorted(reps)]


def _is_exact_value(v) -> bool:
    return isinstance(v, (int, Fraction, Cyc)) and not isinstance(v, bool)


def finite_forward(
    f: Callable[[Point], object],
    lambdas: Sequence[Weight],
    m: int,
    cap: int = 10**7,
    method: str = "fundamental",
) -> list[SpectrumEntry]:
    """Expansion coefficients of ``f`` over the order-``m`` lattice.

    ``f`` is called on exact lattice points (or their fundamental-domain
    representatives when ``method="fundamental"``); exact return values
    keep the whole computation in cyclotomic arithmetic.  Raises
    :class:`SeparationFailure` when the lattice cannot tell two of the
    requested weights apart.
    """
    if not lambdas:
        raise DomainError("need at least one weight")
    rs = lambdas[0].rs
    for lam in lambdas:
        _check_weight(rs, lam)
    if method not in ("fundamental", "full"):
        raise DomainError(f"unknown method {method!r}")
    for i, a in enumerate(lambdas):
        for b in lambdas[i:]:
            if not separates(a, b, m):
                raise SeparationFailure(
                    f"order {m} does not separate {a.coords} and {b.coords}",
                    pair=(a, b),
                )
    if method == "full":
        pts = [(x, 1) for x in lattice_tm(rs, m, cap=cap)]
    else:
        pts = _fundamental_representatives(rs, m, cap)
    values = [f(x) for x, _ in pts]
    exact = all(_is_exact_value(v) for v in values)
    n = rs.rank
    entries = []
    for lam in lambdas:
        func = orbit_function(lam)
        size = orbit_size(lam)
        if exact:
            acc = Cyc.zero(m)
            for (x, count), v in zip(pts, values):
                phi_bar = eval_exact_cyc(func, x, modulus=m).conj()
                term = phi_bar * v if isinstance(v, (int, Fraction)) else (
                    v if isinstance(v, Cyc) else Cyc.from_rational(m, v)
                ) * phi_bar
                acc = acc + term * count
            coeff_cyc = acc * Fraction(1, m**n * size)
            coeff = (
                coeff_cyc.as_rational() if coeff_cyc.is_rational() else coeff_cyc
            )
        else:
            acc = complex(0)
            for (x, count), v in zip(pts, values):
                acc += count * complex(v) * eval_fn(func, x).conjugate()
            coeff = acc / (m**n * size)
        entries.append(SpectrumEntry(lam, coeff))
    return _sorted_spectrum(entries)


def synthesize_spectrum(spectrum: Sequence[SpectrumEntry], m: int | None = None):
    """Callable on exact points summing the spectrum.

    With ``m`` given and rational coefficients the result is an exact
    cyclotomic value; otherwise complex.
    """

    def f(x: Point):
        if m is not None and x.exact and all(
            isinstance(e.coeff, (int, Fraction)) for e in spectrum
        ):
            total = Cyc.zero(m)
            for e in spectrum:
                val = eval_exact_cyc(orbit_function(e.weight), x, modulus=m)
                total = total + val * Fraction(e.coeff)
            return total
        return sum(
            e.coeff_complex() * eval_fn(orbit_function(e.weight), x)
            for e in spectrum
        )

    return f


# ---------------------------------------------------------------------------
# Plain multidimensional finite Fourier transform.

def finite_fourier(values, inverse: bool = False) -> np.ndarray:
    """Unitary finite Fourier transform with 1-based index convention.

    All axes must share one length N; the kernel is
    ``exp(+-2 pi i (j+1)(k+1) / N) / sqrt(N)`` on 0-based array indices.
    """
    arr = np.asarray(values, dtype=complex)
    if arr.ndim == 0:
        raise DomainError("values must have at least one axis")
    n = arr.shape[0]
    if any(s != n for s in arr.shape):
        raise DomainError("all axes must have equal length")
    idx = np.arange(1, n + 1)
    sign = -1 if inverse else 1
    kernel = np.exp(sign * 2j * np.pi * np.outer(idx, idx) / n) / math.sqrt(n)
    out = arr
    for axis in range(arr.ndim):
        out = np.tensordot(kernel, out, axes=([1], [axis]))
        out = np.moveaxis(out, 0, axis)
    return out
