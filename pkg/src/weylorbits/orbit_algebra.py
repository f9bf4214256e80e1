"""Decomposing orbit products and orbit branchings into orbit sums.

The product of two orbits ``O(lam) (x) O(mu)`` is the multiset
``{nu1 + nu2}`` over all point pairs, regrouped into dominant orbits.
Brute-force regrouping is always available and serves as the reference;
for favorable configurations the decomposition follows directly from
the translated points ``w.lam + mu`` and is computed without touching
the full point-pair set (see :func:`product_fastpath_classify`).

Branching carries an orbit of a system to an orbit sum of a subsystem,
either through an explicit integer projection matrix acting on
fundamental-weight coordinates, or (for subsystems of equal rank) by
reflecting in a chosen set of roots.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import (
    CapExceeded,
    DomainError,
    MismatchedSystem,
    NotStrictlyDominant,
    UnknownPair,
    UnsupportedType,
)
from .root_system import RootSystem, root_system
from .weights import (
    Weight,
    inner_product,
    is_dominant,
    is_strictly_dominant,
)
from .weyl import dominant_representative, orbit, orbit_size, stabilizer_order


def _height_key(lam: Weight):
    # Height of the weight in the simple-root basis, then the coordinates
    # themselves; sorting descending on this key puts the highest
    # component first.
    inv = lam.rs.cartan_inv
    n = lam.rs.rank
    root_coords = tuple(
        sum(lam.coords[i] * inv[i][j] for i in range(n)) for j in range(n)
    )
    return (sum(root_coords), lam.coords)


@dataclass(frozen=True)
class OrbitSum:
    """A finite multiset of dominant-weight orbits with multiplicities."""

    rs: RootSystem
    terms: tuple[tuple[Weight, int], ...]

    @staticmethod
    def from_counter(rs: RootSystem, counts) -> "OrbitSum":
        items = [(w, m) for w, m in counts.items() if m != 0]
        items.sort(key=lambda t: _height_key(t[0]), reverse=True)
        return OrbitSum(rs, tuple(items))

    def multiplicity(self, lam: Weight) -> int:
        for w, m in self.terms:
            if w.coords == lam.coords:
                return m
        return 0

    def total_points(self) -> int:
        return sum(m * orbit_size(w) for w, m in self.terms)

    def as_dict(self) -> dict[tuple, int]:
        return {w.coords: m for w, m in self.terms}

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, OrbitSum)
            and self.rs == other.rs
            and self.as_dict() == other.as_dict()
        )

    def __hash__(self):
        return hash((self.rs, frozenset(self.as_dict().items())))


def _check_product_args(lam: Weight, mu: Weight, cap: int) -> None:
    if lam.rs != mu.rs:
        raise MismatchedSystem(f"{lam.rs.name} does not match {mu.rs.name}")
    if not (is_dominant(lam) and is_dominant(mu)):
        raise DomainError("orbit product takes dominant weights")
    pairs = orbit_size(lam) * orbit_size(mu)
    if pairs > cap:
        raise CapExceeded(f"product needs {pairs} point pairs, cap is {cap}", pairs)


def product_fastpath_classify(lam: Weight, mu: Weight) -> str:
    """Which closed-form decomposition applies to ``O(lam) (x) O(mu)``.

    Returns one of ``"StrictAll"`` (every translated point ``w.lam + mu``
    is strictly dominant), ``"DominantAll"`` (every translated point is
    dominant), ``"SeparatedGeneric"`` (``mu`` strictly dominant and no
    translated point touches a reflection hyperplane), or ``"General"``.
    """
    if lam.rs != mu.rs:
        raise MismatchedSystem(f"{lam.rs.name} does not match {mu.rs.name}")
    if lam.is_zero() or mu.is_zero():
        return "General"
    shifts = [p + mu for p in orbit(lam).points]
    if all(is_strictly_dominant(s) for s in shifts):
        return "StrictAll"
    if all(is_dominant(s) for s in shifts):
        return "DominantAll"
    if is_strictly_dominant(mu) and all(
        is_strictly_dominant(dominant_representative(s)[0]) for s in shifts
    ):
        return "SeparatedGeneric"
    return "General"


def _product_brute(lam: Weight, mu: Weight, cap: int) -> OrbitSum:
    small, large = (lam, mu) if orbit_size(lam) <= orbit_size(mu) else (mu, lam)
    large_points = orbit(large, cap=cap).points
    counts: Counter = Counter()
    for p in orbit(small, cap=cap).points:
        for q in large_points:
            counts[dominant_representative(p + q)[0]] += 1
    terms: Counter = Counter()
    for rep, count in counts.items():
        size = orbit_size(rep)
        mult, rem = divmod(count, size)
        if rem:
            raise DomainError("point-pair counts are not orbit-aligned")
        terms[rep] = mult
    return OrbitSum.from_counter(lam.rs, terms)


def _product_fastpath(lam: Weight, mu: Weight, kind: str, cap: int) -> OrbitSum:
    shifts = [p + mu for p in orbit(lam, cap=cap).points]
    terms: Counter = Counter()
    if kind == "StrictAll":
        for s in shifts:
            terms[s] += 1
    elif kind == "DominantAll":
        for s in shifts:
            terms[s] += stabilizer_order(s)
    elif kind == "SeparatedGeneric":
        for s in shifts:
            terms[dominant_representative(s)[0]] += 1
    else:
        raise DomainError(f"no fast path for class {kind!r}")
    return OrbitSum.from_counter(lam.rs, terms)


def product(lam: Weight, mu: Weight, cap: int = 10**7, method: str = "auto") -> OrbitSum:
    """Decompose ``O(lam) (x) O(mu)`` into an orbit sum.

    ``method`` may be ``"auto"`` (use a closed form when one applies),
    ``"brute"`` (always regroup the full point-pair multiset) or
    ``"fastpath"`` (require a closed form, else raise).
    """
    _check_product_args(lam, mu, cap)
    if method not in ("auto", "brute", "fastpath"):
        raise DomainError(f"unknown product method {method!r}")
    if method != "brute":
        kind = product_fastpath_classify(lam, mu)
        if kind != "General":
            return _product_fastpath(lam, mu, kind, cap)
        if method == "fastpath":
            raise DomainError("no closed-form decomposition applies")
    return _product_brute(lam, mu, cap)


def conjecture_probe(lam: Weight, mu: Weight, cap: int = 10**6) -> list[dict]:
    """Empirically probe the sharper decomposition predictions.

    Checks, on the brute-force decomposition, that (a) when ``mu`` is
    strictly dominant every strictly dominant translated point
    ``w.lam + mu`` appears with multiplicity exactly 1, and (b) when the
    stabilizer of ``mu`` is a parabolic generated by coordinates on
    which every translated point is positive, the decomposition is the
    regrouped translated-point list.  Returns a (hopefully empty) list
    of counterexample records.
    """
    _check_product_args(lam, mu, cap)
    if lam.is_zero() or mu.is_zero():
        return []
    reports: list[dict] = []
    decomp = _product_brute(lam, mu, cap).as_dict()
    shifts = [p + mu for p in orbit(lam).points]
    if is_strictly_dominant(mu):
        for s in shifts:
            if is_strictly_dominant(s) and decomp.get(s.coords, 0) != 1:
                reports.append(
                    {
                        "claim": "strict-shift multiplicity",
                        "lam": lam.coords,
                        "mu": mu.coords,
                        "shift": s.coords,
                        "multiplicity": decomp.get(s.coords, 0),
                    }
                )
    fixed = {j for j, c in enumerate(mu.coords) if c == 0}
    if all(
        all(s.coords[j] > 0 for j in range(lam.rs.rank) if j not in fixed)
        for s in shifts
    ):
        expected: Counter = Counter()
        for s in shifts:
            expected[dominant_representative(s)[0].coords] += 1
        if dict(expected) != decomp:
            reports.append(
                {
                    "claim": "stabilized-shift decomposition",
                    "lam": lam.coords,
                    "mu": mu.coords,
                    "expected": dict(expected),
                    "actual": decomp,
                }
            )
    return reports


# ---------------------------------------------------------------------------
# Branching via projection matrices.

@dataclass(frozen=True)
class ProjectionMatrix:
    """Integer matrix carrying source fundamental-weight coordinates to
    target ones (one row per target coordinate)."""

    source: RootSystem
    target: RootSystem
    matrix: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.matrix) != self.target.rank or any(
            len(row) != self.source.rank for row in self.matrix
        ):
            raise DomainError(
                f"projection shape must be {self.target.rank}x{self.source.rank}"
            )

    def project(self, lam: Weight) -> Weight:
        if lam.rs != self.source:
            raise MismatchedSystem(
                f"weight of {lam.rs.name} fed to a {self.source.name} projection"
            )
        coords = tuple(
            sum(row[j] * lam.coords[j] for j in range(self.source.rank))
            for row in self.matrix
        )
        return Weight(self.target, coords)


_FIXED_PROJECTIONS = {
    ("C2", "A1"): [[3, 4]],
    ("G2", "A1"): [[10, 6]],
    ("C2", "A1xA1"): [[1, 1], [0, 1]],
    ("G2", "A2"): [[1, 1], [1, 0]],
    ("C4", "A3"): [[1, 1, 0, 0], [0, 0, 1, 2], [0, 1, 1, 0]],
    ("D5", "C2xC2"): [
        [0, 0, 2, 1, 1],
        [1, 1, 0, 0, 0],
        [0, 0, 0, 1, 1],
        [0, 1, 1, 0, 0],
    ],
}


def _identity_rows(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def _rank_reduction_matrix(src: RootSystem, tgt: RootSystem) -> list[list[int]] | None:
    n = src.rank
    if tgt.rank != n - 1:
        return None
    series = src.series
    if series == "A" and tgt.series == "A":
        return _identity_rows(n)[:-1]
    if series == "B" and (tgt.series == "B" or (n == 3 and tgt.name == "C2")):
        if n == 3:
            # The rank-2 target is realized as C2, whose node order swaps
            # the short and long roots relative to a B-chain.
            return [[0, 2, 1], [1, 0, 0]]
        rows = _identity_rows(n)[: n - 2]
        last = [0] * n
        last[n - 2], last[n - 1] = 2, 1
        rows.append(last)
        return rows
    if series == "C" and tgt.series == "C":
        rows = _identity_rows(n)[: n - 2]
        last = [0] * n
        last[n - 2], last[n - 1] = 1, 1
        rows.append(last)
        return rows
    if series == "D" and tgt.series == "D" and n >= 5:
        rows = _identity_rows(n)[: n - 3]
        mid = [0] * n
        mid[n - 3], mid[n - 2], mid[n - 1] = 1, 1, 1
        tail = [0] * n
        tail[n - 3] = 1
        rows.extend([mid, tail])
        return rows
    return None


def _split_matrix(src: RootSystem, tgt: RootSystem) -> list[list[int]] | None:
    """Node-deletion projection onto a two-factor subsystem."""
    if len(tgt.factors) != 2 or tgt.rank != src.rank - 1:
        return None
    first, second = tgt.factors
    if first.series != "A":
        return None
    p = first.rank + 1
    if src.series == "A":
        ok = second.series == "A"
    elif src.series == "C":
        ok = second.series == "C"
    elif src.series == "D":
        ok = second.series == "D"
    else:
        ok = False
    if not ok or second.rank != src.rank - p:
        return None
    rows = _identity_rows(src.rank)
    del rows[p - 1]
    return rows


def builtin_projection(pair: str) -> ProjectionMatrix:
    """Projection matrix for a named branching, e.g. ``"C3->C2"``.

    Known pairs: a fixed table of special reductions, same-series rank
    reductions, node-deletion splits ``A->AxA``, ``C->AxC``, ``D->AxD``,
    and the identity.
    """
    try:
        src_name, tgt_name = pair.split("->")
    except ValueError:
        raise UnknownPair(f"pair must look like 'C3->C2', got {pair!r}") from None
    src = root_system(src_name.strip())
    tgt = root_system(tgt_name.strip())
    if (src.name, tgt.name) in _FIXED_PROJECTIONS:
        rows = _FIXED_PROJECTIONS[(src.name, tgt.name)]
    elif src == tgt:
        rows = _identity_rows(src.rank)
    else:
        rows = _rank_reduction_matrix(src, tgt) or _split_matrix(src, tgt)
    if rows is None:
        raise UnknownPair(f"no built-in projection for {src.name}->{tgt.name}")
    return ProjectionMatrix(src, tgt, tuple(tuple(r) for r in rows))


def branch_restrict(lam: Weight, proj: ProjectionMatrix, cap: int = 10**7) -> OrbitSum:
    """Decompose the restriction of ``O(lam)`` through ``proj``."""
    if lam.rs != proj.source:
        raise MismatchedSystem(
            f"{lam.rs.name} weight fed to a {proj.source.name} projection"
        )
    if not is_dominant(lam):
        raise DomainError("branching takes a dominant weight")
    counts: Counter = Counter()
    for p in orbit(lam, cap=cap).points:
        counts[dominant_representative(proj.project(p))[0]] += 1
    terms: Counter = Counter()
    for rep, count in counts.items():
        size = orbit_size(rep)
        mult, rem = divmod(count, size)
        if rem:
            raise DomainError(
                "projected points are not invariant under the target group"
            )
        terms[rep] = mult
    return OrbitSum.from_counter(proj.target, terms)


# ---------------------------------------------------------------------------
# Equal-rank branching through a root subsystem.

_CANDIDATE_SERIES = ("A", "B", "C", "D", "E", "F", "G")


def _recognize_component(cartan_rows: list[list[int]]) -> RootSystem:
    k = len(cartan_rows)
    for series in _CANDIDATE_SERIES:
        try:
            cand = root_system(f"{series}{k}")
        except UnsupportedType:
            continue
        if all(
            cand.cartan[i][j] == cartan_rows[i][j]
            for i in range(k)
            for j in range(k)
        ):
            return cand
    raise UnknownPair("sub-diagram does not match a supported type in this order")


def branch_equal_rank(lam: Weight, sub_roots: Sequence[Weight], cap: int = 10**7) -> OrbitSum:
    """Decompose ``O(lam)`` under the reflection subgroup of ``sub_roots``.

    ``sub_roots`` must be ``rank`` roots of the ambient system forming a
    base of an equal-rank subsystem; ``lam`` must be strictly dominant.
    """
    rs = lam.rs
    if len(sub_roots) != rs.rank:
        raise DomainError(f"need {rs.rank} roots, got {len(sub_roots)}")
    for beta in sub_roots:
        if beta.rs != rs:
            raise MismatchedSystem("sub-roots must live in the ambient system")
    if not is_strictly_dominant(lam):
        raise NotStrictlyDominant(
            "equal-rank branching is implemented for strictly dominant weights"
        )
    n = rs.rank
    norms = [inner_product(b, b) for b in sub_roots]
    sub_cartan: list[list[int]] = []
    for j in range(n):
        row = []
        for k in range(n):
            val = 2 * inner_product(sub_roots[j], sub_roots[k]) / norms[k]
            if val.denominator != 1:
                raise DomainError("chosen roots do not close into a root base")
            row.append(int(val))
        sub_cartan.append(row)
    if any(sub_cartan[j][j] != 2 for j in range(n)) or any(
        sub_cartan[j][k] > 0 for j in range(n) for k in range(n) if j != k
    ):
        raise DomainError("chosen roots do not form a root base")

    # Connected components of the chosen base, in first-node order.
    remaining = set(range(n))
    groups: list[list[int]] = []
    while remaining:
        seed = min(remaining)
        comp = {seed}
        frontier = [seed]
        while frontier:
            v = frontier.pop()
            for w in remaining - comp:
                if sub_cartan[v][w] != 0:
                    comp.add(w)
                    frontier.append(w)
        remaining -= comp
        groups.append(sorted(comp))
    parts = [
        _recognize_component([[sub_cartan[i][j] for j in g] for i in g])
        for g in groups
    ]
    target = (
        parts[0]
        if len(parts) == 1
        else root_system("x".join(p.name for p in parts))
    )
    order = [i for g in groups for i in g]

    counts: Counter = Counter()
    for p in orbit(lam, cap=cap).points:
        coords = tuple(
            2 * inner_product(p, sub_roots[i]) / norms[i] for i in order
        )
        counts[dominant_representative(Weight(target, coords))[0]] += 1
    terms: Counter = Counter()
    for rep, count in counts.items():
        size = orbit_size(rep)
        mult, rem = divmod(count, size)
        if rem:
            raise DomainError("orbit points are not aligned with the subsystem")
        terms[rep] = mult
    return OrbitSum.from_counter(target, terms)


# ---------------------------------------------------------------------------
# Congruence numbers.

def congruence_modulus(rs: RootSystem) -> int:
    mods = {"A1": 2, "A2": 3, "C2": 2, "G2": 1}
    try:
        return mods[rs.name]
    except KeyError:
        raise UnsupportedType(
            f"congruence numbers are implemented for A1, A2, C2, G2,"
            f" not {rs.name}"
        ) from None


def congruence_number(lam: Weight) -> int:
    """Congruence class of a weight (A1, A2, C2 and G2 only)."""
    mod = congruence_modulus(lam.rs)
    a = lam.coords
    for c in a:
        if c.denominator != 1:
            raise DomainError("congruence numbers take integral weights")
    name = lam.rs.name
    if name == "A1":
        return int(a[0]) % 2
    if name == "A2":
        return int(2 * a[0] + a[1]) % 3
    if name == "C2":
        return int(a[0]) % 2
    return 0  # G2
