import random
from fractions import Fraction

import pytest

import weylorbits as w


@pytest.fixture
def rng():
    return random.Random(987123)


def random_dominant(rs, rng, hi=3, nonzero=True):
    while True:
        coords = tuple(rng.randrange(hi + 1) for _ in range(rs.rank))
        if not nonzero or any(coords):
            return w.weight(rs, coords)


def random_strict(rs, rng, hi=3):
    return w.weight(rs, tuple(rng.randrange(1, hi + 1) for _ in range(rs.rank)))


def random_rational_point(rs, rng, den=40):
    coords = tuple(Fraction(rng.randrange(-2 * den, 2 * den), den)
                   for _ in range(rs.rank))
    return w.point(rs, coords)


def random_interior_point(rs, rng):
    """Random point strictly inside the fundamental simplex."""
    cuts = sorted(rng.uniform(0.03, 0.97) for _ in range(rs.rank))
    bary = [cuts[0]] + [cuts[i + 1] - cuts[i] for i in range(rs.rank - 1)]
    bary.append(1.0 - cuts[-1])
    return w.barycentric_point(rs, bary)
