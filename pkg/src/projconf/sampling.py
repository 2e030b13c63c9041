"""Random exact test data: invertible matrices, configurations, generic parameters."""
from __future__ import annotations

import random
from fractions import Fraction

from .families import ProjParam, pair_in_generic_locus
from .linalg import ProjConfig, determinant


def random_fraction(rng: random.Random, bound: int = 9) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, 4))


def random_invertible(n: int, rng: random.Random, bound: int = 9) -> list[list[Fraction]]:
    while True:
        g = [[random_fraction(rng, bound) for _ in range(n)] for _ in range(n)]
        if determinant(g) != 0:
            return g


def random_vector(n: int, rng: random.Random, bound: int = 5) -> tuple[Fraction, ...]:
    while True:
        v = tuple(Fraction(rng.randint(-bound, bound)) for _ in range(n))
        if any(v):
            return v


def random_structured_config(n: int, m: int, rng: random.Random) -> ProjConfig:
    """Random points with frequent coincidences and small linear dependencies.

    Plain uniform sampling almost always lands in the generic stratum; this
    mixes repeats, pair combinations and triple combinations so degenerate
    rank matrices turn up regularly.
    """
    pts: list[tuple[Fraction, ...]] = []
    for _ in range(m):
        roll = rng.random()
        if pts and roll < 0.25:
            pts.append(rng.choice(pts))
        elif len(pts) >= 2 and roll < 0.5:
            a, b = rng.sample(pts, 2)
            s, t = rng.choice([1, 2, -1, 3]), rng.choice([1, -2, 1, 5])
            w = tuple(s * x + t * y for x, y in zip(a, b))
            pts.append(w if any(w) else random_vector(n, rng))
        elif len(pts) >= 3 and roll < 0.65:
            a, b, c = rng.sample(pts, 3)
            w = tuple(x + 2 * y - 3 * z for x, y, z in zip(a, b, c))
            pts.append(w if any(w) else random_vector(n, rng))
        else:
            pts.append(random_vector(n, rng))
    rng.shuffle(pts)
    return ProjConfig(tuple(pts))


def random_generic_param(kind: str, rng: random.Random, bound: int = 30):
    """A uniformly drawn rational parameter in the generic locus of the given kind."""
    while True:
        if kind == "P1xP1":
            p = ProjParam((Fraction(1), Fraction(rng.randint(-bound, bound), rng.randint(1, 5))))
            q = ProjParam((Fraction(1), Fraction(rng.randint(-bound, bound), rng.randint(1, 5))))
            if pair_in_generic_locus(p, q):
                return (p, q)
            continue
        size = 3 if kind == "P2" else 2
        p = ProjParam((Fraction(1),) + tuple(Fraction(rng.randint(-bound, bound), rng.randint(1, 5)) for _ in range(size - 1)))
        if p.in_generic_locus():
            return p
