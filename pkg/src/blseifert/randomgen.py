"""Seeded generators for admissible polynomials, ladder parameters and moves."""

from __future__ import annotations

import random

from .exactmat import IntMatrix
from .ladder import LadderParams
from .laurent import LaurentPoly
from .seifert import SymmetricPresentation, canonical, reconstruct


def random_ladder(rng: random.Random, max_l: int = 6, max_v: int = 5) -> LadderParams:
    l = rng.randint(0, max_l)
    v = [rng.randint(-max_v, max_v) for _ in range(l)]
    eps = [rng.choice((1, -1)) for _ in range(max(l - 1, 0))]
    return LadderParams(v, eps)


def random_admissible(
    rng: random.Random, max_m: int = 3, max_pairs: int = 6, max_exp: int = 3, max_coeff: int = 5
) -> LaurentPoly:
    """Delta = sum c (t^a + t^-a) + 1 - 2 sum c with distinct canonical a."""
    m = rng.randint(1, max_m)
    available = ((2 * max_exp + 1) ** m - 1) // 2
    k = min(rng.randint(0, max_pairs), available)
    pairs: dict[tuple[int, ...], int] = {}
    while len(pairs) < k:
        alpha = tuple(rng.randint(-max_exp, max_exp) for _ in range(m))
        if any(alpha):
            pairs[canonical(alpha)] = rng.choice([c for c in range(-max_coeff, max_coeff + 1) if c])
    return reconstruct(SymmetricPresentation(m, tuple(sorted(pairs.items(), reverse=True))))


def random_unimodular(rng: random.Random, n: int, moves: int = 6) -> IntMatrix:
    """Product of random elementary operations; determinant +-1."""
    p = [[int(i == j) for j in range(n)] for i in range(n)]
    if n == 0:
        return p
    for _ in range(moves):
        kind = rng.random()
        i, j = rng.randrange(n), rng.randrange(n)
        if kind < 0.6 and i != j:
            f = rng.choice((-2, -1, 1, 2))
            p[i] = [x + f * y for x, y in zip(p[i], p[j])]
        elif kind < 0.8:
            p[i], p[j] = p[j], p[i]
        else:
            p[i] = [-x for x in p[i]]
    return p


def random_block_unimodular(rng: random.Random, sizes) -> IntMatrix:
    n = sum(sizes)
    p = [[0] * n for _ in range(n)]
    off = 0
    for s in sizes:
        blk = random_unimodular(rng, s)
        for r in range(s):
            for c in range(s):
                p[off + r][off + c] = blk[r][c]
        off += s
    return p
