"""Shared test utilities: independent oracles and random generators.

The oracles here deliberately use different algorithms from the library
(Gaussian elimination over Fraction instead of the triangular recursion,
cofactor expansion instead of Bareiss) so that agreement is evidence, not
tautology.
"""

from __future__ import annotations

import random
from fractions import Fraction

from bott_towers import GeneralFan, IntegralSequence, Poset


def fraction_inverse(matrix):
    """Invert a square integer matrix by Gauss-Jordan over Fraction.

    Returns a list of lists of Fraction.  Raises ZeroDivisionError on a
    singular matrix.
    """
    n = len(matrix)
    aug = [[Fraction(matrix[i][j]) for j in range(n)]
           + [Fraction(1 if i == j else 0) for j in range(n)]
           for i in range(n)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = Fraction(1) / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [a - factor * b for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def minor_det(matrix):
    """Determinant by cofactor expansion along the first row (exact)."""
    n = len(matrix)
    if n == 1:
        return matrix[0][0]
    total = 0
    for j in range(n):
        if matrix[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1:] for row in matrix[1:]]
        sign = -1 if j % 2 else 1
        total += sign * matrix[0][j] * minor_det(minor)
    return total


def mat_mul(a, b):
    """Plain integer matrix product (test-side)."""
    return [[sum(a[i][t] * b[t][j] for t in range(len(b)))
             for j in range(len(b[0]))] for i in range(len(a))]


def mat_id(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def random_sequence(rng: random.Random, n: int, lo: int = -9, hi: int = 9,
                    density: float = 1.0) -> IntegralSequence:
    """Random upper-triangular integral sequence with entries in [lo, hi]."""
    entries = {}
    for i in range(1, n):
        for j in range(i + 1, n + 1):
            if density >= 1.0 or rng.random() < density:
                entries[(i, j)] = rng.randint(lo, hi)
    return IntegralSequence(n, entries)


def random_unimodular(rng: random.Random, n: int, steps: int = 12):
    """Random element of GL_n(Z) built from elementary row operations."""
    m = mat_id(n)
    for _ in range(steps):
        op = rng.randrange(3)
        i = rng.randrange(n)
        j = rng.randrange(n)
        if op == 0 and i != j:
            factor = rng.choice([-3, -2, -1, 1, 2, 3])
            m[i] = [a + factor * b for a, b in zip(m[i], m[j])]
        elif op == 1 and i != j:
            m[i], m[j] = m[j], m[i]
        else:
            m[i] = [-a for a in m[i]]
    return m


def random_poset(rng: random.Random, n: int, p: float = 0.4) -> Poset:
    """Random poset on [1..n] whose identity labeling is a linear extension."""
    relation = [(i, j) for i in range(1, n) for j in range(i + 1, n + 1)
                if rng.random() < p]
    return Poset(n, relation)


def permute_rays(rng: random.Random, fan: GeneralFan) -> GeneralFan:
    """Relabel the rays of a fan by a random permutation."""
    m = len(fan.rays)
    perm = list(range(m))
    rng.shuffle(perm)
    # perm[old] = new position
    new_rays = [None] * m
    for old, new in enumerate(perm):
        new_rays[new] = fan.rays[old]
    new_cones = [tuple(perm[i] for i in cone) for cone in fan.cones]
    return GeneralFan(fan.dim, new_rays, new_cones)
