"""Seeded random elements for property checks and sampled oracles."""
from __future__ import annotations

import random
from fractions import Fraction

from .matrix import Matrix
from .scalars.extension import SimpleExtension
from .scalars.funcfield import FunctionField, MPoly
from .scalars.rationals import QQ


def rng_for(seed):
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def random_rational(rng, bound=3, allow_zero=True):
    while True:
        q = Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
        if q or allow_zero:
            return q


def random_element(F, seed=0, bound=3, degree=1, density=0.6):
    """A random element of any field in the tower (small coefficients)."""
    rng = rng_for(seed)
    if F is QQ:
        return QQ(random_rational(rng, bound))
    if isinstance(F, FunctionField):
        terms = {}
        for d in range(degree + 1):
            for _ in range(2):
                e = [0] * F.nvars
                for _ in range(d):
                    e[rng.randrange(F.nvars)] += 1
                if rng.random() < density:
                    terms[tuple(e)] = random_element(F.base, rng, bound)
        return F.fraction(MPoly(terms, F.nvars), F.poly_const(1))
    if isinstance(F, SimpleExtension):
        cs = [random_element(F.base, rng, bound, degree, density) if rng.random() < density
              else F.base.zero for _ in range(F.degree)]
        return F.element(cs)
    raise TypeError(f"no sampler for {F!r}")


def random_nonzero(F, seed=0, **kw):
    rng = rng_for(seed)
    while True:
        e = random_element(F, rng, **kw)
        if not e.is_zero():
            return e


def random_algebra_element(D, seed=0, bound=3, density=0.5, degree=0):
    """Random combination of the F-basis with small coefficients."""
    rng = rng_for(seed)
    acc = D(0)
    for e in D.basis():
        if rng.random() < density:
            acc = acc + e * random_element(D.F, rng, bound, degree)
    return acc


def random_nonzero_algebra_element(D, seed=0, **kw):
    rng = rng_for(seed)
    while True:
        u = random_algebra_element(D, rng, **kw)
        if not u.is_zero():
            return u


def random_matrix(K, n, seed=0, bound=3, degree=0, density=0.7):
    rng = rng_for(seed)
    return Matrix(K, [[random_element(K, rng, bound, degree) if rng.random() < density
                       else K.zero for _ in range(n)] for _ in range(n)])


def random_invertible_matrix(K, n, seed=0, **kw):
    rng = rng_for(seed)
    while True:
        P = random_matrix(K, n, rng, **kw)
        if not P.det().is_zero():
            return P


def random_hermitian_matrix(K, n, seed=0, conj=None, eps=1, **kw):
    """``X + eps X*`` for a random ``X``."""
    rng = rng_for(seed)
    conj = conj or K.conj
    X = random_matrix(K, n, rng, **kw)
    return X + X.star(conj) * K(eps)


def random_alternating_matrix(n, seed=0, bound=5):
    rng = rng_for(seed)
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            v = Fraction(rng.randint(-bound, bound))
            rows[i][j] = v
            rows[j][i] = -v
    return Matrix(QQ, rows)
