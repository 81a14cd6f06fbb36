"""Left regular representation over a maximal subfield, the Gram matrix
``A = [f(e_i* e_j)]`` and the involution ``X -> A^-1 X* A`` it induces."""
from __future__ import annotations

from functools import cached_property

from . import linalg
from .errors import BasisDecompositionFailure, NotInvertible, SingularGram
from .matrix import Matrix
from .projection import SubfieldPresentation, default_presentation, projection_f


def k_involution(p: SubfieldPresentation, inv):
    """The involution restricted to K, as a function on K."""
    K = p.K
    xs = p.to_K(inv(p.x))
    if xs == K.gen:
        return K.conj
    powers = [K.one]
    for _ in range(1, K.degree):
        powers.append(powers[-1] * xs)
    base_conj = K.base.conj

    def conj(k):
        k = K(k)
        acc = K.zero
        for c, pw in zip(k.coeffs, powers):
            if not c.is_zero():
                acc = acc + pw * base_conj(c)
        return acc

    return conj


class RepresentationContext:
    """Immutable once built; the Gram matrix and its inverse are cached."""

    def __init__(self, algebra, involution, presentation=None, basis=None):
        self.algebra = algebra
        self.involution = involution
        p = presentation or default_presentation(algebra, involution)
        self.presentation = p
        self.K = p.K
        self.basis = list(basis) if basis is not None else list(p.basis)
        self.n = len(self.basis)
        self._native = basis is None and p._native and \
            all(u == v for u, v in zip(self.basis, algebra.right_basis()))
        self.kconj = k_involution(p, involution)
        if not self._native:
            self._span = []
            gens = [p.embed(self.K.gen**m) for m in range(self.K.degree)]
            for e in self.basis:
                for g in gens:
                    self._span.append(algebra.f_coords(e * g))

    def coords(self, u):
        """``k_1..k_n`` in K with ``u = sum_i e_i k_i``."""
        u = self.algebra(u)
        if self._native:
            return self.algebra.right_coords(u)
        sol = linalg.solve_in_span(self._span, self.algebra.f_coords(u))
        if sol is None:
            raise BasisDecompositionFailure(f"{u} is not in the right K-span of the basis")
        d = self.K.degree
        return [self.K.element(sol[i * d:(i + 1) * d]) for i in range(self.n)]

    def from_coords(self, ks):
        acc = self.algebra(0)
        for e, k in zip(self.basis, ks):
            acc = acc + e * self.presentation.embed(k)
        return acc

    def lambda_rep(self, a):
        cols = [self.coords(a * e) for e in self.basis]
        return Matrix(self.K, [[cols[j][i] for j in range(self.n)] for i in range(self.n)])

    @cached_property
    def gram(self):
        inv = self.involution
        stars = [inv(e) for e in self.basis]
        rows = [[projection_f(s * e, self.presentation) for e in self.basis] for s in stars]
        A = Matrix(self.K, rows)
        if A.det().is_zero():
            raise SingularGram("Gram matrix is singular; the basis is not a right K-basis")
        return A

    @cached_property
    def gram_inverse(self):
        return self.gram.inverse()

    def star(self, X):
        return X.star(self.kconj)

    def sharp(self, X):
        return self.gram_inverse * self.star(X) * self.gram

    def solve_left(self, u):
        u = self.algebra(u)
        if u.is_zero():
            raise NotInvertible("zero has no inverse")
        L = self.lambda_rep(u)
        try:
            w = L.solve(self.coords(self.algebra.one))
        except NotInvertible as exc:
            raise NotInvertible(f"{u} is not invertible") from exc
        return self.from_coords(w)


def lambda_rep(a, ctx: RepresentationContext):
    return ctx.lambda_rep(a)


def gram_matrix(ctx: RepresentationContext):
    return ctx.gram


def extend_involution(X, ctx: RepresentationContext):
    return ctx.sharp(X)


def solve_left(u, ctx: RepresentationContext):
    return ctx.solve_left(u)
