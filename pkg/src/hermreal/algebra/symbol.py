"""Symbol algebras ``F<x, y | x^n = a, y^n = b, yx = eps*xy>``.

Elements are stored on the monomial basis ``x^i y^j`` (0 <= i, j < n) with
coefficients in the center ``F``.
"""
from __future__ import annotations

from fractions import Fraction

from ..errors import InvalidPresentation, NotInK
from ..scalars.base import FieldElement
from ..scalars.extension import ExtElem, SimpleExtension, format_term, join_terms
from .base import AlgebraElement, AlgebraInvolution, RegularRepresentationMixin


class SymbolAlgebra(RegularRepresentationMixin):
    def __init__(self, F, n, a, b, eps, names=("x", "y"), aliases=None, K=None):
        if n < 2:
            raise InvalidPresentation("degree must be at least 2")
        self.F = F
        self.n = n
        self.a = F(a)
        self.b = F(b)
        self.eps = F(eps)
        self.names = tuple(names)
        self.aliases = dict(aliases or {})
        if self.a.is_zero() or self.b.is_zero():
            raise InvalidPresentation("a and b must be nonzero")
        if self.eps**n != F.one:
            raise InvalidPresentation("eps is not an n-th root of unity")
        if any(self.eps**k == F.one for k in range(1, n)):
            raise InvalidPresentation("eps is not a primitive n-th root of unity")
        self.eps_pow = [self.eps**k for k in range(n)]
        self.monomials = [(i, j) for i in range(n) for j in range(n)]
        self._table = {}
        for i, j in self.monomials:
            for k, l in self.monomials:
                c = self.eps_pow[(j * k) % n]
                if i + k >= n:
                    c = c * self.a
                if j + l >= n:
                    c = c * self.b
                self._table[(i, j, k, l)] = ((i + k) % n, (j + l) % n), c
        minpoly = [-self.a] + [F.zero] * (n - 1) + [F.one]
        if K is None:
            K = SimpleExtension(F, self.names[0], minpoly, check=False)
        elif K.base is not F or list(K.minpoly) != minpoly:
            raise InvalidPresentation(f"subfield must be F[t]/(t^{n} - a)")
        self.K = K
        self.one = self(1)

    # construction ---------------------------------------------------------
    def __call__(self, v):
        if isinstance(v, AlgebraElement):
            if v.algebra is not self:
                raise TypeError("element of a different algebra")
            return v
        if isinstance(v, ExtElem) and v.field is self.K:
            return self.from_K(v)
        if isinstance(v, (int, Fraction, FieldElement)) and not isinstance(v, bool):
            return AlgebraElement(self, {(0, 0): self.F(v)})
        raise TypeError(f"cannot coerce {v!r} into {self}")

    def monomial(self, i, j, c=None):
        c = self.F.one if c is None else self.F(c)
        return AlgebraElement(self, {(i % self.n, j % self.n): c})

    @property
    def x(self):
        return self.monomial(1, 0)

    @property
    def y(self):
        return self.monomial(0, 1)

    def gens(self):
        return {self.names[0]: self.x, self.names[1]: self.y}

    def generator_names(self):
        return self.names

    def basis(self):
        return [self.monomial(i, j) for i, j in self.monomials]

    spanning_set = basis
    f_basis = basis

    def f_coords(self, u):
        u = self(u)
        return [u.coeffs.get(m, self.F.zero) for m in self.monomials]

    def from_f_coords(self, cs):
        return AlgebraElement(self, dict(zip(self.monomials, (self.F(c) for c in cs))))

    # multiplication -------------------------------------------------------
    def mul(self, u, v):
        out = {}
        table = self._table
        for (i, j), c in u.coeffs.items():
            for (k, l), d in v.coeffs.items():
                m, t = table[(i, j, k, l)]
                t = c * d * t
                out[m] = out[m] + t if m in out else t
        return AlgebraElement(self, out)

    # the maximal subfield K = F(x) and right K-coordinates ---------------
    def from_K(self, k):
        k = self.K(k)
        return AlgebraElement(self, {(i, 0): c for i, c in enumerate(k.coeffs)})

    def to_K(self, u):
        u = self(u)
        if any(j for (_, j) in u.coeffs):
            raise NotInK(f"{u} is not in {self.names[0]}-subfield")
        cs = [self.F.zero] * self.n
        for (i, _), c in u.coeffs.items():
            cs[i] = c
        return self.K.element(cs)

    def right_basis(self):
        return [self.monomial(0, j) for j in range(self.n)]

    def right_coords(self, u):
        """``k_0, ..., k_{n-1}`` in K with ``u = sum_j y^j k_j``."""
        u = self(u)
        F, n = self.F, self.n
        cols = [[F.zero] * n for _ in range(n)]
        for (i, j), c in u.coeffs.items():
            cols[j][i] = c * self.eps_pow[(-i * j) % n]
        return [self.K.element(cs) for cs in cols]

    def from_right_coords(self, ks):
        acc = AlgebraElement(self, {})
        for j, k in enumerate(ks):
            acc = acc + self.monomial(0, j) * self.from_K(k)
        return acc

    # involutions ----------------------------------------------------------
    def involution(self, x_image, y_image, check=True):
        return AlgebraInvolution(
            self, {self.names[0]: x_image, self.names[1]: y_image}, check=check)

    def prepare_involution(self, inv):
        xs = inv.images.get(self.names[0], self.x)
        ys = inv.images.get(self.names[1], self.y)
        xp = [self.one]
        yp = [self.one]
        for _ in range(1, self.n):
            xp.append(xp[-1] * xs)
            yp.append(yp[-1] * ys)
        inv._mono_star = {(i, j): yp[j] * xp[i] for i, j in self.monomials}

    def apply_involution(self, u, inv):
        u = self(u)
        conj = self.F.conj
        acc = {}
        for m, c in u.coeffs.items():
            cs = conj(c)
            for m2, d in inv._mono_star[m].coeffs.items():
                t = cs * d
                acc[m2] = acc[m2] + t if m2 in acc else t
        return AlgebraElement(self, acc)

    # display --------------------------------------------------------------
    def mono_str(self, i, j):
        if (i, j) in self.aliases:
            return self.aliases[(i, j)]
        xn, yn = self.names
        parts = []
        if i:
            parts.append(xn if i == 1 else f"{xn}^{i}")
        if j:
            parts.append(yn if j == 1 else f"{yn}^{j}")
        return "*".join(parts)

    def format(self, u):
        terms = []
        for i, j in sorted(u.coeffs, key=lambda m: (m[0] + m[1], m), reverse=True):
            terms.append(format_term(str(u.coeffs[(i, j)]), self.mono_str(i, j)))
        return join_terms(terms)

    def __repr__(self):
        return f"SymbolAlgebra(n={self.n}, a={self.a}, b={self.b}, eps={self.eps})"


def quaternion(F, a, b, names=("i", "j"), K=None):
    """The quaternion algebra ``(a, b)_F``: ``i^2 = a, j^2 = b, ji = -ij``."""
    return SymbolAlgebra(F, 2, a, b, -1, names=names, aliases={(1, 1): "k"}, K=K)
