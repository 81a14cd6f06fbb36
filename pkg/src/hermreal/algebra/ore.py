"""The quantum plane ``k<x, y>/(yx - q xy)`` and graded-lex leading terms.

Symbol algebras over ``k(a, b)`` are skew fields of fractions of such a
plane once ``a = x^n`` and ``b = y^n`` are substituted; ``from_symbol``
performs that substitution for elements with polynomial coefficients.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..errors import HostMismatch, NotInvertible, ZeroElement
from ..scalars.base import FieldElement
from ..scalars.extension import format_term, join_terms
from .base import AlgebraElement, AlgebraInvolution


def grlex_key(mon):
    m, n = mon
    return (m + n, m, n)


@dataclass(frozen=True)
class LeadingTerm:
    coefficient: object
    exponent: tuple

    def __iter__(self):
        return iter((self.coefficient, self.exponent))


def leading_term(u, order=grlex_key):
    """Greatest monomial of ``u`` (symbol algebra or plane) with its coefficient."""
    if u.is_zero():
        raise ZeroElement("zero has no leading term")
    mon = max(u.coeffs, key=order)
    return LeadingTerm(u.coeffs[mon], mon)


class QuantumPlane:
    def __init__(self, k, q, names=("x", "y")):
        self.F = k
        self.q = k(q)
        self.names = tuple(names)
        self.one = self(1)

    def __call__(self, v):
        if isinstance(v, AlgebraElement):
            if v.algebra is not self:
                raise HostMismatch("element of a different algebra")
            return v
        if isinstance(v, (int, Fraction, FieldElement)) and not isinstance(v, bool):
            return AlgebraElement(self, {(0, 0): self.F(v)})
        raise TypeError(f"cannot coerce {v!r} into {self}")

    def monomial(self, m, n, c=None):
        c = self.F.one if c is None else self.F(c)
        return AlgebraElement(self, {(m, n): c})

    @property
    def x(self):
        return self.monomial(1, 0)

    @property
    def y(self):
        return self.monomial(0, 1)

    def generator_names(self):
        return self.names

    def twist(self, n, p):
        """Scalar with ``y^n x^p = twist * x^p y^n``."""
        return self.q ** (n * p)

    def mul(self, u, v):
        out = {}
        for (m, n), c in u.coeffs.items():
            for (p, r), d in v.coeffs.items():
                mon = (m + p, n + r)
                t = c * d * self.twist(n, p)
                out[mon] = out[mon] + t if mon in out else t
        return AlgebraElement(self, out)

    def inverse(self, u):
        u = self(u)
        if len(u.coeffs) == 1 and (0, 0) in u.coeffs:
            return self(u.coeffs[(0, 0)].inverse())
        raise NotInvertible("only nonzero constants are units of the plane")

    def involution(self, x_image, y_image, check=True):
        return AlgebraInvolution(self, {self.names[0]: x_image, self.names[1]: y_image},
                                 check=check)

    def spanning_set(self, degree=3):
        return [self.monomial(m, n) for m in range(degree) for n in range(degree)]

    def prepare_involution(self, inv):
        inv._mono_star = {}

    def _mono_star(self, inv, mon):
        cache = inv._mono_star
        if mon not in cache:
            m, n = mon
            xs = inv.images.get(self.names[0], self.x)
            ys = inv.images.get(self.names[1], self.y)
            cache[mon] = (ys**n) * (xs**m)
        return cache[mon]

    def apply_involution(self, u, inv):
        u = self(u)
        acc = {}
        for mon, c in u.coeffs.items():
            cs = self.F.conj(c)
            for m2, d in self._mono_star(inv, mon).coeffs.items():
                t = cs * d
                acc[m2] = acc[m2] + t if m2 in acc else t
        return AlgebraElement(self, acc)

    def from_symbol(self, u):
        """Image of a symbol-algebra element whose coefficients are polynomials
        in the center's variables ``a, b`` over ``k``."""
        D = u.algebra
        F = D.F
        n = D.n
        ia, ib = F.variables.index("a"), F.variables.index("b")
        out = {}
        for (i, j), c in u.coeffs.items():
            if not c.is_polynomial():
                raise ValueError(f"coefficient {c} is not a polynomial")
            den = c.den.terms[(0,) * F.nvars]
            for e, coef in c.num.terms.items():
                if any(k for idx, k in enumerate(e) if idx not in (ia, ib)):
                    raise ValueError("coefficient involves variables other than a, b")
                mon = (i + n * e[ia], j + n * e[ib])
                t = self.F(coef / den)
                out[mon] = out[mon] + t if mon in out else t
        return AlgebraElement(self, out)

    def format(self, u):
        xn, yn = self.names
        terms = []
        for m, n in sorted(u.coeffs, key=grlex_key, reverse=True):
            parts = []
            if m:
                parts.append(xn if m == 1 else f"{xn}^{m}")
            if n:
                parts.append(yn if n == 1 else f"{yn}^{n}")
            terms.append(format_term(str(u.coeffs[(m, n)]), "*".join(parts)))
        return join_terms(terms)

    def __repr__(self):
        return f"QuantumPlane(q={self.q})"
