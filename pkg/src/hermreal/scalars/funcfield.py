"""Multivariate rational function fields over Q or a number field.

Polynomials are sparse ``{exponent tuple: coefficient}`` maps.  Fractions
are kept reduced, with the denominator's graded-lex leading coefficient
equal to one, so that equal values have equal representations.  The gcd
used for the reduction is delegated to sympy's sparse polynomial rings.
"""
from __future__ import annotations

from fractions import Fraction

from .base import Field, FieldElement
from .extension import NumberField, _wrap, format_term, join_terms
from .rationals import QQ


def grlex_key(exp):
    return (sum(exp), exp)


class MPoly:
    """Immutable sparse polynomial; coefficients are base-field elements."""

    __slots__ = ("terms", "nvars")

    def __init__(self, terms, nvars):
        self.terms = {e: c for e, c in terms.items() if not c.is_zero()}
        self.nvars = nvars

    @classmethod
    def const(cls, c, nvars):
        return cls({(0,) * nvars: c}, nvars)

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return not self.terms or list(self.terms) == [(0,) * self.nvars]

    def leading(self):
        e = max(self.terms, key=grlex_key)
        return e, self.terms[e]

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out[e] + c if e in out else c
        return MPoly(out, self.nvars)

    def __neg__(self):
        return MPoly({e: -c for e, c in self.terms.items()}, self.nvars)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, MPoly):
            out = {}
            for e1, c1 in self.terms.items():
                for e2, c2 in other.terms.items():
                    e = tuple(a + b for a, b in zip(e1, e2))
                    t = c1 * c2
                    out[e] = out[e] + t if e in out else t
            return MPoly(out, self.nvars)
        return MPoly({e: c * other for e, c in self.terms.items()}, self.nvars)

    def map_coeffs(self, fn):
        return MPoly({e: fn(c) for e, c in self.terms.items()}, self.nvars)

    def key(self):
        return tuple(sorted((e, c._key()) for e, c in self.terms.items()))

    def __eq__(self, other):
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def to_str(self, names):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=grlex_key, reverse=True):
            c = self.terms[e]
            mon = "*".join(
                n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k
            )
            parts.append(format_term(str(c), mon))
        return join_terms(parts)


class _SympyBridge:
    """Conversion to sympy sparse rings for gcd computations."""

    def __init__(self, base, nvars):
        from sympy import QQ as SQQ, CRootOf, Symbol
        from sympy.polys.rings import ring

        self.base = base
        if base is QQ:
            self.dom = SQQ
        else:
            t = Symbol("t")
            m = sum(c.value * t**i for i, c in enumerate(base.minpoly))
            self.dom = SQQ.algebraic_field(CRootOf(m, 0))
        names = ",".join(f"v{i}" for i in range(max(nvars, 1)))
        self.ring = ring(names, self.dom)[0]
        self.nvars = nvars

    def _coeff_to(self, c):
        if self.base is QQ:
            return self.dom.convert(c.value)
        return self.dom([v.value for v in reversed(c.coeffs)])

    def _coeff_from(self, c):
        if self.base is QQ:
            return QQ(Fraction(int(c.numerator), int(c.denominator)))
        vals = [Fraction(int(q.numerator), int(q.denominator)) for q in c.to_list()]
        return self.base.element(list(reversed(vals)))

    def to(self, p):
        return self.ring({e: self._coeff_to(c) for e, c in p.terms.items()})

    def back(self, sp):
        return MPoly({tuple(e): self._coeff_from(c) for e, c in sp.items()}, self.nvars)

    def cofactors(self, p, q):
        h, cp, cq = self.to(p).cofactors(self.to(q))
        return self.back(cp), self.back(cq)


class FunctionField(Field):
    """``base(v_1, ..., v_k)``; the involution acts on coefficients by the
    base involution and fixes every variable."""

    def __init__(self, base, variables):
        if not (base is QQ or (isinstance(base, NumberField))):
            raise TypeError("function fields are built over Q or a number field")
        self.base = base
        self.variables = tuple(variables)
        self.nvars = len(self.variables)
        self._bridge = None
        self._conj_images = {}

    @property
    def bridge(self):
        if self._bridge is None:
            self._bridge = _SympyBridge(self.base, self.nvars)
        return self._bridge

    def poly_const(self, c):
        return MPoly.const(self.base(c), self.nvars)

    def var(self, name):
        i = self.variables.index(name)
        exp = tuple(1 if k == i else 0 for k in range(self.nvars))
        return FracElem(self, MPoly({exp: self.base.one}, self.nvars), self.poly_const(1))

    def gens(self):
        return {v: self.var(v) for v in self.variables}

    def from_rational(self, q):
        return FracElem(self, self.poly_const(q), self.poly_const(1))

    def _lift(self, e):
        return FracElem(self, self.poly_const(e), self.poly_const(1))

    def fraction(self, num, den):
        return FracElem.make(self, num, den)

    def conj(self, e):
        e = self(e)
        if self.base.has_trivial_involution():
            return e
        c = self.base.conj
        return FracElem(self, e.num.map_coeffs(c), e.den.map_coeffs(c))

    def __repr__(self):
        return f"{self.base!r}({', '.join(self.variables)})"

    __str__ = __repr__


def _monomial_gcd(p, q):
    exps = list(p.terms) + list(q.terms)
    return tuple(min(e[i] for e in exps) for i in range(p.nvars))


def _div_monomial(p, m):
    return MPoly({tuple(a - b for a, b in zip(e, m)): c for e, c in p.terms.items()}, p.nvars)


class FracElem(FieldElement):
    __slots__ = ("num", "den")

    def __init__(self, field, num, den):
        # callers guarantee normal form; use FracElem.make otherwise
        self.field = field
        self.num = num
        self.den = den

    @staticmethod
    def make(field, num, den):
        if den.is_zero():
            from ..errors import DivisionByZero

            raise DivisionByZero("zero denominator")
        if num.is_zero():
            return FracElem(field, num, field.poly_const(1))
        if not den.is_constant():
            if len(den.terms) == 1 or len(num.terms) == 1:
                m = _monomial_gcd(num, den)
                num, den = _div_monomial(num, m), _div_monomial(den, m)
            elif not num.is_constant():
                num, den = field.bridge.cofactors(num, den)
        _, lc = den.leading()
        if lc != 1:
            inv = lc.inverse()
            num, den = num * inv, den * inv
        return FracElem(field, num, den)

    def _add(self, other):
        f = self.field
        if self.den == other.den:
            return FracElem.make(f, self.num + other.num, self.den)
        return FracElem.make(f, self.num * other.den + other.num * self.den, self.den * other.den)

    def _neg(self):
        return FracElem(self.field, -self.num, self.den)

    def _mul(self, other):
        return FracElem.make(self.field, self.num * other.num, self.den * other.den)

    def _inverse(self):
        return FracElem.make(self.field, self.den, self.num)

    def is_zero(self):
        return self.num.is_zero()

    def _key(self):
        return (self.num.key(), self.den.key())

    def as_rational(self):
        if self.num.is_constant() and self.den.is_constant():
            n = self.num.terms.get((0,) * self.field.nvars)
            d = self.den.terms[(0,) * self.field.nvars]
            if n is None:
                return Fraction(0)
            n, d = n.as_rational(), d.as_rational()
            if n is None or d is None:
                return None
            return n / d
        return None

    def in_base(self):
        if self.num.is_constant() and self.den.is_constant():
            z = (0,) * self.field.nvars
            n = self.num.terms.get(z, self.field.base.zero)
            return n / self.den.terms[z]
        return None

    def is_polynomial(self):
        return self.den.is_constant()

    def __hash__(self):
        b = self.in_base()
        if b is not None:
            return hash(b)
        return hash(self._key())

    def __str__(self):
        names = self.field.variables
        n = self.num.to_str(names)
        if self.den.is_constant():
            d = self.den.terms[(0,) * self.field.nvars]
            if d == 1:
                return n
            return f"{_wrap(n)}/{_wrap(str(d))}"
        d = self.den.to_str(names)
        return f"{_wrap(n)}/{d if d.isidentifier() else '(' + d + ')'}"
