"""Simple algebraic extensions ``base[t]/(m(t))`` and number fields over Q."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction

from ..errors import InvalidPresentation, NotRealEmbeddable
from . import upoly
from .base import Field, FieldElement
from .rationals import QQ

log = logging.getLogger(__name__)


def _wrap(s):
    return f"({s})" if any(ch in s for ch in "+- ") and not _is_atom(s) else s


def format_term(cs, mon):
    """Render ``coefficient*monomial`` for a coefficient string ``cs``."""
    if not mon:
        return cs
    if cs == "1":
        return mon
    if cs == "-1":
        return "-" + mon
    if cs.startswith("-") and " + " not in cs and " - " not in cs:
        return "-" + _wrap(cs[1:]) + "*" + mon
    return f"{_wrap(cs)}*{mon}"


def join_terms(terms):
    if not terms:
        return "0"
    out = terms[0]
    for t in terms[1:]:
        out += " - " + t[1:] if t.startswith("-") and not t.startswith("-(") else " + " + t
    return out


def _is_atom(s):
    if s.startswith("-"):
        s = s[1:]
    return s.replace("/", "").isdigit()


class SimpleExtension(Field):
    """``base[name]/(minpoly)`` with ``minpoly`` monic and irreducible.

    The designated involution acts on the base by the base involution and
    sends the generator to ``conj_image`` (the generator itself by default).
    """

    def __init__(self, base, name, minpoly, check=True):
        self.base = base
        self.name = name
        coeffs = upoly.trim([base(c) for c in minpoly])
        if len(coeffs) < 2:
            raise InvalidPresentation(f"minimal polynomial of {name} has degree < 1")
        lead = coeffs[-1]
        self.minpoly = tuple(c / lead for c in coeffs)
        self.degree = len(self.minpoly) - 1
        self._conj_coeffs = None  # image of the generator under conj
        self._conj_images = {}
        self._gen_conj_powers = None
        if check:
            self._check_minpoly()

    def _check_minpoly(self):
        pass

    # construction helpers -------------------------------------------------
    def element(self, coeffs):
        coeffs = [self.base(c) for c in coeffs]
        if len(coeffs) > self.degree:
            _, r = upoly.divmod_(coeffs, list(self.minpoly))
            coeffs = r
        coeffs = coeffs + [self.base.zero] * (self.degree - len(coeffs))
        return ExtElem(self, tuple(coeffs))

    def from_rational(self, q):
        return self.element([self.base.from_rational(q)])

    def _lift(self, e):
        return self.element([e])

    @property
    def gen(self):
        return self.element([self.base.zero, self.base.one])

    def gens(self):
        return {self.name: self.gen}

    def set_involution(self, image):
        """Declare the image of the generator under the involution."""
        image = self(image)
        self._conj_coeffs = image.coeffs
        self._conj_images = {self.name: image}
        self._gen_conj_powers = None
        g = self.gen
        if self.conj(self.conj(g)) != g:
            raise InvalidPresentation(f"involution on {self.name} has order > 2")
        conj_min = [self.base.conj(c) for c in self.minpoly]
        if not upoly.evaluate(conj_min, image, self.zero).is_zero():
            raise InvalidPresentation(
                f"image of {self.name} is not a root of the conjugate minimal polynomial")
        return self

    def conj(self, e):
        e = self(e)
        cs = [self.base.conj(c) for c in e.coeffs]
        if self._conj_coeffs is None or self._conj_is_identity():
            return ExtElem(self, tuple(cs))
        if self._gen_conj_powers is None:
            img = ExtElem(self, self._conj_coeffs)
            pw = [self.one]
            for _ in range(1, self.degree):
                pw.append(pw[-1] * img)
            self._gen_conj_powers = pw
        acc = self.zero
        for c, p in zip(cs, self._gen_conj_powers):
            if not c.is_zero():
                acc = acc + p * c
        return acc

    def _conj_is_identity(self):
        z = self.base.zero
        one = self.base.one
        return all(
            (c == one if i == 1 else c == z) for i, c in enumerate(self._conj_coeffs)
        )

    def multiplication_matrix(self, e):
        """Matrix over the base of ``v -> e*v`` in the basis ``1, t, ..., t^(d-1)``."""
        e = self(e)
        cols = []
        g = self.gen
        basis_el = self.one
        for _ in range(self.degree):
            cols.append((e * basis_el).coeffs)
            basis_el = basis_el * g
        return [[cols[j][i] for j in range(self.degree)] for i in range(self.degree)]

    def trace(self, e):
        """Trace of multiplication by ``e`` over the base field."""
        m = self.multiplication_matrix(e)
        acc = self.base.zero
        for i in range(self.degree):
            acc = acc + m[i][i]
        return acc

    def __repr__(self):
        return f"{self.base!r}[{self.name}]"

    __str__ = __repr__


class ExtElem(FieldElement):
    __slots__ = ("coeffs",)

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = coeffs

    def _add(self, other):
        return ExtElem(self.field, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def _neg(self):
        return ExtElem(self.field, tuple(-a for a in self.coeffs))

    def _mul(self, other):
        f = self.field
        prod = upoly.mul(self.coeffs, other.coeffs)
        if len(prod) > f.degree:
            prod = upoly.divmod_(prod, list(f.minpoly))[1]
        prod = list(prod) + [f.base.zero] * (f.degree - len(prod))
        return ExtElem(f, tuple(prod))

    def _inverse(self):
        f = self.field
        g, s, _ = upoly.xgcd(list(self.coeffs), list(f.minpoly), f.base.one)
        if len(g) != 1:
            raise InvalidPresentation(f"minimal polynomial of {f.name} is reducible")
        return f.element(s)

    def is_zero(self):
        return all(c.is_zero() for c in self.coeffs)

    def _key(self):
        return tuple(c._key() for c in self.coeffs)

    def as_rational(self):
        if all(c.is_zero() for c in self.coeffs[1:]):
            return self.coeffs[0].as_rational()
        return None

    def in_base(self):
        """The value as an element of the base field, or None."""
        if all(c.is_zero() for c in self.coeffs[1:]):
            return self.coeffs[0]
        return None

    def __hash__(self):
        b = self.in_base()
        if b is not None:
            return hash(b)
        return hash((self.field.name, self._key()))

    def __str__(self):
        name = self.field.name
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c.is_zero():
                continue
            mon = "" if i == 0 else (name if i == 1 else f"{name}^{i}")
            terms.append(format_term(str(c), mon))
        return join_terms(terms)


# --- number fields -----------------------------------------------------------

IRREDUCIBILITY_CHECK_MAX_DEGREE = 6


class NumberField(SimpleExtension):
    """A simple extension of Q, optionally with real embeddings given by
    isolating intervals with rational endpoints."""

    def __init__(self, name, minpoly, embeddings=(), check=True):
        super().__init__(QQ, name, minpoly, check=check)
        self.embeddings = []
        self._sturm = upoly.sturm_sequence(self.minpoly_q)
        for lo, hi in embeddings:
            self.add_embedding(lo, hi)

    @property
    def minpoly_q(self):
        return [c.value for c in self.minpoly]

    def _check_minpoly(self):
        import sympy

        if self.degree > IRREDUCIBILITY_CHECK_MAX_DEGREE:
            log.warning("minimal polynomial of %s has degree %d; irreducibility trusted",
                        self.name, self.degree)
            return
        t = sympy.Symbol("t")
        poly = sympy.Poly(list(reversed([c.value for c in self.minpoly])), t, domain="QQ")
        if not poly.is_irreducible:
            raise InvalidPresentation(f"minimal polynomial of {self.name} is reducible over Q")

    def add_embedding(self, lo, hi):
        lo, hi = Fraction(lo), Fraction(hi)
        if not lo < hi:
            raise InvalidPresentation("embedding interval must have lo < hi")
        m = self.minpoly_q
        if upoly.evaluate(m, lo, Fraction(0)) == 0 or upoly.evaluate(m, hi, Fraction(0)) == 0:
            raise InvalidPresentation("embedding interval endpoint is a root")
        if upoly.count_roots(m, lo, hi, self._sturm) != 1:
            raise InvalidPresentation(
                f"interval ({lo}, {hi}) does not isolate exactly one root of the minimal polynomial")
        oracle = SignOracle(self, lo, hi)
        self.embeddings.append(oracle)
        return oracle

    def __repr__(self):
        return f"QQ[{self.name}]"

    __str__ = __repr__


@dataclass(frozen=True)
class SignOracle:
    """A real embedding of a number field, fixed by an isolating interval."""

    field: NumberField
    lo: Fraction
    hi: Fraction

    def sign(self, e):
        return sign_at(e, self)

    def approx(self, e, width=Fraction(1, 10**6)):
        """An interval of the requested width containing the embedded generator."""
        lo, hi = self.lo, self.hi
        m = self.field.minpoly_q
        seq = self.field._sturm
        while hi - lo > width:
            mid = (lo + hi) / 2
            if upoly.count_roots(m, lo, mid, seq) == 1:
                hi = mid
            else:
                lo = mid
        return lo, hi

    def describe(self):
        return f"{self.field.name} in ({self.lo}, {self.hi})"


def _qsign(q):
    return (q > 0) - (q < 0)


def sign_at(e, oracle=None):
    """Exact sign (-1, 0, 1) of ``e`` under a real embedding.

    Rational constants need no oracle.  Other number-field elements are
    decided by refining the isolating interval of the generator until the
    element's polynomial has no root on it.
    """
    if isinstance(e, (int, Fraction)):
        return _qsign(Fraction(e))
    q = e.as_rational()
    if q is not None:
        return _qsign(q)
    if oracle is None:
        raise NotRealEmbeddable(f"no real embedding given for {e}")
    if hasattr(oracle, "sign") and not isinstance(oracle, SignOracle):
        return oracle.sign(e)
    field = oracle.field
    try:
        e = field(e)
    except TypeError as exc:
        raise NotRealEmbeddable(str(exc)) from exc
    if field.conj(e) != e:
        raise NotRealEmbeddable(f"{e} is not symmetric")
    p = upoly.trim([c.value for c in e.coeffs])
    lo, hi = oracle.lo, oracle.hi
    m = field.minpoly_q
    seq_m = field._sturm
    seq_p = upoly.sturm_sequence(upoly.squarefree_part(p))
    while upoly.count_roots(p, lo, hi, seq_p) > 0:
        mid = (lo + hi) / 2
        if upoly.count_roots(m, lo, mid, seq_m) == 1:
            hi = mid
        else:
            lo = mid
    return _qsign(upoly.evaluate(p, hi, Fraction(0)))
