"""Shared element type and involution wrapper for finite-dimensional algebras."""
from __future__ import annotations

from fractions import Fraction

from .. import linalg
from ..errors import HostMismatch, InvalidPresentation, NotInvertible
from ..scalars.base import FieldElement


class AlgebraElement:
    """Sparse coefficient map over the host algebra's basis.

    Zero coefficients are never stored, so equality is map equality.
    """

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra, coeffs):
        self.algebra = algebra
        self.coeffs = {k: c for k, c in coeffs.items() if not c.is_zero()}

    def _other(self, other):
        if isinstance(other, AlgebraElement):
            if other.algebra is not self.algebra:
                raise HostMismatch("elements of different algebras")
            return other
        if isinstance(other, (int, Fraction, FieldElement)) and not isinstance(other, bool):
            return self.algebra(other)
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        out = dict(self.coeffs)
        for k, c in o.coeffs.items():
            out[k] = out[k] + c if k in out else c
        return AlgebraElement(self.algebra, out)

    __radd__ = __add__

    def __neg__(self):
        return AlgebraElement(self.algebra, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self.algebra.mul(self, o)

    def __rmul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self.algebra.mul(o, self)

    def __truediv__(self, other):
        if isinstance(other, AlgebraElement):
            return self * self.algebra.inverse(other)
        if isinstance(other, (int, Fraction)):
            return self * self.algebra(1 / Fraction(other))
        if isinstance(other, FieldElement):
            return self * self.algebra(other.inverse())
        return NotImplemented

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.algebra.inverse(self) ** (-k)
        result = self.algebra.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def _key(self):
        return frozenset((k, c._key()) for k, c in self.coeffs.items())

    def __eq__(self, other):
        if isinstance(other, AlgebraElement):
            return other.algebra is self.algebra and self._key() == other._key()
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self._key() == o._key()

    def __hash__(self):
        return hash(self._key())

    def __str__(self):
        return self.algebra.format(self)

    def __repr__(self):
        return f"<{self}>"


class AlgebraInvolution:
    """An involution given by generator images; scalars are acted on by
    the tower involution of the coefficient field."""

    def __init__(self, algebra, images, check=True):
        self.algebra = algebra
        self.images = {name: algebra(img) for name, img in images.items()}
        unknown = set(self.images) - set(algebra.generator_names())
        if unknown:
            raise InvalidPresentation(f"unknown generator(s) {sorted(unknown)}")
        algebra.prepare_involution(self)
        if check:
            report = self.validate()
            if report:
                raise InvalidPresentation(f"not an involution: {report[:3]}")

    def __call__(self, u):
        return self.algebra.apply_involution(u, self)

    apply = __call__

    def validate(self):
        """Failures of ``(uv)* = v*u*`` and ``u** = u`` on a spanning set."""
        failures = []
        span = self.algebra.spanning_set()
        stars = [self(u) for u in span]
        for u, us in zip(span, stars):
            if self(us) != u:
                failures.append(("order", str(u)))
        for u, us in zip(span, stars):
            for v, vs in zip(span, stars):
                if self(u * v) != vs * us:
                    failures.append(("anti", str(u), str(v)))
        return failures

    def is_first_kind(self):
        return self.algebra.F.has_trivial_involution()


def apply_involution(u, inv):
    return inv(u)


def multiply(u, v):
    if u.algebra is not v.algebra:
        raise HostMismatch("elements of different algebras")
    return u.algebra.mul(u, v)


class RegularRepresentationMixin:
    """Inversion through the F-linear left regular representation.

    Hosts provide ``basis()``, ``f_coords(u)`` and ``from_f_coords(cs)``.
    """

    def left_matrix(self, u):
        """Matrix over F of ``w -> u*w`` on the F-basis."""
        cols = [self.f_coords(u * e) for e in self.basis()]
        N = len(cols)
        return [[cols[c][r] for c in range(N)] for r in range(N)]

    def inverse(self, u):
        u = self(u)
        if u.is_zero():
            raise NotInvertible("zero has no inverse")
        rhs = self.f_coords(self.one)
        return self.from_f_coords(linalg.solve(self.left_matrix(u), rhs))
