"""Common machinery for the field tower: coercion and operator dispatch.

Every concrete field is a level in a tower that starts at :data:`QQ`.  An
element of a lower level can be used wherever an element of a higher level
is expected; the lift is done by :meth:`Field.__call__`.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational as _RationalABC

from ..errors import DivisionByZero, TowerMismatch


class Field:
    """A level of a field tower."""

    base: "Field | None" = None
    # name -> image of that generator under the designated involution
    _conj_images: dict

    def tower(self):
        fields = []
        f = self
        while f is not None:
            fields.append(f)
            f = f.base
        return fields[::-1]

    def contains_field(self, other):
        return any(f is other for f in self.tower())

    @property
    def zero(self):
        return self.from_rational(0)

    @property
    def one(self):
        return self.from_rational(1)

    def from_rational(self, q):
        raise NotImplementedError

    def _lift(self, e):
        """Lift an element of ``self.base`` to ``self``."""
        raise NotImplementedError

    def __call__(self, x):
        if isinstance(x, FieldElement):
            if x.field is self:
                return x
            if self.base is None or not self.contains_field(x.field):
                raise TowerMismatch(f"cannot coerce element of {x.field} into {self}")
            return self._lift(self.base(x))
        if isinstance(x, (int, Fraction, _RationalABC)) and not isinstance(x, bool):
            return self.from_rational(Fraction(x))
        raise TypeError(f"cannot coerce {x!r} into {self}")

    def gens(self):
        """Generators introduced at this level, as ``{name: element}``."""
        return {}

    def all_gens(self):
        out = {}
        for f in self.tower():
            for name, g in f.gens().items():
                out[name] = self(g)
        return out

    def conj(self, e):
        """Designated involution of the tower."""
        raise NotImplementedError

    def has_trivial_involution(self):
        return all(self.conj(g) == g for g in self.all_gens().values())


def _common(a, b):
    """Bring two operands to a common field, or return ``None``."""
    if isinstance(b, FieldElement):
        if a.field is b.field:
            return a, b
        if a.field.contains_field(b.field):
            return a, a.field(b)
        if b.field.contains_field(a.field):
            return b.field(a), b
        raise TowerMismatch(f"{a.field} and {b.field} are not in one tower")
    if isinstance(b, (int, Fraction)) and not isinstance(b, bool):
        return a, a.field.from_rational(Fraction(b))
    return None


class FieldElement:
    """Base class; subclasses implement the underscore primitives on
    operands of the same field."""

    __slots__ = ("field",)

    # primitives -----------------------------------------------------------
    def _add(self, other):
        raise NotImplementedError

    def _mul(self, other):
        raise NotImplementedError

    def _neg(self):
        raise NotImplementedError

    def _inverse(self):
        raise NotImplementedError

    def is_zero(self):
        raise NotImplementedError

    def _key(self):
        raise NotImplementedError

    # operators ------------------------------------------------------------
    def __add__(self, other):
        c = _common(self, other)
        if c is None:
            return NotImplemented
        return c[0]._add(c[1])

    def __radd__(self, other):
        c = _common(self, other)
        if c is None:
            return NotImplemented
        return c[1]._add(c[0])

    def __sub__(self, other):
        c = _common(self, other)
        if c is None:
            return NotImplemented
        return c[0]._add(c[1]._neg())

    def __rsub__(self, other):
        c = _common(self, other)
        if c is None:
            return NotImplemented
        return c[1]._add(c[0]._neg())

    def __mul__(self, other):
        c = _common(self, other)
        if c is None:
            return NotImplemented
        return c[0]._mul(c[1])

    def __rmul__(self, other):
        c = _common(self, other)
        if c is None:
            return NotImplemented
        return c[1]._mul(c[0])

    def __truediv__(self, other):
        c = _common(self, other)
        if c is None:
            return NotImplemented
        return c[0]._mul(c[1].inverse())

    def __rtruediv__(self, other):
        c = _common(self, other)
        if c is None:
            return NotImplemented
        return c[1]._mul(c[0].inverse())

    def __neg__(self):
        return self._neg()

    def __pos__(self):
        return self

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = self.field.one
        base = self
        while k:
            if k & 1:
                result = result._mul(base)
            base = base._mul(base)
            k >>= 1
        return result

    def inverse(self):
        if self.is_zero():
            raise DivisionByZero(f"inverse of zero in {self.field}")
        return self._inverse()

    def conj(self):
        return self.field.conj(self)

    def __eq__(self, other):
        try:
            c = _common(self, other)
        except TowerMismatch:
            return False
        if c is None:
            return NotImplemented
        return c[0]._key() == c[1]._key()

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        # lower-level values hash equal to their lifts only when constant;
        # rational constants hash like the Fraction
        q = self.as_rational()
        if q is not None:
            return hash(q)
        return hash((id(self.field), self._key()))

    def __bool__(self):
        return not self.is_zero()

    def as_rational(self):
        """The value as a Fraction if it is a rational constant, else None."""
        raise NotImplementedError

    def __repr__(self):
        return f"{type(self).__name__}({self})"
