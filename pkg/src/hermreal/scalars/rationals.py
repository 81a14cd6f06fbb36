"""The prime field Q, wrapping :class:`fractions.Fraction`."""
from __future__ import annotations

from fractions import Fraction

from .base import Field, FieldElement


class RationalField(Field):
    base = None

    def __init__(self):
        self._conj_images = {}

    def from_rational(self, q):
        return Rat(Fraction(q))

    def conj(self, e):
        return self(e)

    def __repr__(self):
        return "QQ"

    __str__ = __repr__


class Rat(FieldElement):
    __slots__ = ("value",)

    def __init__(self, value):
        self.field = QQ
        self.value = Fraction(value)

    def _add(self, other):
        return Rat(self.value + other.value)

    def _mul(self, other):
        return Rat(self.value * other.value)

    def _neg(self):
        return Rat(-self.value)

    def _inverse(self):
        return Rat(1 / self.value)

    def is_zero(self):
        return self.value == 0

    def _key(self):
        return self.value

    def as_rational(self):
        return self.value

    def __str__(self):
        v = self.value
        if v.denominator == 1:
            return str(v.numerator)
        return f"{v.numerator}/{v.denominator}"

    def __lt__(self, other):
        return self.value < Fraction(other.value if isinstance(other, Rat) else other)


QQ = RationalField()
