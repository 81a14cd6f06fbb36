"""Exact scalars: Q, number fields, rational function fields, extensions."""
import operator

from ..errors import DivisionByZero, TowerMismatch
from .base import Field, FieldElement
from .extension import ExtElem, NumberField, SignOracle, SimpleExtension, sign_at
from .funcfield import FracElem, FunctionField, MPoly
from .maps import (TowerMap, apply_field_involution, commutes_with_involution,
                   galois_automorphism, identity_map)
from .rationals import QQ, Rat

_OPS = {"add": operator.add, "sub": operator.sub, "mul": operator.mul, "div": operator.truediv}


def field_arith(lhs, rhs, op):
    """Exact ``lhs op rhs`` for ``op`` in add/sub/mul/div."""
    if isinstance(lhs, FieldElement) and isinstance(rhs, FieldElement):
        if not (lhs.field.contains_field(rhs.field) or rhs.field.contains_field(lhs.field)):
            raise TowerMismatch(f"{lhs.field} vs {rhs.field}")
    return _OPS[op](lhs, rhs)


def cyclotomic3():
    """``Q(eps)`` with ``eps^2 + eps + 1 = 0`` and ``eps* = eps^2``."""
    K = NumberField("eps", [1, 1, 1])
    K.set_involution(K.gen**2)
    return K


__all__ = [
    "Field", "FieldElement", "QQ", "Rat", "NumberField", "SimpleExtension", "ExtElem",
    "SignOracle", "sign_at", "FunctionField", "FracElem", "MPoly", "TowerMap",
    "apply_field_involution", "galois_automorphism", "commutes_with_involution",
    "identity_map", "field_arith", "cyclotomic3", "DivisionByZero", "TowerMismatch",
]
